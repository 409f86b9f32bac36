#pragma once

#include "jcf/errors.hpp"
#include "jcf/exp.hpp"
#include "jcf/jordan.hpp"
#include "jcf/linalg.hpp"
#include "jcf/matrix.hpp"
#include "jcf/nilpotent.hpp"
#include "jcf/poly.hpp"
#include "jcf/rational.hpp"
