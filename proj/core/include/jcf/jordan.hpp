#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jcf/errors.hpp"
#include "jcf/matrix.hpp"
#include "jcf/poly.hpp"

namespace jcf {

/// Characteristic polynomial has a factor with no rational root.
class IrrationalSpectrum : public Error {
 public:
  explicit IrrationalSpectrum(Poly residual);
  const Poly& residual() const { return residual_; }

 private:
  Poly residual_;
};

struct Eigenvalue {
  Rational value;
  std::size_t algebraic_multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Distinct eigenvalues in ascending order.
struct Spectrum {
  std::vector<Eigenvalue> pairs;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Block sizes (descending) attached to one eigenvalue.
struct EigenBlocks {
  Rational eigenvalue;
  std::vector<std::size_t> sizes;
  friend bool operator==(const EigenBlocks&, const EigenBlocks&) = default;
};

struct JordanDecomposition {
  /// Ascending eigenvalue, sizes descending within each.
  std::vector<EigenBlocks> spectrum_blocks;
  Mat j;
  /// a * p == p * j
  Mat p;
};

/// det(xI - a) by the Faddeev-LeVerrier recursion.
Poly char_poly(const Mat& a);

/// Throws IrrationalSpectrum if char_poly(a) does not split over Q.
Spectrum eigenvalues(const Mat& a);

/// Canonical nullspace basis of (a - lambda*I)^multiplicity.
/// Throws DimensionMismatch if its dimension differs from `multiplicity`.
std::vector<Vector> generalized_eigenspace(const Mat& a, const Rational& lambda, std::size_t multiplicity);

/// The matrix M with a*B = B*M, B = basis as columns. Throws NotInvariant.
Mat restrict_to(const Mat& a, std::span<const Vector> basis);

/// Canonical Jordan matrix for the given block data, in the given order.
Mat jordan_matrix(std::span<const EigenBlocks> blocks);

JordanDecomposition jordan_form(const Mat& a);

/// S with S^{-1} a S == b, or nullopt when the Jordan data differ.
/// Throws DimensionMismatch for non-square or differently sized inputs.
std::optional<Mat> similar(const Mat& a, const Mat& b);

/// True iff p is invertible, a*p == p*j, spectrum_blocks is in canonical
/// order and j is exactly the Jordan matrix it describes.
bool validate_decomposition(const Mat& a, const JordanDecomposition& dec);

/// Reads block data back from a matrix that is exactly a Jordan matrix in
/// canonical order; nullopt otherwise.
std::optional<std::vector<EigenBlocks>> jordan_structure(const Mat& j);

}  // namespace jcf
