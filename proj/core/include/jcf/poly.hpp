#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jcf/rational.hpp"

namespace jcf {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient k multiplies x^k. Trailing zero coefficients are always
/// trimmed, so the zero polynomial has no coefficients and every other
/// polynomial has a nonzero leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  /// x - root
  static Poly linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Renders e.g. `x^2 - 3/2*x + 1`; the zero polynomial renders as `0`.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

Poly poly_derivative(const Poly& p);

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
  /// Distinct rational roots, ascending.
  std::vector<RootMultiplicity> roots;
  /// Monic cofactor without rational roots (the constant 1 when p splits).
  Poly residual;
};

/// All rational roots of a monic polynomial with their multiplicities.
///
/// Candidates are p/q with p dividing the constant term and q dividing the
/// leading coefficient of the denominator-cleared integer polynomial;
/// multiplicity is found by repeated exact division. Throws NonMonic.
RationalRoots rational_roots(const Poly& p);

/// Multiplicity of `root` as a zero of p (0 if p(root) != 0). p must be nonzero.
std::size_t root_multiplicity(const Poly& p, const Rational& root);

}  // namespace jcf
