#include "jcf/exp.hpp"

#include <algorithm>
#include <sstream>

#include "jcf/errors.hpp"
#include "jcf/jordan.hpp"
#include "jcf/linalg.hpp"
#include "jcf/nilpotent.hpp"

namespace jcf {

PolyMatrix PolyMatrix::from_coefficients(std::span<const Mat> terms) {
  if (terms.empty()) return {};
  PolyMatrix out(terms.front().rows(), terms.front().cols());
  for (std::size_t r = 0; r < out.rows_; ++r) {
    for (std::size_t c = 0; c < out.cols_; ++c) {
      std::vector<Rational> coeffs;
      coeffs.reserve(terms.size());
      for (const auto& m : terms) coeffs.push_back(m(r, c));
      out(r, c) = Poly(std::move(coeffs));
    }
  }
  return out;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (const auto& p : data_) d = std::max(d, p.degree());
  return d;
}

Mat PolyMatrix::evaluate(const Rational& t) const {
  Mat m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c)(t);
  return m;
}

PolyMatrix PolyMatrix::derivative() const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = poly_derivative(data_[i]);
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("poly matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& c) {
  for (auto& p : data_) p *= c;
  return *this;
}

PolyMatrix operator*(const Mat& a, const PolyMatrix& b) {
  if (a.cols() != b.rows_) throw DimensionMismatch("poly matrix product shape mismatch");
  PolyMatrix out(a.rows(), b.cols_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += b(k, j) * a(i, k);
    }
  return out;
}

namespace {

// sum_{k < terms} t^k/k! * left * nil^k * right
PolyMatrix truncated_series(const Mat& left, const Mat& nil, const Mat& right, std::size_t terms) {
  std::vector<Mat> coeffs;
  Mat power = Mat::identity(nil.rows());
  for (std::size_t k = 0; k < terms; ++k) {
    coeffs.push_back(left * power * right * (Rational(1) / factorial(static_cast<unsigned>(k))));
    power = power * nil;
  }
  return PolyMatrix::from_coefficients(coeffs);
}

}  // namespace

ExpMatrix matrix_exp(const Mat& a, bool cross_check) {
  if (!a.is_square() || a.rows() == 0) throw DimensionMismatch("matrix_exp requires a nonempty square matrix");
  const std::size_t n = a.rows();
  const Spectrum spectrum = eigenvalues(a);

  std::vector<std::vector<Vector>> bases;
  std::vector<Vector> all;
  for (const auto& [lambda, mult] : spectrum.pairs) {
    bases.push_back(generalized_eigenspace(a, lambda, mult));
    all.insert(all.end(), bases.back().begin(), bases.back().end());
  }
  const Mat q_inv = inverse(Mat::from_columns(all, n));

  ExpMatrix out;
  std::size_t offset = 0;
  for (std::size_t e = 0; e < spectrum.pairs.size(); ++e) {
    const auto& [lambda, mult] = spectrum.pairs[e];
    const Mat b = Mat::from_columns(bases[e], n);
    const Mat nil = shift(restrict_to(a, bases[e]), lambda);
    const Mat coords = q_inv.row_block(offset, mult);
    out.terms.push_back({lambda, truncated_series(b, nil, coords, nilpotency_index(nil))});
    offset += mult;
  }

  if (cross_check && matrix_exp_jordan(a) != out) {
    throw InternalInconsistency("generalized-eigenbasis and Jordan exponentials differ");
  }
  return out;
}

ExpMatrix matrix_exp_jordan(const Mat& a) {
  const JordanDecomposition dec = jordan_form(a);
  const Mat p_inv = inverse(dec.p);
  ExpMatrix out;
  std::size_t offset = 0;
  for (const auto& eb : dec.spectrum_blocks) {
    std::size_t m = 0;
    for (auto s : eb.sizes) m += s;
    const Mat nil = shift_blocks(eb.sizes);
    out.terms.push_back(
        {eb.eigenvalue, truncated_series(dec.p.column_block(offset, m), nil, p_inv.row_block(offset, m), eb.sizes.front())});
    offset += m;
  }
  return out;
}

std::string to_string(const ExpMatrix& e) {
  std::ostringstream os;
  for (const auto& term : e.terms) {
    const PolyMatrix& m = term.coeff;
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m(r, c).str("t").size());
    os << "exp(" << term.eigenvalue << "*t) * [\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << "  ";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const std::string s = m(r, c).str("t");
        if (c > 0) os << "  ";
        os << std::string(width[c] - s.size(), ' ') << s;
      }
      os << '\n';
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace jcf
