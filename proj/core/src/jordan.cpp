#include "jcf/jordan.hpp"

#include <algorithm>
#include <string>

#include "jcf/linalg.hpp"
#include "jcf/nilpotent.hpp"

namespace jcf {

IrrationalSpectrum::IrrationalSpectrum(Poly residual)
    : Error("characteristic polynomial has no rational factorization: residual " + residual.str()),
      residual_(std::move(residual)) {}

Poly char_poly(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("char_poly requires a square matrix");
  const std::size_t n = a.rows();
  // c[k] is the coefficient of x^k; M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k.
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Mat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rational(static_cast<std::int64_t>(k));
  }
  return Poly(std::move(c));
}

Spectrum eigenvalues(const Mat& a) {
  const Poly p = char_poly(a);
  if (p.degree() == 0) return {};
  auto roots = rational_roots(p);
  if (roots.residual.degree() > 0) throw IrrationalSpectrum(roots.residual);
  Spectrum s;
  for (const auto& r : roots.roots) s.pairs.push_back({r.root, r.multiplicity});
  return s;
}

std::vector<Vector> generalized_eigenspace(const Mat& a, const Rational& lambda, std::size_t multiplicity) {
  auto basis = nullspace_basis(mat_pow(shift(a, lambda), multiplicity));
  if (basis.size() != multiplicity) {
    throw DimensionMismatch("generalized eigenspace at " + lambda.str() + " has dimension " +
                            std::to_string(basis.size()) + ", expected " + std::to_string(multiplicity));
  }
  return basis;
}

Mat restrict_to(const Mat& a, std::span<const Vector> basis) {
  if (!a.is_square()) throw DimensionMismatch("restrict_to requires a square matrix");
  const Mat b = Mat::from_columns(basis, a.rows());
  try {
    return solve_right(b, a * b);
  } catch (const NoSolution&) {
    throw NotInvariant("subspace is not invariant under the operator");
  }
}

Mat jordan_matrix(std::span<const EigenBlocks> blocks) {
  std::size_t n = 0;
  for (const auto& eb : blocks)
    for (auto s : eb.sizes) n += s;
  Mat j(n, n);
  std::size_t offset = 0;
  for (const auto& eb : blocks) {
    for (auto s : eb.sizes) {
      for (std::size_t k = 0; k < s; ++k) {
        j(offset + k, offset + k) = eb.eigenvalue;
        if (k + 1 < s) j(offset + k, offset + k + 1) = Rational(1);
      }
      offset += s;
    }
  }
  return j;
}

JordanDecomposition jordan_form(const Mat& a) {
  if (!a.is_square() || a.rows() == 0) throw DimensionMismatch("jordan_form requires a nonempty square matrix");
  const Spectrum spectrum = eigenvalues(a);
  const std::size_t n = a.rows();

  JordanDecomposition out;
  std::vector<Vector> columns;
  columns.reserve(n);
  for (const auto& [lambda, mult] : spectrum.pairs) {
    const auto basis = generalized_eigenspace(a, lambda, mult);
    const Mat b = Mat::from_columns(basis, n);
    const Mat nil = shift(restrict_to(a, basis), lambda);
    const auto dec = block_generators(nil);

    EigenBlocks eb{lambda, dec.heights()};
    for (const auto& chain : dec.chains) {
      auto local = chain_vectors(nil, chain.generator, chain.height);
      for (auto it = local.rbegin(); it != local.rend(); ++it) columns.push_back(b * *it);
    }
    out.spectrum_blocks.push_back(std::move(eb));
  }
  out.p = Mat::from_columns(columns, n);
  out.j = jordan_matrix(out.spectrum_blocks);
  return out;
}

std::optional<Mat> similar(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionMismatch("similar requires square matrices");
  if (a.rows() != b.rows()) throw DimensionMismatch("similar requires matrices of equal dimension");
  const auto ja = jordan_form(a);
  const auto jb = jordan_form(b);
  if (ja.spectrum_blocks != jb.spectrum_blocks) return std::nullopt;
  Mat s = ja.p * inverse(jb.p);
  if (a * s != s * b) throw InternalInconsistency("similarity witness failed verification");
  return s;
}

std::optional<std::vector<EigenBlocks>> jordan_structure(const Mat& j) {
  if (!j.is_square()) return std::nullopt;
  const std::size_t n = j.rows();
  std::vector<EigenBlocks> blocks;
  std::size_t start = 0;
  while (start < n) {
    const Rational lambda = j(start, start);
    std::size_t end = start + 1;
    while (end < n && j(end - 1, end) == Rational(1) && j(end, end) == lambda) ++end;
    if (blocks.empty() || blocks.back().eigenvalue != lambda) blocks.push_back({lambda, {}});
    blocks.back().sizes.push_back(end - start);
    start = end;
  }
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (!(blocks[k - 1].eigenvalue < blocks[k].eigenvalue)) return std::nullopt;
  }
  for (const auto& eb : blocks) {
    if (!std::is_sorted(eb.sizes.rbegin(), eb.sizes.rend())) return std::nullopt;
  }
  if (jordan_matrix(blocks) != j) return std::nullopt;
  return blocks;
}

bool validate_decomposition(const Mat& a, const JordanDecomposition& dec) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  if (dec.p.rows() != n || dec.p.cols() != n || dec.j.rows() != n || dec.j.cols() != n) return false;
  for (const auto& eb : dec.spectrum_blocks) {
    if (eb.sizes.empty()) return false;
    if (std::find(eb.sizes.begin(), eb.sizes.end(), 0U) != eb.sizes.end()) return false;
  }
  const auto structure = jordan_structure(dec.j);
  if (!structure || *structure != dec.spectrum_blocks) return false;
  if (rank(dec.p) != n) return false;
  return a * dec.p == dec.p * dec.j;
}

}  // namespace jcf
