#include "jcf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "jcf/errors.hpp"

namespace jcf {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] / lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeff(j);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_derivative(const Poly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return Poly();
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * Rational(static_cast<std::int64_t>(k));
  return Poly(std::move(d));
}

namespace {

// Divides out (x - r) once; p(r) must be zero.
Poly deflate(const Poly& p, const Rational& r) {
  auto [q, rem] = divmod(p, Poly::linear_factor(r));
  return q;
}

void pollard_factor(const mpz_class& n, std::vector<mpz_class>& primes);

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void pollard_factor(const mpz_class& n, std::vector<mpz_class>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  const mpz_class d = pollard_brent(n);
  pollard_factor(d, primes);
  pollard_factor(n / d, primes);
}

// Prime factorization of n > 0 as (prime, exponent) pairs.
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
  std::vector<mpz_class> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  pollard_factor(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Integer coefficients proportional to p.
std::vector<mpz_class> clear_denominators(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    const mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (l / c.denominator()));
  return out;
}

}  // namespace

std::size_t root_multiplicity(const Poly& p, const Rational& root) {
  if (p.is_zero()) throw Error("root multiplicity of the zero polynomial");
  std::size_t m = 0;
  Poly cur = p;
  while (cur.degree() >= 1 && cur(root).is_zero()) {
    cur = deflate(cur, root);
    ++m;
  }
  return m;
}

RationalRoots rational_roots(const Poly& p) {
  if (!p.is_monic()) throw NonMonic("rational_roots expects a monic polynomial, got " + p.str());
  RationalRoots out;
  Poly cur = p;

  std::size_t zero_mult = 0;
  while (cur.degree() >= 1 && cur.coeff(0).is_zero()) {
    cur = deflate(cur, Rational(0));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});

  if (cur.degree() >= 1) {
    const std::vector<mpz_class> ints = clear_denominators(cur);
    mpz_class a0 = ints.front();
    mpz_class an = ints.back();
    mpz_abs(a0.get_mpz_t(), a0.get_mpz_t());
    mpz_abs(an.get_mpz_t(), an.get_mpz_t());

    // Cauchy bound on root magnitude prunes hopeless candidates.
    Rational bound(0);
    for (std::size_t k = 0; k + 1 < cur.coefficients().size(); ++k) {
      bound = std::max(bound, abs(cur.coeff(k)));
    }
    bound += Rational(1);

    std::vector<Rational> candidates;
    for (const auto& num : positive_divisors(a0)) {
      for (const auto& den : positive_divisors(an)) {
        Rational r(num, den);
        if (r > bound) continue;
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
      if (cur.degree() < 1) break;
      std::size_t m = 0;
      while (cur.degree() >= 1 && cur(r).is_zero()) {
        cur = deflate(cur, r);
        ++m;
      }
      if (m > 0) out.roots.push_back({r, m});
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
  out.residual = cur;
  return out;
}

}  // namespace jcf
