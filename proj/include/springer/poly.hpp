#ifndef SPRINGER_POLY_HPP
#define SPRINGER_POLY_HPP

// Exact arithmetic: integer polynomials in one variable q, cyclotomic
// polynomials, and elements of the cyclotomic field Q(zeta_e) stored in the
// power basis of Q[x]/(Phi_e(x)).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace springer {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int euler_phi(int e) {
  if (e < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  int result = e;
  int m = e;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline int positive_mod(long long a, long long m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// Polynomial with arbitrary-precision integer coefficients; coefficient i is
/// the coefficient of q^i. Canonical form has no trailing zeros, so the zero
/// polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(Integer(c));
  }
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Integer(0); }

  void add_to_coeff(std::size_t n, const Integer& c) {
    if (coeffs_.size() <= n) coeffs_.resize(n + 1, Integer(0));
    coeffs_[n] += c;
    trim();
  }

  Integer sum_of_coefficients() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// p(q^k).
  IntPolynomial substitute_power(int k) const {
    if (k < 1) throw std::invalid_argument("substitute_power: exponent must be positive");
    if (is_zero()) return {};
    std::vector<Integer> v(static_cast<std::size_t>(degree()) * k + 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  /// q^shift * p(1/q); requires shift >= degree().
  IntPolynomial reflect(int shift) const {
    if (shift < degree()) throw std::invalid_argument("reflect: shift below degree");
    if (is_zero()) return {};
    std::vector<Integer> v(static_cast<std::size_t>(shift) + 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[shift - i] = coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const Integer& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  /// Quotient and remainder by a divisor whose leading coefficient divides
  /// every intermediate leading coefficient; throws otherwise.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("IntPolynomial::divmod: division by zero");
    std::vector<Integer> rem = coeffs_;
    const int dd = d.degree();
    const Integer& lead = d.coeffs_.back();
    std::vector<Integer> quo(degree() >= dd ? static_cast<std::size_t>(degree() - dd + 1) : 0, Integer(0));
    for (int k = degree(); k >= dd; --k) {
      if (rem[k] == 0) continue;
      if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
        throw std::domain_error("IntPolynomial::divmod: quotient is not integral");
      Integer c = rem[k] / lead;
      quo[k - dd] = c;
      for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d.coeffs_[i];
    }
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
  }

  /// Exact division; throws if d does not divide *this.
  IntPolynomial divexact(const IntPolynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("IntPolynomial::divexact: nonzero remainder");
    return q;
  }

  std::string to_string(char var = 'q') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

namespace detail {

// Dense polynomial over Q, used only for reduction and inversion in Q(zeta).
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_ratpoly(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const long long db = static_cast<long long>(b.size()) - 1;
  for (long long k = static_cast<long long>(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    Rational c = a[k] / b.back();
    q[k - db] = c;
    for (long long i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace detail

/// The e-th cyclotomic polynomial, computed recursively as
/// (x^e - 1) / prod_{d | e, d < e} Phi_d(x). Results are memoized; the cache
/// is safe for concurrent use.
inline IntPolynomial cyclotomic_poly(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_poly: e must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(static_cast<std::size_t>(e)) - IntPolynomial(1);
  for (int d = 1; d < e; ++d)
    if (e % d == 0) p = p.divexact(cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(e, p);
  return p;
}

/// Element of Q(zeta_e) = Q[x]/(Phi_e(x)); coordinate i multiplies zeta^i,
/// 0 <= i < phi(e). zeta is the class of x.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor, const Rational& value = 0)
      : e_(conductor), coords_(static_cast<std::size_t>(euler_phi(conductor)), Rational(0)) {
    coords_[0] = value;
  }

  /// Reduces an arbitrary rational polynomial in zeta modulo Phi_e.
  static Cyclotomic from_poly(int e, detail::RatPoly p) {
    Cyclotomic c(e);
    const IntPolynomial& phi = modulus(e);
    const auto& pc = phi.coefficients();
    const std::size_t d = pc.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
      if (p[k] == 0) continue;
      Rational lead = p[k];
      for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= lead * Rational(pc[i]);
    }
    for (std::size_t i = 0; i < d && i < p.size(); ++i) c.coords_[i] = p[i];
    return c;
  }

  /// zeta^j for any integer j.
  static Cyclotomic zeta_power(int e, long long j) {
    detail::RatPoly p(static_cast<std::size_t>(positive_mod(j, e)) + 1, Rational(0));
    p.back() = 1;
    return from_poly(e, std::move(p));
  }

  int conductor() const { return e_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic::to_rational: element is not rational");
    return coords_[0];
  }
  bool is_integer() const { return is_rational() && coords_[0].get_den() == 1; }

  /// Image under the Galois automorphism zeta -> zeta^j (gcd(j, e) = 1).
  Cyclotomic galois(int j) const {
    if (std::gcd(positive_mod(j, e_), e_) != 1) throw std::invalid_argument("Cyclotomic::galois: j not prime to e");
    detail::RatPoly p(static_cast<std::size_t>(e_), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) p[positive_mod(static_cast<long long>(i) * j, e_)] += coords_[i];
    detail::trim(p);
    return from_poly(e_, std::move(p));
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero has no inverse");
    // Extended Euclid in Q[x] on (this, Phi_e); track s with s*this = r mod Phi_e.
    detail::RatPoly r0 = detail::to_ratpoly(modulus(e_)), r1 = coords_;
    detail::trim(r1);
    detail::RatPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
      auto [q, r] = detail::divmod(r0, r1);
      detail::RatPoly s = detail::sub(s0, detail::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_e is irreducible.
    Rational c = r1.at(0);
    for (auto& x : s1) x /= c;
    return from_poly(e_, std::move(s1));
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    if (a.coords_.size() == 1) return Cyclotomic(a.e_, a.coords_[0] * b.coords_[0]);
    detail::RatPoly p(2 * a.coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coords_.size(); ++j) p[i + j] += a.coords_[i] * b.coords_[j];
    }
    return from_poly(a.e_, std::move(p));
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.e_ == b.e_ && a.coords_ == b.coords_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const {
    if (is_rational()) return coords_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coords_[i].get_str() << ")";
      if (i >= 1) os << "*z" << e_;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

 private:
  static const IntPolynomial& modulus(int e) {
    thread_local std::map<int, IntPolynomial> local;
    auto it = local.find(e);
    if (it == local.end()) it = local.emplace(e, cyclotomic_poly(e)).first;
    return it->second;
  }

  void check(const Cyclotomic& o) const {
    if (o.e_ != e_) throw std::invalid_argument("Cyclotomic: mismatched conductors");
  }

  int e_;
  std::vector<Rational> coords_;
};

/// p(zeta^j) in Q(zeta_e), with zeta the power-basis generator.
inline Cyclotomic eval_at_root(const IntPolynomial& p, int e, long long j) {
  if (e < 1) throw std::invalid_argument("eval_at_root: e must be >= 1");
  detail::RatPoly folded(static_cast<std::size_t>(e), Rational(0));
  const auto& c = p.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    folded[positive_mod(static_cast<long long>(n) % e * positive_mod(j, e), e)] += c[n];
  }
  detail::trim(folded);
  return Cyclotomic::from_poly(e, std::move(folded));
}

}  // namespace springer

#endif  // SPRINGER_POLY_HPP
