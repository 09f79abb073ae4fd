#include "flatkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace flatkit {

namespace {

// Dense polynomials, constant term first. Trailing zeros are stripped so the
// zero polynomial is the empty vector.

template <typename T>
void strip(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Int> int_poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division of integer polynomials with monic divisor.
std::vector<Int> int_poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1)
    throw std::logic_error("divisor must be monic");
  strip(num);
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    Int c = num[qi + den.size() - 1];
    quot[qi] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
  }
  strip(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  return quot;
}

std::vector<Rational> rat_poly_mul(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Remainder of a rational polynomial modulo a monic integer polynomial.
std::vector<Rational> rat_poly_mod(std::vector<Rational> p, const std::vector<Int>& mod) {
  strip(p);
  while (p.size() >= mod.size()) {
    Rational c = p.back();
    std::size_t shift = p.size() - mod.size();
    for (std::size_t j = 0; j < mod.size(); ++j) p[shift + j] -= c * Rational(mod[j]);
    strip(p);
  }
  return p;
}

// Extended Euclid over Q[x]: returns (g, s) with s*a + t*b = g for some t.
// Only s and g are needed for modular inversion.
struct ExtGcd {
  std::vector<Rational> g;
  std::vector<Rational> s;
};

std::pair<std::vector<Rational>, std::vector<Rational>> rat_poly_divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
  strip(num);
  if (den.empty()) throw std::logic_error("division by zero polynomial");
  std::vector<Rational> quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
  const Rational lead = den.back();
  while (num.size() >= den.size()) {
    Rational c = num.back() / lead;
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    strip(num);
  }
  return {quot, num};
}

ExtGcd rat_poly_ext_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  std::vector<Rational> s0{Rational(1)}, s1{};
  strip(a);
  strip(b);
  while (!b.empty()) {
    auto [q, r] = rat_poly_divmod(a, b);
    a.swap(b);
    b = std::move(r);
    // s_new = s0 - q * s1
    std::vector<Rational> qs = rat_poly_mul(q, s1);
    std::vector<Rational> snew = s0;
    if (snew.size() < qs.size()) snew.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
    strip(snew);
    s0.swap(s1);
    s1 = std::move(snew);
  }
  return {a, s0};
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  // Phi_d for all divisors d of m, ascending.
  std::map<unsigned, std::vector<Int>> phi;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    // x^d - 1
    std::vector<Int> num(d + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    for (const auto& [e, p] : phi) {
      if (d % e == 0) num = int_poly_div_exact(std::move(num), p);
    }
    phi[d] = std::move(num);
  }
  return phi[m];
}

namespace detail {

struct CyclotomicField {
  unsigned order;
  std::vector<Int> modulus;  // Phi_m, monic
  unsigned degree;           // deg Phi_m
};

FieldPtr cyclotomic_field(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto poly = cyclotomic_polynomial(m);
  auto field = std::make_shared<const CyclotomicField>(
      CyclotomicField{m, poly, static_cast<unsigned>(poly.size() - 1)});
  cache.emplace(m, field);
  return field;
}

}  // namespace detail

Cyclotomic::Cyclotomic(detail::FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(field_->degree, Rational(0));
}

Cyclotomic Cyclotomic::zero(unsigned m) {
  auto field = detail::cyclotomic_field(m);
  return Cyclotomic(field, {});
}

Cyclotomic Cyclotomic::one(unsigned m) { return from_rational(m, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(unsigned m, const Rational& value) {
  auto field = detail::cyclotomic_field(m);
  if (field->degree == 0) throw std::logic_error("degenerate cyclotomic field");
  return Cyclotomic(field, {value});
}

Cyclotomic Cyclotomic::from_polynomial(unsigned m, std::vector<Rational> coeffs) {
  auto field = detail::cyclotomic_field(m);
  auto reduced = rat_poly_mod(std::move(coeffs), field->modulus);
  return Cyclotomic(field, std::move(reduced));
}

Cyclotomic Cyclotomic::root_power(unsigned m, unsigned k) {
  std::vector<Rational> p(k % m + 1, Rational(0));
  p.back() = 1;
  return from_polynomial(m, std::move(p));
}

unsigned Cyclotomic::order() const { return field_->order; }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void Cyclotomic::check_same_field(const Cyclotomic& rhs) const {
  if (field_->order != rhs.field_->order)
    throw std::invalid_argument("cyclotomic order mismatch");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  check_same_field(rhs);
  std::vector<Rational> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  check_same_field(rhs);
  std::vector<Rational> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coeffs_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c = -c;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  check_same_field(rhs);
  auto prod = rat_poly_mul(coeffs_, rhs.coeffs_);
  return Cyclotomic(field_, rat_poly_mod(std::move(prod), field_->modulus));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  std::vector<Rational> a(coeffs_);
  strip(a);
  std::vector<Rational> mod(field_->modulus.size());
  for (std::size_t i = 0; i < mod.size(); ++i) mod[i] = Rational(field_->modulus[i]);
  auto gcd = rat_poly_ext_gcd(a, mod);
  // Phi_m irreducible and a != 0 mod Phi_m, so gcd is a nonzero constant.
  if (gcd.g.size() != 1)
    throw std::logic_error("cyclotomic inverse: gcd not constant");
  std::vector<Rational> inv = gcd.s;
  for (auto& c : inv) c /= gcd.g[0];
  return Cyclotomic(field_, rat_poly_mod(std::move(inv), field_->modulus));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  if (field_->order != rhs.field_->order) return false;
  return coeffs_ == rhs.coeffs_;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out << ',';
    out << rational_str(coeffs_[i]);
  }
  return out.str();
}

}  // namespace flatkit
