#pragma once

#include "flatkit/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace flatkit {

// Coefficients of the m-th cyclotomic polynomial, constant term first, monic.
// Built by exact division: Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
std::vector<Int> cyclotomic_polynomial(unsigned m);

namespace detail {
struct CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;
FieldPtr cyclotomic_field(unsigned m);
}  // namespace detail

// An element of Q(zeta_m) = Q[x]/(Phi_m), stored as the canonical residue of
// degree < deg(Phi_m). Phi_m is irreducible over Q, so the quotient is a field
// and division by any nonzero element is exact. Values are immutable;
// arithmetic between different orders is a caller bug and throws.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(zero(1)) {}

  static Cyclotomic zero(unsigned m);
  static Cyclotomic one(unsigned m);
  static Cyclotomic from_rational(unsigned m, const Rational& value);
  // Reduces an arbitrary-degree polynomial (constant term first) mod Phi_m.
  static Cyclotomic from_polynomial(unsigned m, std::vector<Rational> coeffs);
  // zeta_m^k
  static Cyclotomic root_power(unsigned m, unsigned k);

  unsigned order() const;
  // Length deg(Phi_m), constant term first.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  // Comma-separated rational coefficients, constant term first: "1,-1/2".
  std::string str() const;

 private:
  Cyclotomic(detail::FieldPtr field, std::vector<Rational> coeffs);
  void check_same_field(const Cyclotomic& rhs) const;

  detail::FieldPtr field_;
  std::vector<Rational> coeffs_;
};

}  // namespace flatkit
