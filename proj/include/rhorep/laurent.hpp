#pragma once

#include <array>
#include <map>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "rhorep/cyclo.hpp"

namespace rhorep {

/// Exponent triple (a, b, c) of the monomial q^a s^b t^c.
using Exp3 = std::array<int, 3>;

/// Laurent polynomial in q, s and polynomial in t with integer coefficients.
class LPoly3 {
 public:
  LPoly3() = default;
  LPoly3(long c);  // NOLINT: constants convert implicitly
  static LPoly3 monomial(int a, int b, int c = 0, const mpz_class& coeff = 1);
  static LPoly3 q() { return monomial(1, 0, 0); }
  static LPoly3 s() { return monomial(0, 1, 0); }
  static LPoly3 t() { return monomial(0, 0, 1); }

  const std::map<Exp3, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Multiplicative inverse of a monomial with coefficient +-1.
  LPoly3 monomial_inverse() const;
  int max_t_degree() const;

  LPoly3 operator-() const;
  LPoly3& operator+=(const LPoly3& o);
  LPoly3& operator-=(const LPoly3& o);
  friend LPoly3 operator+(LPoly3 a, const LPoly3& b) { return a += b; }
  friend LPoly3 operator-(LPoly3 a, const LPoly3& b) { return a -= b; }
  friend LPoly3 operator*(const LPoly3& a, const LPoly3& b);
  LPoly3& operator*=(const LPoly3& o) { return *this = *this * o; }
  friend bool operator==(const LPoly3& a, const LPoly3& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LPoly3& a, const LPoly3& b) { return !(a == b); }

  /// Substitute q = s = 1, leaving a polynomial in t.
  LPoly3 at_qs_one() const;
  std::string to_string() const;

 private:
  void add_term(const Exp3& e, const mpz_class& c);
  std::map<Exp3, mpz_class> terms_;
};

inline LPoly3 zero_like(const LPoly3&) { return LPoly3(); }
inline LPoly3 one_like(const LPoly3&) { return LPoly3(1); }

/// Quotient num/den of LPoly3; den is never zero.
class LRat {
 public:
  LRat() : num_(0), den_(1) {}
  LRat(LPoly3 num);  // NOLINT
  LRat(LPoly3 num, LPoly3 den);

  const LPoly3& num() const { return num_; }
  const LPoly3& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LRat operator-() const { return LRat(-num_, den_); }
  friend LRat operator+(const LRat& a, const LRat& b);
  friend LRat operator-(const LRat& a, const LRat& b) { return a + (-b); }
  friend LRat operator*(const LRat& a, const LRat& b);
  friend LRat operator/(const LRat& a, const LRat& b);
  LRat& operator+=(const LRat& o) { return *this = *this + o; }
  LRat& operator-=(const LRat& o) { return *this = *this - o; }
  LRat& operator*=(const LRat& o) { return *this = *this * o; }
  LRat& operator/=(const LRat& o) { return *this = *this / o; }
  friend bool operator==(const LRat& a, const LRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const LRat& a, const LRat& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  LPoly3 num_, den_;
};

inline LRat zero_like(const LRat&) { return LRat(); }
inline LRat one_like(const LRat&) { return LRat(LPoly3(1)); }

/// Evaluate at q = q0, s = s0, t = t0 in a cyclotomic field.
CycNum specialize(const LPoly3& p, const CycNum& q0, const CycNum& s0, const CycNum& t0);
/// As above; throws std::domain_error naming the denominator when it vanishes.
CycNum specialize(const LRat& p, const CycNum& q0, const CycNum& s0, const CycNum& t0);

nlohmann::json to_json_value(const LPoly3& p);
nlohmann::json to_json_value(const LRat& p);
LPoly3 lpoly_from_json(const nlohmann::json& j);

}  // namespace rhorep
