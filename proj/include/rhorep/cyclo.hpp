#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace rhorep {

class CycNum;

/// Cyclotomic field Q(zeta) with zeta = exp(i*pi/(2r)), stored as Q[x]/Phi_{4r}(x).
/// Instances are interned per r and live for the whole process.
class CycField {
 public:
  static const CycField& get(int r);

  int r() const { return r_; }
  int order() const { return 4 * r_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Phi_{4r} coefficients, constant term first, monic.
  const std::vector<mpz_class>& modulus() const { return modulus_; }

  CycNum zero() const;
  CycNum one() const;
  CycNum rational(const mpq_class& v) const;
  CycNum from_int(long v) const;
  /// zeta^k for any integer k.
  CycNum zeta_pow(long k) const;
  CycNum zeta() const;
  CycNum q() const;
  CycNum q_pow(long k) const;
  /// s = q^{r-1} = -q^{-1}.
  CycNum s() const;
  CycNum s_pow(long k) const;

  /// {x} = q^x - q^{-x}.
  CycNum qnum(long x) const;
  /// [x] = {x}/{1}.
  CycNum qint(long x) const;
  /// [n]! for 0 <= n < r.
  CycNum qfact(long n) const;
  /// Gaussian binomial for 0 <= m <= n < r.
  CycNum qbinom(long n, long m) const;

  /// x^{d+k} mod Phi for k in [0, d-1).
  const std::vector<std::vector<mpz_class>>& reduction() const { return reduction_; }

 private:
  explicit CycField(int r);
  int r_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> reduction_;
  std::vector<std::vector<mpz_class>> zeta_powers_;
  std::vector<CycNum> qint_cache_;
};

/// Element of a CycField; coefficients of 1, x, ..., x^{d-1}.
class CycNum {
 public:
  CycNum() = default;
  CycNum(const CycField& f, std::vector<mpq_class> coeffs);

  const CycField& field() const;
  bool valid() const { return field_ != nullptr; }
  int r() const { return field().r(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q; fills out with that value.
  bool is_rational(mpq_class* out = nullptr) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum inverse() const;
  CycNum pow(long k) const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void check_same(const CycNum& o) const;
  const CycField* field_ = nullptr;
  std::vector<mpq_class> c_;
};

inline CycNum zero_like(const CycNum& x) { return x.field().zero(); }
inline CycNum one_like(const CycNum& x) { return x.field().one(); }

/// Exact JSON form {"r": r, "coeffs": ["p/q", ...]}.
nlohmann::json to_json_value(const CycNum& x);
CycNum cyc_from_json(const nlohmann::json& j);

}  // namespace rhorep
