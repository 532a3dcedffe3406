#include "rhorep/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rhorep {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial.
ZPoly divide_monic(ZPoly num, const ZPoly& den) {
  trim(num);
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  ZPoly quo(num.size() - dd);
  for (size_t k = num.size(); k-- > dd;) {
    mpz_class lead = num[k];
    if (lead == 0) continue;
    quo[k - dd] = lead;
    for (size_t i = 0; i <= dd; ++i) num[k - dd + i] -= lead * den[i];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return quo;
}

ZPoly cyclotomic(int m) {
  static std::map<int, ZPoly> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }
  ZPoly p(static_cast<size_t>(m) + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic(d));
  }
  std::lock_guard<std::mutex> lk(mu);
  memo.emplace(m, p);
  return p;
}

// Polynomial long division over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  const size_t db = b.size() - 1;
  while (!rem.empty() && rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    mpq_class f = rem.back() / b.back();
    quo[shift] = f;
    for (size_t i = 0; i <= db; ++i) rem[shift + i] -= f * b[i];
    trim(rem);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

const CycField& CycField::get(int r) {
  if (r < 2) throw std::invalid_argument("cyclotomic field needs r >= 2, got " + std::to_string(r));
  static std::map<int, std::unique_ptr<CycField>> fields;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = fields.find(r);
  if (it == fields.end()) it = fields.emplace(r, std::unique_ptr<CycField>(new CycField(r))).first;
  return *it->second;
}

CycField::CycField(int r) : r_(r), modulus_(cyclotomic(4 * r)) {
  const size_t d = modulus_.size() - 1;
  // x^d = -sum_{i<d} m_i x^i, then shift repeatedly.
  std::vector<mpz_class> cur(d);
  for (size_t i = 0; i < d; ++i) cur[i] = -modulus_[i];
  for (size_t k = 0; k + 1 < d; ++k) {
    reduction_.push_back(cur);
    mpz_class top = cur[d - 1];
    for (size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (size_t i = 0; i < d; ++i) cur[i] -= top * modulus_[i];
  }
  // zeta^k for k in [0, 4r).
  std::vector<mpz_class> p(d, 0);
  p[0] = 1;
  for (int k = 0; k < 4 * r; ++k) {
    zeta_powers_.push_back(p);
    mpz_class top = p[d - 1];
    for (size_t i = d - 1; i > 0; --i) p[i] = p[i - 1];
    p[0] = 0;
    for (size_t i = 0; i < d; ++i) p[i] -= top * modulus_[i];
  }
  CycNum inv1 = qnum(1).inverse();
  for (int x = 0; x < 4 * r; ++x) qint_cache_.push_back(qnum(x) * inv1);
}

CycNum CycField::zero() const { return CycNum(*this, std::vector<mpq_class>(degree(), 0)); }

CycNum CycField::one() const { return from_int(1); }

CycNum CycField::rational(const mpq_class& v) const {
  std::vector<mpq_class> c(degree(), 0);
  c[0] = v;
  return CycNum(*this, std::move(c));
}

CycNum CycField::from_int(long v) const { return rational(mpq_class(v)); }

CycNum CycField::zeta_pow(long k) const {
  long m = k % order();
  if (m < 0) m += order();
  const auto& z = zeta_powers_[static_cast<size_t>(m)];
  std::vector<mpq_class> c(z.begin(), z.end());
  return CycNum(*this, std::move(c));
}

CycNum CycField::zeta() const { return zeta_pow(1); }

CycNum CycField::q() const { return zeta_pow(2); }

CycNum CycField::q_pow(long k) const { return zeta_pow(2 * k); }

CycNum CycField::s() const { return q_pow(r_ - 1); }

CycNum CycField::s_pow(long k) const { return q_pow(k * (r_ - 1)); }

CycNum CycField::qnum(long x) const { return q_pow(x) - q_pow(-x); }

CycNum CycField::qint(long x) const {
  long m = x % order();
  if (m < 0) m += order();
  return qint_cache_[static_cast<size_t>(m)];
}

CycNum CycField::qfact(long n) const {
  if (n < 0 || n >= r_) throw std::domain_error("quantum factorial [" + std::to_string(n) + "]! outside [0, r)");
  CycNum out = one();
  for (long k = 1; k <= n; ++k) out *= qint(k);
  return out;
}

CycNum CycField::qbinom(long n, long m) const {
  if (m < 0 || m > n) return zero();
  if (n >= r_) throw std::domain_error("quantum binomial with n >= r");
  return qfact(n) / (qfact(m) * qfact(n - m));
}

CycNum::CycNum(const CycField& f, std::vector<mpq_class> coeffs) : field_(&f), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != f.degree()) throw std::invalid_argument("coefficient vector has wrong length");
}

const CycField& CycNum::field() const {
  if (!field_) throw std::logic_error("use of an uninitialised cyclotomic number");
  return *field_;
}

void CycNum::check_same(const CycNum& o) const {
  if (field_ != o.field_) {
    throw std::invalid_argument("mixed cyclotomic fields r=" + std::to_string(field().r()) + " and r=" +
                                std::to_string(o.field().r()));
  }
}

bool CycNum::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational(mpq_class* out) const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_[0];
  return true;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  const size_t d = a.c_.size();
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& red = a.field_->reduction();
  for (size_t k = 0; k + 1 < d; ++k) {
    const mpq_class& h = prod[d + k];
    if (h == 0) continue;
    for (size_t i = 0; i < d; ++i)
      if (red[k][i] != 0) prod[i] += h * red[k][i];
  }
  prod.resize(d);
  return CycNum(*a.field_, std::move(prod));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(field().order()) + ")");
  // Extended Euclid: track u with u*a == rem (mod Phi).
  QPoly m(field_->modulus().begin(), field_->modulus().end());
  QPoly a = c_;
  trim(a);
  QPoly r0 = m, r1 = a, u0, u1 = {mpq_class(1)};
  while (!(r1.size() == 1)) {
    QPoly qt, rm;
    divmod(r0, r1, qt, rm);
    QPoly u2 = sub(u0, mul(qt, u1));
    r0 = std::move(r1);
    r1 = std::move(rm);
    u0 = std::move(u1);
    u1 = std::move(u2);
    if (r1.empty()) throw std::logic_error("cyclotomic modulus not irreducible");
  }
  mpq_class lead = r1[0];
  QPoly qt, rm;
  divmod(u1, m, qt, rm);
  std::vector<mpq_class> out(c_.size(), 0);
  for (size_t i = 0; i < rm.size(); ++i) out[i] = rm[i] / lead;
  return CycNum(*field_, std::move(out));
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum base = *this, out = field().one();
  while (k) {
    if (k & 1) out *= base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::complex<double> CycNum::to_complex() const {
  const double ang = std::numbers::pi / (2.0 * field().r());
  std::complex<double> z = std::polar(1.0, ang), acc = 0, pw = 1;
  for (const auto& v : c_) {
    acc += v.get_d() * pw;
    pw *= z;
  }
  return acc;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class v = c_[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    mpq_class a = abs(v);
    if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
    if (i) os << "z^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

nlohmann::json to_json_value(const CycNum& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& v : x.coeffs()) coeffs.push_back(v.get_str());
  return {{"r", x.r()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const nlohmann::json& j) {
  const auto& f = CycField::get(j.at("r").get<int>());
  std::vector<mpq_class> c;
  for (const auto& v : j.at("coeffs")) {
    mpq_class q(v.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  return CycNum(f, std::move(c));
}

}  // namespace rhorep
