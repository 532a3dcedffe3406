#include "rhorep/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace rhorep {

LPoly3::LPoly3(long c) {
  if (c != 0) terms_[{0, 0, 0}] = c;
}

LPoly3 LPoly3::monomial(int a, int b, int c, const mpz_class& coeff) {
  if (c < 0) throw std::invalid_argument("negative t exponent");
  LPoly3 p;
  if (coeff != 0) p.terms_[{a, b, c}] = coeff;
  return p;
}

void LPoly3::add_term(const Exp3& e, const mpz_class& c) {
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LPoly3 LPoly3::monomial_inverse() const {
  if (!is_monomial()) throw std::domain_error("not a monomial: " + to_string());
  const auto& [e, c] = *terms_.begin();
  if (e[2] != 0 || (c != 1 && c != -1)) throw std::domain_error("monomial is not a unit: " + to_string());
  return monomial(-e[0], -e[1], 0, c);
}

int LPoly3::max_t_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[2]);
  return d;
}

LPoly3 LPoly3::operator-() const {
  LPoly3 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LPoly3& LPoly3::operator+=(const LPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LPoly3& LPoly3::operator-=(const LPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LPoly3 operator*(const LPoly3& a, const LPoly3& b) {
  LPoly3 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

LPoly3 LPoly3::at_qs_one() const {
  LPoly3 out;
  for (const auto& [e, c] : terms_) out.add_term({0, 0, e[2]}, c);
  return out;
}

std::string LPoly3::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"q", "s", "t"};
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpz_class a = abs(c);
    bool bare = e[0] == 0 && e[1] == 0 && e[2] == 0;
    bool wrote = false;
    if (bare || a != 1) {
      os << a.get_str();
      wrote = true;
    }
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << "*";
      os << names[k];
      if (e[k] != 1) os << "^" << e[k];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

LRat::LRat(LPoly3 num) : num_(std::move(num)), den_(1) {}

LRat::LRat(LPoly3 num, LPoly3 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

// Cheap normalisation: strip common monomial factors and integer content.
// No polynomial gcd is taken, equality goes through cross-multiplication.
void LRat::normalize() {
  if (num_.is_zero()) {
    den_ = LPoly3(1);
    return;
  }
  Exp3 lo = {INT_MAX, INT_MAX, INT_MAX};
  mpz_class g = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) {
      for (int k = 0; k < 3; ++k) lo[k] = std::min(lo[k], e[k]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
  if (den_.terms().rbegin()->second < 0) g = -g;
  if (lo == Exp3{0, 0, 0} && g == 1) return;
  auto scale = [&](const LPoly3& p) {
    LPoly3 out;
    for (const auto& [e, c] : p.terms()) out += LPoly3::monomial(e[0] - lo[0], e[1] - lo[1], e[2] - lo[2], c / g);
    return out;
  };
  num_ = scale(num_);
  den_ = scale(den_);
}

LRat operator+(const LRat& a, const LRat& b) {
  if (a.den_ == b.den_) return LRat(a.num_ + b.num_, a.den_);
  return LRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LRat operator*(const LRat& a, const LRat& b) { return LRat(a.num_ * b.num_, a.den_ * b.den_); }

LRat operator/(const LRat& a, const LRat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return LRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string LRat::to_string() const {
  if (den_ == LPoly3(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

CycNum specialize(const LPoly3& p, const CycNum& q0, const CycNum& s0, const CycNum& t0) {
  const CycField& f = q0.field();
  CycNum acc = f.zero();
  if (p.is_zero()) return acc;
  CycNum qi = q0.inverse(), si = s0.inverse();
  auto pw = [&](const CycNum& x, const CycNum& xi, int k) { return k >= 0 ? x.pow(k) : xi.pow(-k); };
  for (const auto& [e, c] : p.terms()) {
    CycNum term = pw(q0, qi, e[0]) * pw(s0, si, e[1]) * t0.pow(e[2]);
    acc += f.rational(mpq_class(c)) * term;
  }
  return acc;
}

CycNum specialize(const LRat& p, const CycNum& q0, const CycNum& s0, const CycNum& t0) {
  CycNum d = specialize(p.den(), q0, s0, t0);
  if (d.is_zero()) throw std::domain_error("denominator " + p.den().to_string() + " vanishes at the specialisation point");
  return specialize(p.num(), q0, s0, t0) / d;
}

nlohmann::json to_json_value(const LPoly3& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json coeff;
    if (c.fits_slong_p()) coeff = c.get_si();
    else coeff = c.get_str();
    out.push_back({e[0], e[1], e[2], coeff});
  }
  return out;
}

nlohmann::json to_json_value(const LRat& p) { return {{"num", to_json_value(p.num())}, {"den", to_json_value(p.den())}}; }

LPoly3 lpoly_from_json(const nlohmann::json& j) {
  LPoly3 out;
  for (const auto& t : j) {
    mpz_class c = t.at(3).is_string() ? mpz_class(t.at(3).get<std::string>()) : mpz_class(t.at(3).get<long>());
    out += LPoly3::monomial(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), c);
  }
  return out;
}

}  // namespace rhorep
