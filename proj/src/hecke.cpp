#include "rhorep/hecke.hpp"

#include <stdexcept>

namespace rhorep {

namespace {

using Poly = std::vector<CycNum>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    CycNum f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

std::vector<CycNum> minimal_polynomial(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("minimal polynomial of a non-square matrix");
  const size_t d = m.rows();
  const CycNum zero = m.zero();
  auto flatten = [&](const CMatrix& p) {
    CMatrix v(d * d, 1, zero);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) v(i * d + j, 0) = p(i, j);
    return v;
  };
  CMatrix power = CMatrix::identity(d, one_like(zero));
  CMatrix span = flatten(power);
  for (size_t k = 1; k <= d; ++k) {
    power = power * m;
    CMatrix v = flatten(power);
    if (auto c = solve(span, v)) {
      std::vector<CycNum> out;
      for (size_t i = 0; i < k; ++i) out.push_back(-(*c)(i, 0));
      out.push_back(one_like(zero));
      return out;
    }
    span = span.hcat(v);
  }
  throw std::logic_error("no polynomial relation up to the dimension");
}

CMatrix poly_eval(const std::vector<CycNum>& p, const CMatrix& m) {
  CMatrix acc(m.rows(), m.cols(), m.zero());
  const CMatrix id = CMatrix::identity(m.rows(), one_like(m.zero()));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

bool squarefree(const std::vector<CycNum>& p) {
  if (p.size() <= 2) return true;
  Poly dp;
  for (size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * p[i].field().from_int(static_cast<long>(i)));
  Poly a = p, b = dp;
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

CMatrix hecke_generator(int n, int r, const std::string& rep) {
  if (rep == "N20" && (n + 1) % r != 0) throw std::invalid_argument("N20 needs n = -1 mod r");
  if (rep == "N21" && (n + 2) % r != 0) throw std::invalid_argument("N21 needs n = -2 mod r");
  if (rep != "N20" && rep != "N21") throw std::invalid_argument("unknown representation '" + rep + "'");
  if (n < 3) throw std::invalid_argument("generator checks need n >= 3");
  const NBasis& nb = n_space(n, 2, r);
  return braid_on_N(nb, n, 2, r).sigma.front();
}

std::vector<CycNum> expected_minpoly(int r) {
  const auto& f = CycField::get(r);
  const CycNum a = f.one(), b = -f.s_pow(-2), c = f.s_pow(-4) * f.q_pow(2);
  return {-(a * b * c), a * b + a * c + b * c, -(a + b + c), f.one()};
}

std::optional<int> matrix_order(const CMatrix& m, int bound) {
  const CMatrix id = CMatrix::identity(m.rows(), one_like(m.zero()));
  CMatrix p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

OrderReport generator_order(int n, int r, const std::string& rep) {
  CMatrix g = hecke_generator(n, r, rep);
  OrderReport out;
  out.diagonalizable = squarefree(minimal_polynomial(g));
  out.order = matrix_order(g, 4 * r);
  if (out.order) {
    out.divides_2r = (2 * r) % *out.order == 0;
    out.divides_r = r % *out.order == 0;
  }
  return out;
}

Quotient42 cubic_quotient_42() {
  const int n = 4, r = 3;
  const auto& f = CycField::get(r);
  const CycNum q = f.q(), one = f.one(), zero = f.zero();
  const CSRData csr = decompose_CSR(n, 2, r);
  const auto& gw = braid_on_W(n, 2, r);
  // g-vectors in the w basis w12, w13, w14, w23, w24, w34.
  const CycNum quarter = f.rational(mpq_class(-1, 4)) * f.q_pow(2);
  const std::vector<std::vector<CycNum>> g = {
      {one, -f.q_pow(2), zero, zero, q, one},
      {quarter, quarter * f.from_int(2), quarter, quarter, quarter * f.from_int(2), quarter},
      {zero, -q, -one, -one, q - one, zero},
  };
  CMatrix p = zero_matrix(r, 6, 6);
  for (size_t c = 0; c < 3; ++c)
    for (size_t i = 0; i < 6; ++i) p(i, c) = g[c][i];
  if (csr.S_in_W.cols() != 3) throw std::logic_error("S_{4,2} should be 3-dimensional at r = 3");
  for (size_t c = 0; c < 3; ++c)
    for (size_t i = 0; i < 6; ++i) p(i, 3 + c) = csr.S_in_W(i, c);
  if (rank(p) != 6) throw std::logic_error("g-vectors do not complement S_{4,2}");
  const CMatrix pinv = inverse(p);
  Quotient42 out;
  out.expected = cubic_rep(f.q_pow(5), one, one);
  out.s_invariant = true;
  out.matches = true;
  for (int i = 0; i < 3; ++i) {
    CMatrix m = pinv * gw.sigma[i] * p;
    if (!m.block(0, 3, 3, 6).is_zero()) out.s_invariant = false;
    out.quotient[i] = m.block(0, 3, 0, 3);
    if (out.quotient[i] != out.expected[i]) out.matches = false;
  }
  return out;
}

}  // namespace rhorep
