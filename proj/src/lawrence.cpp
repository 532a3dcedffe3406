#include "rhorep/lawrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cache.hpp"

namespace rhorep {

RingPoint<LPoly3> generic_point() {
  return {LPoly3::q(), LPoly3::monomial(-1, 0), LPoly3::s(), LPoly3::monomial(0, -1), LPoly3::t()};
}

RingPoint<CycNum> root_point(int r) {
  const auto& f = CycField::get(r);
  CycNum s = f.s();
  return {f.q(), f.q_pow(-1), s, s.inverse(), s.pow(-3) * (f.one() - f.q_pow(2))};
}

RingPoint<CycNum> cyc_point(const CycNum& q0, const CycNum& s0, const CycNum& t0) {
  return {q0, q0.inverse(), s0, s0.inverse(), t0};
}

size_t pair_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("bad pair index");
  // pairs (a, b) with a < i come first: sum_{a<i} (n - a)
  size_t before = 0;
  for (int a = 1; a < i; ++a) before += static_cast<size_t>(n - a);
  return before + static_cast<size_t>(j - i - 1);
}

std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

// Inverse of E restricted to the B-columns of V_{len,l}: maps V_{len,l-1} onto B.
std::shared_ptr<const CMatrix> e_inverse_on_B(int len, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const CMatrix>> cache;
  return cache.get_or_make({len, l, r}, [&] {
    auto basis = enumerate_basis(len, l, r);
    CMatrix e = op_E(len, l, r);
    auto bidx = basis->B_indices();
    CMatrix eb = zero_matrix(r, e.rows(), bidx.size());
    for (size_t k = 0; k < bidx.size(); ++k)
      for (size_t i = 0; i < e.rows(); ++i) eb(i, k) = e(i, bidx[k]);
    if (eb.rows() != eb.cols()) throw std::logic_error("E on B is not square");
    CMatrix inv = inverse(eb);
    // Re-embed rows into the full basis of V_{len,l}.
    CMatrix out = zero_matrix(r, basis->dim(), inv.cols());
    for (size_t k = 0; k < bidx.size(); ++k)
      for (size_t j = 0; j < inv.cols(); ++j) out(bidx[k], j) = inv(k, j);
    return std::shared_ptr<const CMatrix>(std::make_shared<const CMatrix>(std::move(out)));
  });
}

CMatrix build_phi(int n, int l, int r) {
  if (l < 0 || l >= r) throw std::invalid_argument("Phi needs 0 <= l < r");
  const auto& f = CycField::get(r);
  auto basis = enumerate_basis(n, l, r);
  CMatrix m = identity_matrix(r, basis->dim());
  if (l == 0) return m;
  for (size_t k = 0; k < basis->dim(); ++k) {
    if (!basis->in_A(k)) continue;
    const Composition& a = basis->at(k);
    int p = 0;  // 1-based slot of the leading u_1
    while (a[p] == 0) ++p;
    ++p;
    const int len = n - p;
    if (len < 1) throw std::logic_error("A-vector without a tail");
    Composition tail(a.begin() + p, a.end());
    auto tb = enumerate_basis(len, l - 1, r);
    CMatrix tail_col = zero_matrix(r, tb->dim(), 1);
    tail_col(tb->require_index(tail), 0) = f.one();
    m(k, k) = f.zero();
    const int x = p + 1;
    for (int mm = 0; mm <= l; ++mm) {
      if (mm >= r) throw std::domain_error("Phi would need u_m with m >= r");
      // E^{mm-1} on the tail, living in V_{len, l-mm}.
      CMatrix v;
      int tl = l - mm;
      if (mm == 0) {
        v = *e_inverse_on_B(len, l, r) * tail_col;
      } else {
        v = apply_E_pow(len, l - 1, r, mm - 1, tail_col);
      }
      if (v.is_zero()) continue;
      CycNum coeff = f.s_pow((mm - 1) * (x - n - 1)) * f.q_pow((mm - 1) * (2 * l - mm - 2));
      if ((mm - 1) % 2 != 0) coeff = -coeff;
      auto vb = enumerate_basis(len, tl, r);
      for (size_t t = 0; t < vb->dim(); ++t) {
        if (v(t, 0).is_zero()) continue;
        Composition full(static_cast<size_t>(p - 1), 0);
        full.push_back(mm);
        full.insert(full.end(), vb->at(t).begin(), vb->at(t).end());
        m(basis->require_index(full), k) += coeff * v(t, 0);
      }
    }
  }
  return m;
}

}  // namespace

CMatrix phi(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const CMatrix>> cache;
  return *cache.get_or_make({n, l, r}, [&] { return std::make_shared<const CMatrix>(build_phi(n, l, r)); });
}

const WBasis& w_basis(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const WBasis>> cache;
  return *cache.get_or_make({n, l, r}, [&] {
    auto basis = enumerate_basis(n, l, r);
    CMatrix ph = phi(n, l, r);
    auto w = std::make_shared<WBasis>();
    w->n = n;
    w->l = l;
    w->r = r;
    // Occupied-slot lists ascend exactly when compositions descend, so
    // reversing the A-order lists w_{1,2}, w_{1,3}, ... first.
    auto aidx = basis->A_indices();
    std::reverse(aidx.begin(), aidx.end());
    w->vectors = zero_matrix(r, basis->dim(), aidx.size());
    for (size_t k = 0; k < aidx.size(); ++k) {
      w->a_index.push_back(basis->at(aidx[k]));
      for (size_t i = 0; i < basis->dim(); ++i) w->vectors(i, k) = ph(i, aidx[k]);
    }
    return std::shared_ptr<const WBasis>(w);
  });
}

namespace {

CMatrix restrict_to(const CMatrix& op, const CMatrix& cols) {
  auto x = solve(cols, op * cols);
  if (!x) throw std::logic_error("subspace is not invariant under the operator");
  return *x;
}

}  // namespace

const GeneratorSet<CycNum>& braid_on_W(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const GeneratorSet<CycNum>>> cache;
  return *cache.get_or_make({n, l, r}, [&] {
    const WBasis& w = w_basis(n, l, r);
    auto g = std::make_shared<GeneratorSet<CycNum>>();
    g->n = n;
    for (int i = 1; i < n; ++i) {
      g->sigma.push_back(restrict_to(sigma_matrix(n, l, r, i), w.vectors));
      g->sigma_inv.push_back(restrict_to(sigma_inverse(n, l, r, i), w.vectors));
    }
    return std::shared_ptr<const GeneratorSet<CycNum>>(g);
  });
}

CMatrix burau_to_tensor(int n, int r) {
  const auto& f = CycField::get(r);
  auto basis = enumerate_basis(n, 1, r);
  CMatrix p = zero_matrix(r, basis->dim(), static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) p(basis->require_index(c_vec(n, i)), i - 1) = f.s_pow(i);
  return p;
}

GeneratorSet<CycNum> with_inverses(int n, std::vector<CMatrix> sigma) {
  GeneratorSet<CycNum> g;
  g.n = n;
  for (auto& m : sigma) {
    g.sigma_inv.push_back(inverse(m));
    g.sigma.push_back(std::move(m));
  }
  return g;
}

}  // namespace rhorep
