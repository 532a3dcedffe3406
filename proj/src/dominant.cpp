#include "rhorep/dominant.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

#include "cache.hpp"

namespace rhorep {

ModularData modular_data(int n, int l, int r) {
  if (n < 1 || r < 2 || l < 0 || l >= r) throw std::invalid_argument("modular data needs n >= 1, r >= 2, 0 <= l < r");
  ModularData md;
  md.n = n;
  md.l = l;
  md.r = r;
  md.j = ((n + 2 * (l - 1)) % r + r) % r;
  if (md.j < l) md.lprime = l - 1 - md.j;
  return md;
}

CMatrix fe_squared(int n, int l, int r) {
  auto basis = enumerate_basis(n, l, r);
  CMatrix v = identity_matrix(r, basis->dim());
  for (int k = 0; k < 2; ++k) {
    if (l == 0) return zero_matrix(r, basis->dim(), basis->dim());
    v = apply_F(n, l - 1, r, apply_E(n, l, r, v));
  }
  return v;
}

namespace {

CMatrix fe(int n, int l, int r, const CMatrix& cols) {
  if (l == 0) return zero_matrix(r, cols.rows(), cols.cols());
  return apply_F(n, l - 1, r, apply_E(n, l, r, cols));
}

void check_head(const NBasis& nb, int n, int l, int r) {
  const CMatrix& h = nb.h_part;
  if (!fe(n, l, r, fe(n, l, r, h)).is_zero()) throw std::logic_error("head vector outside ker (FE)^2");
  for (size_t k = 0; k < h.cols(); ++k)
    if (apply_E(n, l, r, h.column(k)).is_zero()) throw std::logic_error("head vector inside ker E");
}

NBasis empty_head(int n, int l, int r) {
  NBasis nb;
  nb.modular = modular_data(n, l, r);
  nb.w_part = w_basis(n, l, r).vectors;
  nb.h_part = zero_matrix(r, nb.w_part.rows(), 0);
  return nb;
}

}  // namespace

NBasis basis_N20(int n, int r) {
  if (r < 3 || (n + 1) % r != 0) throw std::invalid_argument("N20 needs n = -1 mod r and r >= 3");
  NBasis nb = empty_head(n, 2, r);
  auto basis = enumerate_basis(n, 2, r);
  const auto& f = CycField::get(r);
  nb.h_part = zero_matrix(r, basis->dim(), 1);
  for (int i = 1; i <= n; ++i) nb.h_part(basis->require_index(b_vec(n, i)), 0) = f.one();
  nb.kernel_dim = basis->dim() - rank(fe_squared(n, 2, r));
  check_head(nb, n, 2, r);
  return nb;
}

NBasis basis_N21(int n, int r) {
  if (r < 3 || n < 3 || (n + 2) % r != 0) throw std::invalid_argument("N21 needs n = -2 mod r, n >= 3, r >= 3");
  NBasis nb = empty_head(n, 2, r);
  auto basis = enumerate_basis(n, 2, r);
  const auto& f = CycField::get(r);
  nb.h_part = zero_matrix(r, basis->dim(), static_cast<size_t>(n - 1));
  const size_t bn = basis->require_index(b_vec(n, n));
  for (int j = 1; j < n; ++j) {
    nb.h_part(basis->require_index(b_vec(n, j)), j - 1) = f.s_pow(j - n);
    nb.h_part(bn, j - 1) = -f.s_pow(n - j);
  }
  nb.kernel_dim = basis->dim() - rank(fe_squared(n, 2, r));
  check_head(nb, n, 2, r);
  return nb;
}

const NBasis& n_space(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const NBasis>> cache;
  return *cache.get_or_make({n, l, r}, [&]() -> std::shared_ptr<const NBasis> {
    ModularData md = modular_data(n, l, r);
    if (l == 2 && md.lprime == 0) return std::make_shared<const NBasis>(basis_N20(n, r));
    if (l == 2 && md.lprime == 1 && n >= 3) return std::make_shared<const NBasis>(basis_N21(n, r));
    NBasis nb = empty_head(n, l, r);
    auto basis = enumerate_basis(n, l, r);
    CMatrix q = fe_squared(n, l, r);
    nb.kernel_dim = basis->dim() - rank(q);
    if (md.lprime) {
      // N = W + (N cap B): kernel of (FE)^2 on the B-columns, in reduced echelon form.
      auto bidx = basis->B_indices();
      CMatrix qb = zero_matrix(r, q.rows(), bidx.size());
      for (size_t k = 0; k < bidx.size(); ++k)
        for (size_t i = 0; i < q.rows(); ++i) qb(i, k) = q(i, bidx[k]);
      CMatrix ker = nullspace(qb);
      nb.h_part = zero_matrix(r, basis->dim(), ker.cols());
      for (size_t k = 0; k < bidx.size(); ++k)
        for (size_t c = 0; c < ker.cols(); ++c) nb.h_part(bidx[k], c) = ker(k, c);
      check_head(nb, n, l, r);
    }
    return std::make_shared<const NBasis>(std::move(nb));
  });
}

GeneratorSet<CycNum> braid_on_N(const NBasis& nb, int n, int l, int r) {
  CMatrix cols = nb.all();
  GeneratorSet<CycNum> g;
  g.n = n;
  for (int i = 1; i < n; ++i) {
    auto x = solve(cols, sigma_matrix(n, l, r, i) * cols);
    auto y = solve(cols, sigma_inverse(n, l, r, i) * cols);
    if (!x || !y) throw std::logic_error("N is not braid invariant");
    g.sigma.push_back(*x);
    g.sigma_inv.push_back(*y);
  }
  return g;
}

CSRData decompose_CSR(int n, int l, int r) {
  CSRData out;
  out.modular = modular_data(n, l, r);
  const WBasis& w = w_basis(n, l, r);
  out.dim_W = w.dim();
  CMatrix up = apply_F_pow(n, l, r, r - 1, w.vectors);
  CMatrix back = apply_E_pow(n, l + r - 1, r, r - 1, up);
  out.dim_C = rank(back);
  const int j = out.modular.j;
  if (out.modular.lprime) {
    const int lp = *out.modular.lprime;
    out.S_in_V = apply_F_pow(n, lp, r, j + 1, w_basis(n, lp, r).vectors);
    auto coords = solve(w.vectors, out.S_in_V);
    if (!coords) throw std::logic_error("F^{j+1} W_{n,l'} is not inside W_{n,l}");
    out.S_in_W = *coords;
    out.dim_S = rank(out.S_in_V);
  } else {
    out.S_in_V = zero_matrix(r, w.vectors.rows(), 0);
    out.S_in_W = zero_matrix(r, w.dim(), 0);
  }
  out.dim_R = out.dim_W - out.dim_S - out.dim_C;
  const size_t d = out.dim_W;
  if (j == r - 1) {
    out.cases_hold = out.dim_C == d;
  } else if (j >= l) {
    out.cases_hold = out.dim_C == 0 && out.dim_S == 0;
  } else if (n == 2) {
    out.cases_hold = out.dim_S == d && out.dim_C == 0;
  } else {
    const auto dl = static_cast<size_t>(binom(n + *out.modular.lprime - 2, *out.modular.lprime));
    out.cases_hold = out.dim_C == 0 && out.dim_S == dl && out.dim_R > 0;
  }
  return out;
}

TwistReport full_twist_check(int n, int l, int r) {
  const auto& f = CycField::get(r);
  const NBasis& nb = n_space(n, l, r);
  TwistReport rep;
  rep.scalar_exponent = 2 * l * (n + l - 1);
  CycNum scalar = f.q_pow(rep.scalar_exponent);
  CMatrix cols = nb.all();
  CMatrix theta = tensor_generators(n, l, r).apply(full_twist_word(n), cols);
  CMatrix expected = cols;
  rep.fe_coefficient = f.zero();
  if (nb.modular.lprime) {
    const int lp = *nb.modular.lprime;
    rep.formula_has_fe = true;
    rep.fe_coefficient = f.s_pow(n) * f.q_pow(1 - l - lp) * f.from_int(l - lp) * f.qnum(1) * f.qnum(1) / f.qnum(l - lp);
    expected = expected + rep.fe_coefficient * fe(n, l, r, cols);
  }
  expected = scalar * expected;
  rep.matches_formula = theta == expected;
  auto nil = solve(cols, theta - scalar * cols);
  if (!nil) throw std::logic_error("full twist leaves N");
  rep.nilpotent_rank = rank(*nil);
  rep.nilpotent_nonzero = !nil->is_zero();
  rep.nilpotent_square_zero = ((*nil) * (*nil)).is_zero();
  return rep;
}

RestrictionReport restriction_check(int n, int r) {
  if (n < 3 || (n + 1) % r != 0) throw std::invalid_argument("restriction check needs n >= 3 and n = -1 mod r");
  const NBasis& nb = n_space(n, 2, r);
  auto big = braid_on_N(nb, n, 2, r);
  auto small = n20_closed_form(n - 1, root_point(r));
  const auto& f = CycField::get(r);
  const size_t dbig = big.dim(), dsmall = small.front().rows();
  CMatrix iota = zero_matrix(r, dbig, dsmall);
  iota(0, 0) = f.one();
  for (auto [i, j] : pair_list(n - 1)) iota(1 + pair_index(n, i + 1, j + 1), 1 + pair_index(n - 1, i, j)) = f.one();
  RestrictionReport rep;
  rep.equivariant = true;
  for (int i = 1; i <= n - 2; ++i)
    if (big.sigma[i] * iota != iota * small[i - 1]) rep.equivariant = false;
  std::vector<CMatrix> restricted(big.sigma.begin() + 1, big.sigma.end());
  CMatrix w = zero_matrix(r, dbig, dbig - 1);
  for (size_t k = 0; k + 1 < dbig; ++k) w(k + 1, k) = f.one();
  rep.restricted_split = find_equivariant_section(restricted, w).split;
  return rep;
}

}  // namespace rhorep
