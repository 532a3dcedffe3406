#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhorep/lawrence.hpp"

namespace rhorep {

/// j in [0, r-1] with j = n + 2(l-1) mod r; l' = l - 1 - j when j < l.
struct ModularData {
  int n = 0, l = 0, r = 0, j = 0;
  std::optional<int> lprime;
};

ModularData modular_data(int n, int l, int r);

/// N_{n,l} = ker (FE)^2 on V_{n,l}, split as head vectors plus W.
struct NBasis {
  ModularData modular;
  CMatrix h_part;  // dim V x |h|
  CMatrix w_part;  // dim V x dim W
  size_t kernel_dim = 0;  // dim ker (FE)^2 by elimination

  size_t dim_h() const { return h_part.cols(); }
  /// Columns [h | w]; matrices on N use this order.
  CMatrix all() const { return h_part.cols() ? h_part.hcat(w_part) : w_part; }
};

/// (FE)^2 on V_{n,l} as a dense matrix.
CMatrix fe_squared(int n, int l, int r);

const NBasis& n_space(int n, int l, int r);
/// h = sum_i b_i; requires n = -1 mod r.
NBasis basis_N20(int n, int r);
/// h = {b'_j = s^{j-n} b_j - s^{n-j} b_n}; requires n = -2 mod r, n >= 3.
NBasis basis_N21(int n, int r);

/// Generators on N in the [h | w] basis.
GeneratorSet<CycNum> braid_on_N(const NBasis& nb, int n, int l, int r);

struct CSRData {
  ModularData modular;
  size_t dim_W = 0, dim_C = 0, dim_S = 0, dim_R = 0;
  CMatrix S_in_V;  // F^{j+1} W_{n,l'} as columns of V_{n,l}
  CMatrix S_in_W;  // same, in W coordinates
  bool cases_hold = false;
};

CSRData decompose_CSR(int n, int l, int r);

struct TwistReport {
  int scalar_exponent = 0;  // theta acts as q^{scalar_exponent} (Id + nilpotent)
  bool formula_has_fe = false;
  bool matches_formula = false;
  bool nilpotent_nonzero = false;
  bool nilpotent_square_zero = false;
  size_t nilpotent_rank = 0;
  CycNum fe_coefficient;  // s^n q^{1-l-l'} (l-l') {1}^2/{l-l'} when l' exists
};

TwistReport full_twist_check(int n, int l, int r);

/// Invariant complement of W for a family of matrices, or a rank certificate that none exists.
template <class T>
struct SplitResult {
  bool split = false;
  Matrix<T> complement;  // ambient coordinates, one column per quotient dimension
  Matrix<T> coupling;    // X in complement = P [X; I]
  size_t unknowns = 0, rank_system = 0, rank_augmented = 0;
  size_t solution_dim = 0;  // dimension of the space of complements when split
};

template <class T>
SplitResult<T> find_equivariant_section(const std::vector<Matrix<T>>& gens, const Matrix<T>& w) {
  if (gens.empty()) throw std::invalid_argument("no generators given");
  const size_t d = gens.front().rows(), m = w.cols();
  const T zero = zero_like(gens.front().zero()), one = one_like(zero);
  if (w.rows() != d) throw std::invalid_argument("subspace lives in a different space");
  // Unit vectors at the non-pivot rows of W complete it to a basis.
  Matrix<T> wt = w.transpose();
  auto piv = rref(wt);
  if (piv.size() != m) throw std::invalid_argument("subspace columns are dependent");
  std::vector<bool> used(d, false);
  for (auto p : piv) used[p] = true;
  const size_t k = d - m;
  Matrix<T> basis = w.hcat(Matrix<T>(d, k, zero));
  for (size_t i = 0, c = m; i < d; ++i)
    if (!used[i]) basis(i, c++) = one;
  Matrix<T> pinv = inverse(basis);

  SplitResult<T> res;
  res.unknowns = m * k;
  const size_t eqs = gens.size() * m * k;
  Matrix<T> sys(eqs, m * k, zero), rhs(eqs, 1, zero);
  size_t row = 0;
  for (const auto& g : gens) {
    Matrix<T> gp = pinv * g * basis;
    for (size_t a = m; a < d; ++a)
      for (size_t b = 0; b < m; ++b)
        if (!gp(a, b).is_zero()) throw std::invalid_argument("subspace is not invariant");
    // A X - X D = -B, A = gp[0:m,0:m], B = gp[0:m,m:], D = gp[m:,m:]
    for (size_t a = 0; a < m; ++a)
      for (size_t c = 0; c < k; ++c, ++row) {
        for (size_t b = 0; b < m; ++b) sys(row, b * k + c) += gp(a, b);
        for (size_t e = 0; e < k; ++e) sys(row, a * k + e) -= gp(m + e, m + c);
        rhs(row, 0) = -gp(a, m + c);
      }
  }
  res.rank_system = rank(sys);
  res.rank_augmented = rank(sys.hcat(rhs));
  auto x = solve(sys, rhs);
  if (!x) return res;
  res.split = true;
  res.solution_dim = m * k - res.rank_system;
  res.coupling = Matrix<T>(m, k, zero);
  for (size_t a = 0; a < m; ++a)
    for (size_t c = 0; c < k; ++c) res.coupling(a, c) = (*x)(a * k + c, 0);
  Matrix<T> stacked(d, k, zero);
  for (size_t a = 0; a < m; ++a)
    for (size_t c = 0; c < k; ++c) stacked(a, c) = res.coupling(a, c);
  for (size_t c = 0; c < k; ++c) stacked(m + c, c) = one;
  res.complement = basis * stacked;
  return res;
}

struct RestrictionReport {
  bool equivariant = false;
  bool restricted_split = false;
};

/// Shift embedding of N~_{n-1,2,0} into N_{n,2,0} (n = -1 mod r) and the split of the restriction.
RestrictionReport restriction_check(int n, int r);

}  // namespace rhorep
