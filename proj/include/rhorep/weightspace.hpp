#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rhorep/cyclo.hpp"
#include "rhorep/linalg.hpp"

namespace rhorep {

using CMatrix = Matrix<CycNum>;
using Composition = std::vector<int>;

/// Binomial coefficient C(n, k) as a 64-bit integer; 0 outside 0 <= k <= n.
long long binom(long long n, long long k);

/// Number of weak n-compositions of l with all parts < r.
long long kappa(int l, int r, int n);

/// Basis of V_{n,l}: compositions of l into n parts in [0, r-1], ascending lexicographic.
class SpaceBasis {
 public:
  SpaceBasis(int n, int l, int r);

  int n() const { return n_; }
  int l() const { return l_; }
  int r() const { return r_; }
  size_t dim() const { return order_.size(); }
  const Composition& at(size_t k) const { return order_[k]; }
  const std::vector<Composition>& order() const { return order_; }
  std::optional<size_t> index_of(const Composition& c) const;
  size_t require_index(const Composition& c) const;
  /// Strong weight n(r-1) - 2l shared by every basis vector.
  int strong_weight() const { return n_ * (r_ - 1) - 2 * l_; }

  bool in_A(size_t k) const;
  bool in_B(size_t k) const { return !in_A(k); }
  std::vector<size_t> A_indices() const;
  std::vector<size_t> B_indices() const;

 private:
  int n_, l_, r_;
  std::vector<Composition> order_;
  std::map<Composition, size_t> index_;
};

/// Interned basis of V_{n,l}.
std::shared_ptr<const SpaceBasis> enumerate_basis(int n, int l, int r);

/// Sparse vector of V_{n,l}; no stored zeros.
struct SpaceVec {
  std::shared_ptr<const SpaceBasis> basis;
  std::map<size_t, CycNum> entries;

  SpaceVec(std::shared_ptr<const SpaceBasis> b) : basis(std::move(b)) {}  // NOLINT
  static SpaceVec unit(std::shared_ptr<const SpaceBasis> b, const Composition& c);
  static SpaceVec from_column(std::shared_ptr<const SpaceBasis> b, const CMatrix& col, size_t j = 0);
  CMatrix to_column() const;
  void add(size_t k, const CycNum& v);
  SpaceVec& operator+=(const SpaceVec& o);
  SpaceVec operator*(const CycNum& s) const;
  bool operator==(const SpaceVec& o) const;
};

/// Named vectors (1-based slots): c_i (u_1 at i), b_i (u_2 at i), a_{i,j} (u_1 at i and j).
Composition c_vec(int n, int i);
Composition b_vec(int n, int i);
Composition a_vec(int n, int i, int j);

/// Per-slot K-eigenvalue exponent: K u_m = s q^{-2m}; K^{-1} u_m = s^{-1} q^{2m}.
/// E: V_{n,l} -> V_{n,l-1}; a 0 x dim matrix when l = 0.
CMatrix op_E(int n, int l, int r);
/// F: V_{n,l} -> V_{n,l+1}; F u_m = [m+1][r-1-m] u_{m+1}.
CMatrix op_F(int n, int l, int r);
/// K acts on V_{n,l} by s^n q^{-2l}.
CycNum op_K(int n, int l, int r);

/// E and F applied to a block of columns in V_{n,l}, skipping zero entries.
CMatrix apply_E(int n, int l, int r, const CMatrix& cols);
CMatrix apply_F(int n, int l, int r, const CMatrix& cols);
/// E^k and F^k on a block of columns of V_{n,l}.
CMatrix apply_E_pow(int n, int l, int r, int k, CMatrix cols);
CMatrix apply_F_pow(int n, int l, int r, int k, CMatrix cols);

/// Dense helpers.
CMatrix zero_matrix(int r, size_t rows, size_t cols);
CMatrix identity_matrix(int r, size_t n);

}  // namespace rhorep
