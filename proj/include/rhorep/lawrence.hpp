#pragma once

#include <utility>
#include <vector>

#include "rhorep/braid.hpp"
#include "rhorep/laurent.hpp"

namespace rhorep {

/// Values of q, s, t in some coefficient ring, with inverses of q and s.
template <class T>
struct RingPoint {
  T q, q_inv, s, s_inv, t;

  T one() const { return one_like(q); }
  T zero() const { return zero_like(q); }
  /// q^a s^b.
  T qs(int a, int b) const {
    T out = one();
    for (int k = 0; k < std::abs(a); ++k) out = out * (a > 0 ? q : q_inv);
    for (int k = 0; k < std::abs(b); ++k) out = out * (b > 0 ? s : s_inv);
    return out;
  }
};

/// Symbolic point: q, s, t as indeterminates.
RingPoint<LPoly3> generic_point();
/// q = exp(i pi / r), s = q^{r-1}, t = s^{-3}(1 - q^2).
RingPoint<CycNum> root_point(int r);
/// Arbitrary point of Q(zeta_{4r}); q0 and s0 must be invertible.
RingPoint<CycNum> cyc_point(const CycNum& q0, const CycNum& s0, const CycNum& t0);

/// Phi on V_{n,l}: identity on B, a -> sum_m b_m u_0^{p-1} (x) u_m (x) E^{m-1} u_tail on A.
CMatrix phi(int n, int l, int r);

/// Basis of W_{n,l} = ker E: the Phi images of A_{n,l}, ordered by the
/// lexicographic list of occupied slots (w_{1,2}, w_{1,3}, ..., w_{n-1,n} for l = 2).
struct WBasis {
  int n = 0, l = 0, r = 0;
  std::vector<Composition> a_index;
  CMatrix vectors;  // dim V_{n,l} x dim W_{n,l}
  size_t dim() const { return a_index.size(); }
};

const WBasis& w_basis(int n, int l, int r);
/// Generators restricted to W_{n,l}, in the Phi basis; memoized.
const GeneratorSet<CycNum>& braid_on_W(int n, int l, int r);

/// Index of w_{i,j} (1 <= i < j <= n) in lexicographic pair order.
size_t pair_index(int n, int i, int j);
std::vector<std::pair<int, int>> pair_list(int n);

/// Closed-form LKB action on the basis {w_{i,j}}; one matrix per generator.
template <class T>
std::vector<Matrix<T>> lkb_closed_form(int n, const RingPoint<T>& p) {
  const size_t d = static_cast<size_t>(n * (n - 1) / 2);
  const T one = p.one();
  const T c = one - p.qs(0, -2);  // 1 - s^{-2}
  std::vector<Matrix<T>> out;
  for (int i = 1; i < n; ++i) {
    Matrix<T> m(d, d, p.zero());
    for (auto [j, k] : pair_list(n)) {
      const size_t col = pair_index(n, j, k);
      auto put = [&](int a, int b, const T& v) { m(pair_index(n, a, b), col) += v; };
      const bool hit = j == i || j == i + 1 || k == i || k == i + 1;
      if (!hit) {
        put(j, k, one);
      } else if (j == i && k == i + 1) {
        put(i, i + 1, p.qs(2, -4));
      } else if (j == i + 1) {
        put(i, k, p.s_inv);
      } else if (k == i + 1) {
        put(j, i, p.s_inv);
      } else if (j == i) {
        put(i + 1, k, p.s_inv);
        put(i, k, c);
        put(i, i + 1, -(p.qs(2, i - k - 1) * c));
      } else {  // k == i, j < i
        put(j, i + 1, p.s_inv);
        put(j, i, c);
        put(i, i + 1, -(p.qs(0, i - j - 1) * c));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// N20 closed form on {b} + {w_{i,j}}: sigma_i b = b + t w_{i,i+1}, LKB on the w part.
template <class T>
std::vector<Matrix<T>> n20_closed_form(int n, const RingPoint<T>& p) {
  auto lkb = lkb_closed_form(n, p);
  const size_t d = lkb.front().rows() + 1;
  std::vector<Matrix<T>> out;
  for (int i = 1; i < n; ++i) {
    Matrix<T> m(d, d, p.zero());
    m(0, 0) = p.one();
    m(1 + pair_index(n, i, i + 1), 0) = p.t;
    for (size_t a = 0; a + 1 < d; ++a)
      for (size_t b = 0; b + 1 < d; ++b) m(a + 1, b + 1) = lkb[i - 1](a, b);
    out.push_back(std::move(m));
  }
  return out;
}

/// N21 closed form on {b'_1..b'_{n-1}} + {w_{i,j}}.
template <class T>
std::vector<Matrix<T>> n21_closed_form(int n, const RingPoint<T>& p) {
  auto lkb = lkb_closed_form(n, p);
  const size_t h = static_cast<size_t>(n - 1);
  const size_t d = lkb.front().rows() + h;
  const T one = p.one();
  std::vector<Matrix<T>> out;
  for (int i = 1; i < n; ++i) {
    Matrix<T> m(d, d, p.zero());
    auto w = [&](int a, int b) { return h + pair_index(n, a, b); };
    for (int j = 1; j < n; ++j) {
      const size_t col = static_cast<size_t>(j - 1);
      if (i == n - 1) {
        if (j == n - 1) {
          m(w(n - 1, n), col) += p.s_inv * p.t;
          m(col, col) += -p.qs(0, -2);
        } else {
          m(col, col) += one;
          m(static_cast<size_t>(n - 2), col) += -p.qs(0, n - j - 1);
        }
      } else if (j == i) {
        m(w(i, i + 1), col) += p.qs(0, i - n) * p.t;
        m(col, col) += one - p.qs(0, -2);
        m(col + 1, col) += p.s_inv;
      } else if (j == i + 1) {
        m(col - 1, col) += p.s_inv;
      } else {
        m(col, col) += one;
      }
    }
    for (size_t a = 0; a + h < d; ++a)
      for (size_t b = 0; b + h < d; ++b) m(a + h, b + h) = lkb[i - 1](a, b);
    out.push_back(std::move(m));
  }
  return out;
}

/// Unreduced Burau matrices: sigma_i c_i = t c_{i+1} + (1-t) c_i, sigma_i c_{i+1} = c_i.
template <class T>
std::vector<Matrix<T>> burau_unreduced(int n, const T& t) {
  const T one = one_like(t);
  std::vector<Matrix<T>> out;
  for (int i = 1; i < n; ++i) {
    Matrix<T> m = Matrix<T>::identity(static_cast<size_t>(n), one);
    m(i - 1, i - 1) = one - t;
    m(i, i - 1) = t;
    m(i - 1, i) = one;
    m(i, i) = zero_like(t);
    out.push_back(std::move(m));
  }
  return out;
}

/// Change of basis from the rescaled Burau basis c^_i = s^i c_i to the lexicographic basis of V_{n,1}.
CMatrix burau_to_tensor(int n, int r);

/// Generator set with inverses computed by exact elimination.
GeneratorSet<CycNum> with_inverses(int n, std::vector<CMatrix> sigma);

}  // namespace rhorep
