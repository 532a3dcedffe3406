#pragma once

#include <string>
#include <vector>

#include "rhorep/linalg.hpp"
#include "rhorep/weightspace.hpp"

namespace rhorep {

/// Word in sigma_1..sigma_{n-1}; a negative letter is an inverse generator.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> letters);
  /// Comma separated signed integers, e.g. "1,2,-1"; empty string is the identity.
  static BraidWord parse(int n, const std::string& text);

  BraidWord inverse() const;
  BraidWord pow(int k) const;
  BraidWord operator*(const BraidWord& o) const;
  /// Same word on strands shifted up by k (sigma_i -> sigma_{i+k}).
  BraidWord shifted(int k, int new_n) const;
  std::string to_string() const;
};

/// delta_i = sigma_1 ... sigma_{i-1}.
BraidWord delta_word(int n, int i);
/// Delta_n = delta_n delta_{n-1} ... delta_2.
BraidWord half_twist_word(int n);
/// theta_n = delta_n^n.
BraidWord full_twist_word(int n);

/// Generator matrices sigma_1..sigma_{n-1} with their inverses; products act on the left.
template <class T>
struct GeneratorSet {
  int n = 2;
  std::vector<Matrix<T>> sigma, sigma_inv;

  size_t dim() const { return sigma.empty() ? 0 : sigma.front().rows(); }
  const Matrix<T>& letter(int g) const {
    if (g == 0 || std::abs(g) > n - 1) throw std::invalid_argument("generator index out of range");
    return g > 0 ? sigma.at(g - 1) : sigma_inv.at(-g - 1);
  }
  /// rho(w) applied to a block of columns; the rightmost letter acts first.
  Matrix<T> apply(const BraidWord& w, Matrix<T> cols) const {
    if (w.n != n) throw std::invalid_argument("braid word strand count differs from representation");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cols = letter(*it) * cols;
    return cols;
  }
  Matrix<T> eval(const BraidWord& w) const {
    const Matrix<T>& any = sigma.front();
    return apply(w, Matrix<T>::identity(any.rows(), one_like(any.zero())));
  }
};

/// R-hat on V_{r-1} (x) V_{r-1}, basis u_i (x) u_j at index i*r + j.
CMatrix rhat_pair(int r);
CMatrix rhat_pair_inverse(int r);

/// sigma_i on V_{n,l} (1-based i); memoized.
const CMatrix& sigma_matrix(int n, int l, int r, int i);
const CMatrix& sigma_inverse(int n, int l, int r, int i);
/// All generators on V_{n,l}.
GeneratorSet<CycNum> tensor_generators(int n, int l, int r);

CMatrix eval_word(const BraidWord& w, int n, int l, int r);

}  // namespace rhorep
