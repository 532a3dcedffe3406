#pragma once

#include <random>
#include <vector>

#include "rhorep/cyclo.hpp"
#include "rhorep/laurent.hpp"
#include "rhorep/weightspace.hpp"

namespace rhorep::testing {

inline std::mt19937& rng() {
  static std::mt19937 g(20240611u);
  return g;
}

/// Random element of Q(zeta_{4r}) with small numerators and denominators.
inline CycNum random_cyc(int r, int span = 5) {
  const auto& f = CycField::get(r);
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  std::vector<mpq_class> c;
  for (int k = 0; k < f.degree(); ++k) {
    mpq_class v(num(rng()), den(rng()));
    v.canonicalize();
    c.push_back(v);
  }
  return CycNum(f, std::move(c));
}

/// Random Laurent polynomial with a few terms, t-degree in [0, 2].
inline LPoly3 random_lpoly(int terms = 4) {
  std::uniform_int_distribution<int> e(-3, 3), te(0, 2), c(-4, 4);
  LPoly3 p;
  for (int k = 0; k < terms; ++k) p += LPoly3::monomial(e(rng()), e(rng()), te(rng()), c(rng()));
  return p;
}

inline CMatrix random_matrix(int r, size_t rows, size_t cols) {
  CMatrix m = zero_matrix(r, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = random_cyc(r, 3);
  return m;
}

/// Weak n-compositions of l with parts < r, counted by recursion on the first part.
inline long long count_compositions(int l, int r, int n) {
  if (n == 0) return l == 0 ? 1 : 0;
  long long total = 0;
  for (int a = 0; a < r && a <= l; ++a) total += count_compositions(l - a, r, n - 1);
  return total;
}

}  // namespace rhorep::testing
