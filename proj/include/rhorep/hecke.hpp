#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rhorep/dominant.hpp"

namespace rhorep {

/// Monic minimal polynomial, constant term first.
std::vector<CycNum> minimal_polynomial(const CMatrix& m);
/// p(M) for coefficients listed constant term first.
CMatrix poly_eval(const std::vector<CycNum>& p, const CMatrix& m);
/// True when the polynomial has no repeated root (gcd with its derivative is constant).
bool squarefree(const std::vector<CycNum>& p);

/// Generator sigma_1 on N_{n,2,l'} with rep "N20" (n = -1 mod r) or "N21" (n = -2 mod r).
CMatrix hecke_generator(int n, int r, const std::string& rep);

/// (X - 1)(X + s^{-2})(X - s^{-4} q^2) over Q(zeta_{4r}).
std::vector<CycNum> expected_minpoly(int r);

/// Least k in [1, bound] with m^k = Id, or nullopt.
std::optional<int> matrix_order(const CMatrix& m, int bound);

struct OrderReport {
  std::optional<int> order;  // nullopt: no finite order up to 4r
  bool diagonalizable = false;
  bool divides_2r = false;
  bool divides_r = false;
};

OrderReport generator_order(int n, int r, const std::string& rep);

/// 3-dimensional representation of the cubic Hecke algebra H_4; sigma_1 = sigma_3.
template <class T>
std::array<Matrix<T>, 3> cubic_rep(const T& x, const T& y, const T& z) {
  const T zero = zero_like(x), one = one_like(x);
  Matrix<T> a(3, 3, zero), b(3, 3, zero);
  a(0, 0) = z;
  a(1, 0) = x * z + y * y;
  a(1, 1) = y;
  a(2, 0) = y;
  a(2, 1) = one;
  a(2, 2) = x;
  b(0, 0) = x;
  b(0, 1) = -one;
  b(0, 2) = y;
  b(1, 1) = y;
  b(1, 2) = -(x * z) - y * y;
  b(2, 2) = z;
  return {a, b, a};
}

struct Quotient42 {
  std::array<CMatrix, 3> quotient, expected;
  bool s_invariant = false;
  bool matches = false;
};

/// r = 3, n = 4: the action on W_{4,2}/S_{4,2} in the basis [g_1], [g_2], [g_3].
Quotient42 cubic_quotient_42();

}  // namespace rhorep
