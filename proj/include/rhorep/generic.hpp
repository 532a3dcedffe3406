#pragma once

#include <vector>

#include "rhorep/dominant.hpp"
#include "rhorep/laurent.hpp"

namespace rhorep {

using LMatrix = Matrix<LPoly3>;
using RMatrix = Matrix<LRat>;

/// N~_{n,2,0} over Z[q^{+-1}, s^{+-1}][t], basis {b} + {w_{i,j}}.
GeneratorSet<LPoly3> generic_N20(int n);
/// N~_{n,2,1}, basis {b'_1..b'_{n-1}} + {w_{i,j}}.
GeneratorSet<LPoly3> generic_N21(int n);

/// Inverse of a generator through p(X) = (X-1)(X+s^{-2})(X-s^{-4}q^2); checked by multiplication.
LMatrix cubic_inverse(const LMatrix& m);

struct GenericSplit {
  std::vector<LRat> lambda;  // lambda_{i,j} in pair order
  LRat lambda_last;          // lambda_{n-1,n} = s^4 t / (s^{2n} - q^2)
  LRat lambda_s2_one;        // t / (1 - q^2) on the branch s^2 = 1
  bool identity_verified = false;
  bool s2_one_verified = false;
};

/// Invariant complement b + sum lambda_{i,j} w_{i,j} of W in N~_{n,2,0} over the fraction field.
GenericSplit split_generic_N20(int n);

/// Replace s by +1 or -1.
LPoly3 at_s_sign(const LPoly3& p, int sign);

struct SpecializeReport {
  int n = 0, r = 0;
  bool expect_split = false;
  bool split = false;
  bool matches_tensor = false;  // only meaningful when n = -1 mod r
  bool lambda_matches = false;  // only meaningful when split
  size_t solution_dim = 0;
  size_t unknowns = 0, rank_system = 0, rank_augmented = 0;
  std::vector<CycNum> lambda;   // closed form, specialized
  std::vector<CycNum> coupling;  // solver output, same order
};

SpecializeReport specialize_and_compare(int n, int r);

struct DeltaPowerReport {
  std::vector<LPoly3> image;  // Delta_n^k b at s = q = 1
  bool matches = false;
};

DeltaPowerReport sq1_delta_powers(int n, int k);

}  // namespace rhorep
