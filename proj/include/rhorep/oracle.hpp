#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rhorep/weightspace.hpp"

namespace rhorep::oracle {

/// Floating-point model of the same operators, built from the quasi-triangular
/// R-matrix q^{H(x)H/2} sum_k {1}^{2k}/{k}! q^{k(k-1)/2} E^k (x) F^k, the flip,
/// and the normalisation q^{-(r-1)^2/2}, with q = exp(i pi / r) throughout.
using ZMatrix = Eigen::MatrixXcd;

ZMatrix rhat_pair(int r);
ZMatrix sigma(int n, int l, int r, int i);
ZMatrix op_E(int n, int l, int r);
ZMatrix op_F(int n, int l, int r);

ZMatrix to_complex(const CMatrix& m);
/// Largest entrywise distance.
double max_diff(const ZMatrix& a, const ZMatrix& b);

struct FloatCheck {
  double worst = 0.0;
  std::string where;
  size_t entries = 0;
};

/// Compare sigma_i, E, F on V_{n,l} and the W-restricted generators against the model.
FloatCheck check_cell(int n, int l, int r);

}  // namespace rhorep::oracle
