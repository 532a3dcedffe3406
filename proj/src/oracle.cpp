#include "rhorep/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "rhorep/braid.hpp"
#include "rhorep/lawrence.hpp"

namespace rhorep::oracle {

namespace {

using cd = std::complex<double>;

// q^x with q = exp(i pi / r), for real x.
cd qp(int r, double x) { return std::polar(1.0, std::numbers::pi * x / r); }

cd qnum(int r, int x) { return qp(r, x) - qp(r, -x); }

cd qint(int r, int x) { return qnum(r, x) / qnum(r, 1); }

// Strong weight of u_m in V_{r-1}.
int weight(int r, int m) { return r - 1 - 2 * m; }

// F^k u_m coefficient: prod_{a=m}^{m+k-1} [a+1][r-1-a].
cd f_power(int r, int m, int k) {
  cd c = 1.0;
  for (int a = m; a < m + k; ++a) c *= qint(r, a + 1) * qint(r, r - 1 - a);
  return c;
}

}  // namespace

ZMatrix rhat_pair(int r) {
  const int d = r * r;
  ZMatrix m = ZMatrix::Zero(d, d);
  const cd norm = qp(r, -0.5 * (r - 1) * (r - 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      cd fact = 1.0;
      for (int k = 0; k < r; ++k) {
        if (k > 0) fact *= qnum(r, k);
        if (k > i || j + k > r - 1) continue;
        // flip of (E^k u_i) (x) (F^k u_j) is u_{j+k} (x) u_{i-k}
        const int a = j + k, b = i - k;
        cd c = std::pow(qnum(r, 1), 2 * k) / fact * qp(r, k * (k - 1) / 2.0) * f_power(r, j, k);
        c *= qp(r, 0.5 * weight(r, a) * weight(r, b)) * norm;
        m(a * r + b, i * r + j) += c;
      }
    }
  return m;
}

ZMatrix sigma(int n, int l, int r, int i) {
  auto basis = enumerate_basis(n, l, r);
  const ZMatrix pair = rhat_pair(r);
  const auto d = static_cast<Eigen::Index>(basis->dim());
  ZMatrix m = ZMatrix::Zero(d, d);
  for (size_t k = 0; k < basis->dim(); ++k) {
    Composition c = basis->at(k);
    const int a = c[i - 1], b = c[i];
    for (int a2 = 0; a2 < r; ++a2) {
      const int b2 = a + b - a2;
      if (b2 < 0 || b2 >= r) continue;
      cd v = pair(a2 * r + b2, a * r + b);
      if (std::abs(v) == 0.0) continue;
      c[i - 1] = a2;
      c[i] = b2;
      m(static_cast<Eigen::Index>(basis->require_index(c)), static_cast<Eigen::Index>(k)) = v;
    }
  }
  return m;
}

ZMatrix op_E(int n, int l, int r) {
  auto src = enumerate_basis(n, l, r);
  auto dst = enumerate_basis(n, l - 1, r);
  ZMatrix m = ZMatrix::Zero(static_cast<Eigen::Index>(dst->dim()), static_cast<Eigen::Index>(src->dim()));
  for (size_t k = 0; k < src->dim(); ++k) {
    Composition c = src->at(k);
    for (int i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      cd coeff = 1.0;  // Delta(E) = 1 (x) E + E (x) K, K = k^2 has eigenvalue q^{weight}
      for (int j = i + 1; j < n; ++j) coeff *= qp(r, weight(r, c[j]));
      c[i] -= 1;
      m(static_cast<Eigen::Index>(dst->require_index(c)), static_cast<Eigen::Index>(k)) += coeff;
      c[i] += 1;
    }
  }
  return m;
}

ZMatrix op_F(int n, int l, int r) {
  auto src = enumerate_basis(n, l, r);
  auto dst = enumerate_basis(n, l + 1, r);
  ZMatrix m = ZMatrix::Zero(static_cast<Eigen::Index>(dst->dim()), static_cast<Eigen::Index>(src->dim()));
  for (size_t k = 0; k < src->dim(); ++k) {
    Composition c = src->at(k);
    for (int i = 0; i < n; ++i) {
      if (c[i] >= r - 1) continue;
      cd coeff = f_power(r, c[i], 1);  // Delta(F) = K^{-1} (x) F + F (x) 1
      for (int j = 0; j < i; ++j) coeff *= qp(r, -weight(r, c[j]));
      c[i] += 1;
      m(static_cast<Eigen::Index>(dst->require_index(c)), static_cast<Eigen::Index>(k)) += coeff;
      c[i] -= 1;
    }
  }
  return m;
}

ZMatrix to_complex(const CMatrix& m) {
  ZMatrix z(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return z;
}

double max_diff(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

FloatCheck check_cell(int n, int l, int r) {
  FloatCheck out;
  auto note = [&](double d, const std::string& what, size_t count) {
    out.entries += count;
    if (d > out.worst || std::isnan(d)) {
      out.worst = d;
      out.where = what;
    }
  };
  const std::string cell = "(n=" + std::to_string(n) + ",l=" + std::to_string(l) + ",r=" + std::to_string(r) + ")";
  const auto& w = w_basis(n, l, r);
  const ZMatrix wz = to_complex(w.vectors);
  const auto& gw = braid_on_W(n, l, r);
  for (int i = 1; i < n; ++i) {
    const ZMatrix s = sigma(n, l, r, i);
    const CMatrix& exact = sigma_matrix(n, l, r, i);
    note(max_diff(to_complex(exact), s), "sigma_" + std::to_string(i) + " on V" + cell, exact.rows() * exact.cols());
    const ZMatrix wimg = s * wz, wexp = wz * to_complex(gw.sigma[i - 1]);
    note(max_diff(wimg, wexp), "sigma_" + std::to_string(i) + " on W" + cell, gw.sigma[i - 1].rows() * gw.sigma[i - 1].cols());
  }
  if (l >= 1) {
    CMatrix e = rhorep::op_E(n, l, r);
    note(max_diff(to_complex(e), op_E(n, l, r)), "E" + cell, e.rows() * e.cols());
  }
  CMatrix f = rhorep::op_F(n, l, r);
  note(max_diff(to_complex(f), op_F(n, l, r)), "F" + cell, f.rows() * f.cols());
  return out;
}

}  // namespace rhorep::oracle
