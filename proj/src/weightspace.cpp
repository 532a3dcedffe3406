#include "rhorep/weightspace.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cache.hpp"

namespace rhorep {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long long kappa(int l, int r, int n) {
  long long total = 0;
  for (int s = 0; s * r <= l; ++s) {
    int t = l - s * r;
    long long term = binom(n + t - 1, t) * binom(n, s);
    total += (s % 2 ? -term : term);
  }
  return total;
}

namespace {

void enumerate(int n, int l, int r, Composition& cur, std::vector<Composition>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == n) {
    if (l == 0) out.push_back(cur);
    return;
  }
  const int rest = n - pos - 1;
  for (int v = 0; v <= std::min(l, r - 1); ++v) {
    if (l - v > rest * (r - 1)) continue;
    cur.push_back(v);
    enumerate(n, l - v, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SpaceBasis::SpaceBasis(int n, int l, int r) : n_(n), l_(l), r_(r) {
  if (n < 1 || r < 2 || l < 0) throw std::invalid_argument("weight space needs n >= 1, r >= 2, l >= 0");
  Composition cur;
  enumerate(n, l, r, cur, order_);
  for (size_t k = 0; k < order_.size(); ++k) index_.emplace(order_[k], k);
}

std::optional<size_t> SpaceBasis::index_of(const Composition& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t SpaceBasis::require_index(const Composition& c) const {
  auto k = index_of(c);
  if (!k) throw std::out_of_range("composition not in V_{" + std::to_string(n_) + "," + std::to_string(l_) + "}");
  return *k;
}

bool SpaceBasis::in_A(size_t k) const {
  const Composition& c = order_.at(k);
  if (l_ == 0) return true;
  if (l_ == 1) return c.back() == 0;
  for (int v : c)
    if (v != 0) return v == 1;
  return false;
}

std::vector<size_t> SpaceBasis::A_indices() const {
  std::vector<size_t> out;
  for (size_t k = 0; k < dim(); ++k)
    if (in_A(k)) out.push_back(k);
  return out;
}

std::vector<size_t> SpaceBasis::B_indices() const {
  std::vector<size_t> out;
  for (size_t k = 0; k < dim(); ++k)
    if (in_B(k)) out.push_back(k);
  return out;
}

std::shared_ptr<const SpaceBasis> enumerate_basis(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const SpaceBasis>> cache;
  return cache.get_or_make({n, l, r}, [&] { return std::make_shared<const SpaceBasis>(n, l, r); });
}

SpaceVec SpaceVec::unit(std::shared_ptr<const SpaceBasis> b, const Composition& c) {
  SpaceVec v(b);
  v.entries.emplace(b->require_index(c), CycField::get(b->r()).one());
  return v;
}

SpaceVec SpaceVec::from_column(std::shared_ptr<const SpaceBasis> b, const CMatrix& col, size_t j) {
  SpaceVec v(b);
  for (size_t i = 0; i < col.rows(); ++i)
    if (!col(i, j).is_zero()) v.entries.emplace(i, col(i, j));
  return v;
}

CMatrix SpaceVec::to_column() const {
  CMatrix col = zero_matrix(basis->r(), basis->dim(), 1);
  for (const auto& [k, v] : entries) col(k, 0) = v;
  return col;
}

void SpaceVec::add(size_t k, const CycNum& v) {
  auto [it, fresh] = entries.try_emplace(k, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
  } else if (v.is_zero()) {
    entries.erase(it);
  }
}

SpaceVec& SpaceVec::operator+=(const SpaceVec& o) {
  for (const auto& [k, v] : o.entries) add(k, v);
  return *this;
}

SpaceVec SpaceVec::operator*(const CycNum& s) const {
  SpaceVec out(basis);
  for (const auto& [k, v] : entries) out.add(k, v * s);
  return out;
}

bool SpaceVec::operator==(const SpaceVec& o) const { return basis == o.basis && entries == o.entries; }

Composition c_vec(int n, int i) {
  Composition c(n, 0);
  c.at(i - 1) = 1;
  return c;
}

Composition b_vec(int n, int i) {
  Composition c(n, 0);
  c.at(i - 1) = 2;
  return c;
}

Composition a_vec(int n, int i, int j) {
  Composition c(n, 0);
  c.at(i - 1) += 1;
  c.at(j - 1) += 1;
  return c;
}

CMatrix zero_matrix(int r, size_t rows, size_t cols) { return CMatrix(rows, cols, CycField::get(r).zero()); }

CMatrix identity_matrix(int r, size_t n) { return CMatrix::identity(n, CycField::get(r).one()); }

namespace {

struct SparseOp {
  size_t rows = 0, cols = 0;
  std::vector<std::tuple<size_t, size_t, CycNum>> entries;  // (row, col, value)
};

std::shared_ptr<const SparseOp> sparse_E(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const SparseOp>> cache;
  return cache.get_or_make({n, l, r}, [&] {
    const auto& f = CycField::get(r);
    auto src = enumerate_basis(n, l, r);
    auto op = std::make_shared<SparseOp>();
    op->cols = src->dim();
    if (l == 0) return std::shared_ptr<const SparseOp>(op);
    auto dst = enumerate_basis(n, l - 1, r);
    op->rows = dst->dim();
    for (size_t k = 0; k < src->dim(); ++k) {
      Composition c = src->at(k);
      for (int i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        int tail = 0;
        for (int j = i + 1; j < n; ++j) tail += c[j];
        CycNum coeff = f.s_pow(n - 1 - i) * f.q_pow(-2 * tail);
        c[i] -= 1;
        op->entries.emplace_back(dst->require_index(c), k, coeff);
        c[i] += 1;
      }
    }
    return std::shared_ptr<const SparseOp>(op);
  });
}

std::shared_ptr<const SparseOp> sparse_F(int n, int l, int r) {
  static KeyedCache<std::tuple<int, int, int>, std::shared_ptr<const SparseOp>> cache;
  return cache.get_or_make({n, l, r}, [&] {
    const auto& f = CycField::get(r);
    auto src = enumerate_basis(n, l, r);
    auto dst = enumerate_basis(n, l + 1, r);
    auto op = std::make_shared<SparseOp>();
    op->cols = src->dim();
    op->rows = dst->dim();
    for (size_t k = 0; k < src->dim(); ++k) {
      Composition c = src->at(k);
      int head = 0;
      for (int i = 0; i < n; ++i) {
        const int m = c[i];
        if (m <= r - 2) {
          CycNum coeff = f.s_pow(-i) * f.q_pow(2 * head) * f.qint(m + 1) * f.qint(r - 1 - m);
          c[i] += 1;
          op->entries.emplace_back(dst->require_index(c), k, coeff);
          c[i] -= 1;
        }
        head += m;
      }
    }
    return std::shared_ptr<const SparseOp>(op);
  });
}

CMatrix to_dense(const SparseOp& op, int r) {
  CMatrix m = zero_matrix(r, op.rows, op.cols);
  for (const auto& [i, j, v] : op.entries) m(i, j) += v;
  return m;
}

CMatrix apply_sparse(const SparseOp& op, int r, const CMatrix& cols) {
  if (cols.rows() != op.cols) throw std::invalid_argument("operator applied to a block of the wrong height");
  CMatrix out = zero_matrix(r, op.rows, cols.cols());
  for (const auto& [i, j, v] : op.entries)
    for (size_t c = 0; c < cols.cols(); ++c)
      if (!cols(j, c).is_zero()) out(i, c) += v * cols(j, c);
  return out;
}

}  // namespace

CMatrix op_E(int n, int l, int r) { return to_dense(*sparse_E(n, l, r), r); }

CMatrix op_F(int n, int l, int r) { return to_dense(*sparse_F(n, l, r), r); }

CycNum op_K(int n, int l, int r) {
  const auto& f = CycField::get(r);
  return f.s_pow(n) * f.q_pow(-2 * l);
}

CMatrix apply_E(int n, int l, int r, const CMatrix& cols) { return apply_sparse(*sparse_E(n, l, r), r, cols); }

CMatrix apply_F(int n, int l, int r, const CMatrix& cols) { return apply_sparse(*sparse_F(n, l, r), r, cols); }

CMatrix apply_E_pow(int n, int l, int r, int k, CMatrix cols) {
  for (int i = 0; i < k; ++i) cols = apply_E(n, l - i, r, cols);
  return cols;
}

CMatrix apply_F_pow(int n, int l, int r, int k, CMatrix cols) {
  for (int i = 0; i < k; ++i) cols = apply_F(n, l + i, r, cols);
  return cols;
}

}  // namespace rhorep
