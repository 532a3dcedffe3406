#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace rhorep;
using rhorep::testing::count_compositions;

TEST_CASE("kappa and binomials against brute force") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(0, 0) == 1);
  for (int r = 2; r <= 6; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int l = 0; l <= n * (r - 1) + 1; ++l) CHECK(kappa(l, r, n) == count_compositions(l, r, n));
  CHECK(kappa(2, 4, 3) == 6);
  // dim V_{n, n(r-1)-l} = dim V_{n,l}
  CHECK(kappa(7, 4, 3) == kappa(2, 4, 3));
}

TEST_CASE("basis enumeration") {
  auto b = enumerate_basis(3, 2, 4);
  CHECK(b->dim() == 6);
  CHECK(b->strong_weight() == 3 * 3 - 4);
  CHECK(std::is_sorted(b->order().begin(), b->order().end()));
  for (size_t k = 0; k < b->dim(); ++k) {
    CHECK(b->index_of(b->at(k)) == k);
    int sum = 0;
    for (int v : b->at(k)) {
      CHECK(v >= 0);
      CHECK(v < 4);
      sum += v;
    }
    CHECK(sum == 2);
  }
  CHECK_FALSE(b->index_of({2, 0, 1}).has_value());
  CHECK_THROWS_AS(b->require_index({0, 0, 0}), std::out_of_range);
  CHECK(enumerate_basis(3, 2, 4) == b);
  CHECK_THROWS_AS(enumerate_basis(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(2, -1, 3), std::invalid_argument);
  CHECK(enumerate_basis(2, 9, 3)->dim() == 0);
}

TEST_CASE("A and B partition the basis with the predicted sizes") {
  for (int r = 3; r <= 5; ++r)
    for (int n = 2; n <= 5; ++n)
      for (int l = 1; l < r; ++l) {
        auto b = enumerate_basis(n, l, r);
        CHECK(b->A_indices().size() + b->B_indices().size() == b->dim());
        CHECK(static_cast<long long>(b->A_indices().size()) == binom(n + l - 2, l));
        CHECK(static_cast<long long>(b->B_indices().size()) == kappa(l - 1, r, n));
      }
  CHECK(enumerate_basis(3, 0, 3)->A_indices().size() == 1);
}

TEST_CASE("named vectors") {
  CHECK(c_vec(3, 2) == Composition{0, 1, 0});
  CHECK(b_vec(3, 1) == Composition{2, 0, 0});
  CHECK(a_vec(4, 1, 3) == Composition{1, 0, 1, 0});
}

TEST_CASE("E b_i = s^{n-i} c_i") {
  for (int r : {3, 4, 5})
    for (int n = 2; n <= 5; ++n) {
      const auto& f = CycField::get(r);
      auto v2 = enumerate_basis(n, 2, r);
      auto v1 = enumerate_basis(n, 1, r);
      CMatrix e = op_E(n, 2, r);
      for (int i = 1; i <= n; ++i) {
        CMatrix expect = zero_matrix(r, v1->dim(), 1);
        expect(v1->require_index(c_vec(n, i)), 0) = f.s_pow(n - i);
        CHECK(e.column(v2->require_index(b_vec(n, i))) == expect);
      }
    }
}

TEST_CASE("F c_i in the a, b basis") {
  for (int r : {3, 4, 5})
    for (int n = 2; n <= 5; ++n) {
      const auto& f = CycField::get(r);
      auto v2 = enumerate_basis(n, 2, r);
      auto v1 = enumerate_basis(n, 1, r);
      CMatrix fm = op_F(n, 1, r);
      for (int i = 1; i <= n; ++i) {
        CMatrix expect = zero_matrix(r, v2->dim(), 1);
        for (int j = 1; j <= n - i; ++j) expect(v2->require_index(a_vec(n, i, i + j)), 0) = f.s_pow(-(i - 1) - j) * f.q_pow(2);
        for (int j = 1; j < i; ++j) expect(v2->require_index(a_vec(n, j, i)), 0) = f.s_pow(-(j - 1));
        expect(v2->require_index(b_vec(n, i)), 0) = f.qint(2) * f.qint(2) * f.s_pow(-(i - 1));
        CHECK(fm.column(v1->require_index(c_vec(n, i))) == expect);
      }
    }
}

TEST_CASE("commutator [E, F] = (K - K^{-1}) / (q - q^{-1})") {
  for (int r : {3, 4, 5})
    for (int n = 2; n <= 4; ++n)
      for (int l = 1; l < 2 * r && l < n * (r - 1); ++l) {
        const auto& f = CycField::get(r);
        const CycNum k = op_K(n, l, r);
        CHECK(k == f.s_pow(n) * f.q_pow(-2 * l));
        CMatrix comm = op_E(n, l + 1, r) * op_F(n, l, r) - op_F(n, l - 1, r) * op_E(n, l, r);
        const size_t d = enumerate_basis(n, l, r)->dim();
        CHECK(comm == ((k - k.inverse()) / f.qnum(1)) * identity_matrix(r, d));
      }
}

TEST_CASE("F is injective below r - 1 and E restricted to B is bijective") {
  for (int r : {3, 4, 5})
    for (int n = 2; n <= 5; ++n) {
      for (int l = 0; l < r - 1; ++l) CHECK(rank(op_F(n, l, r)) == enumerate_basis(n, l, r)->dim());
      for (int l = 1; l < r; ++l) {
        auto b = enumerate_basis(n, l, r);
        CMatrix e = op_E(n, l, r);
        auto bi = b->B_indices();
        CMatrix eb = zero_matrix(r, e.rows(), bi.size());
        for (size_t k = 0; k < bi.size(); ++k)
          for (size_t i = 0; i < e.rows(); ++i) eb(i, k) = e(i, bi[k]);
        CHECK(eb.rows() == eb.cols());
        CHECK(rank(eb) == eb.cols());
      }
    }
}

TEST_CASE("E and F vanish at the ends of the weight range") {
  CHECK(op_E(3, 0, 4).rows() == 0);
  CHECK(op_E(3, 0, 4).cols() == 1);
  CHECK(op_F(2, 2 * 3, 4).is_zero());
  CHECK(op_F(2, 2 * 3, 4).rows() == 0);
}

TEST_CASE("sparse and dense application agree") {
  const int n = 4, l = 2, r = 4;
  CMatrix cols = testing::random_matrix(r, enumerate_basis(n, l, r)->dim(), 2);
  CHECK(apply_E(n, l, r, cols) == op_E(n, l, r) * cols);
  CHECK(apply_F(n, l, r, cols) == op_F(n, l, r) * cols);
  CHECK(apply_E_pow(n, l, r, 2, cols) == op_E(n, l - 1, r) * op_E(n, l, r) * cols);
  CHECK(apply_F_pow(n, l, r, 2, cols) == op_F(n, l + 1, r) * op_F(n, l, r) * cols);
  CHECK_THROWS_AS(apply_E(n, l, r, testing::random_matrix(r, 3, 1)), std::invalid_argument);
}

TEST_CASE("sparse vectors") {
  auto b = enumerate_basis(3, 2, 4);
  const auto& f = CycField::get(4);
  SpaceVec u = SpaceVec::unit(b, {1, 1, 0});
  SpaceVec v = u * f.q();
  v += SpaceVec::unit(b, {0, 0, 2});
  CMatrix col = v.to_column();
  CHECK(SpaceVec::from_column(b, col) == v);
  SpaceVec w = v * f.zero();
  CHECK(w.entries.empty());
  u.add(b->require_index({1, 1, 0}), -f.one());
  CHECK(u.entries.empty());
}
