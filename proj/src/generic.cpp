#include "rhorep/generic.hpp"

#include <stdexcept>

namespace rhorep {

LMatrix cubic_inverse(const LMatrix& m) {
  // p(X) = X^3 - e1 X^2 + e2 X - e3 with roots 1, -s^{-2}, s^{-4} q^2.
  const LPoly3 a = 1, b = -LPoly3::monomial(0, -2), c = LPoly3::monomial(2, -4);
  const LPoly3 e1 = a + b + c, e2 = a * b + a * c + b * c, e3 = a * b * c;
  const LMatrix id = LMatrix::identity(m.rows(), LPoly3(1));
  LMatrix inv = e3.monomial_inverse() * (m * m - e1 * m + e2 * id);
  if (m * inv != id) throw std::logic_error("generator is not annihilated by the cubic relation");
  return inv;
}

namespace {

GeneratorSet<LPoly3> with_cubic_inverses(int n, std::vector<LMatrix> sigma) {
  GeneratorSet<LPoly3> g;
  g.n = n;
  for (auto& m : sigma) {
    g.sigma_inv.push_back(cubic_inverse(m));
    g.sigma.push_back(std::move(m));
  }
  return g;
}

RMatrix to_rat(const LMatrix& m) {
  return m.map([](const LPoly3& x) { return LRat(x); });
}

}  // namespace

GeneratorSet<LPoly3> generic_N20(int n) {
  if (n < 2) throw std::invalid_argument("generic N20 needs n >= 2");
  return with_cubic_inverses(n, n20_closed_form(n, generic_point()));
}

GeneratorSet<LPoly3> generic_N21(int n) {
  if (n < 3) throw std::invalid_argument("generic N21 needs n >= 3");
  return with_cubic_inverses(n, n21_closed_form(n, generic_point()));
}

LPoly3 at_s_sign(const LPoly3& p, int sign) {
  LPoly3 out;
  for (const auto& [e, c] : p.terms()) {
    const bool flip = sign < 0 && (e[1] % 2 != 0);
    out += LPoly3::monomial(e[0], 0, e[2], flip ? mpz_class(-c) : c);
  }
  return out;
}

GenericSplit split_generic_N20(int n) {
  auto gens = n20_closed_form(n, generic_point());
  const auto pairs = pair_list(n);
  GenericSplit out;
  out.lambda_last = LRat(LPoly3::monomial(0, 4, 1), LPoly3::monomial(0, 2 * n) - LPoly3::monomial(2, 0));
  for (auto [i, j] : pairs) out.lambda.push_back(LRat(LPoly3::monomial(0, 2 * n - i - j - 1)) * out.lambda_last);

  auto annihilates = [&](const std::vector<LMatrix>& ms, const std::vector<LRat>& lam) {
    const size_t d = ms.front().rows();
    RMatrix v(d, 1, LRat());
    v(0, 0) = LRat(LPoly3(1));
    for (size_t k = 0; k < lam.size(); ++k) v(k + 1, 0) = lam[k];
    for (const auto& m : ms) {
      RMatrix img = to_rat(m) * v - v;
      if (!img.is_zero()) return false;
    }
    return true;
  };
  out.identity_verified = annihilates(gens, out.lambda);

  // s^2 = 1: lambda_{i,j} = s^{2n-i-j-1} t/(1 - q^2).
  out.lambda_s2_one = LRat(LPoly3::t(), LPoly3(1) - LPoly3::monomial(2, 0));
  out.s2_one_verified = true;
  for (int sign : {1, -1}) {
    std::vector<LMatrix> ms;
    for (const auto& m : gens) ms.push_back(m.map([&](const LPoly3& x) { return at_s_sign(x, sign); }));
    std::vector<LRat> lam;
    for (auto [i, j] : pairs) {
      const int e = 2 * n - i - j - 1;
      lam.push_back(LRat(LPoly3(sign < 0 && e % 2 != 0 ? -1 : 1)) * out.lambda_s2_one);
    }
    out.s2_one_verified = out.s2_one_verified && annihilates(ms, lam);
  }
  return out;
}

SpecializeReport specialize_and_compare(int n, int r) {
  if (r < 3 || n < 2) throw std::invalid_argument("specialisation needs n >= 2 and r >= 3");
  SpecializeReport rep;
  rep.n = n;
  rep.r = r;
  rep.expect_split = (n + 1) % r != 0;
  const RingPoint<CycNum> pt = root_point(r);
  const auto gens = generic_N20(n);
  std::vector<CMatrix> spec;
  for (const auto& m : gens.sigma)
    spec.push_back(m.map([&](const LPoly3& x) { return specialize(x, pt.q, pt.s, pt.t); }));
  const auto& f = CycField::get(r);
  const size_t d = spec.front().rows();
  CMatrix w = zero_matrix(r, d, d - 1);
  for (size_t k = 0; k + 1 < d; ++k) w(k + 1, k) = f.one();
  auto res = find_equivariant_section(spec, w);
  rep.split = res.split;
  rep.solution_dim = res.solution_dim;
  rep.unknowns = res.unknowns;
  rep.rank_system = res.rank_system;
  rep.rank_augmented = res.rank_augmented;
  for (size_t k = 0; res.split && k < res.coupling.rows(); ++k) rep.coupling.push_back(res.coupling(k, 0));
  if (!rep.expect_split) {
    const NBasis& nb = n_space(n, 2, r);
    auto tensor = braid_on_N(nb, n, 2, r);
    rep.matches_tensor = true;
    for (size_t i = 0; i < spec.size(); ++i)
      if (tensor.sigma[i] != spec[i]) rep.matches_tensor = false;
  } else if (res.split) {
    auto split = split_generic_N20(n);
    rep.lambda_matches = true;
    for (size_t k = 0; k < split.lambda.size(); ++k) {
      rep.lambda.push_back(specialize(split.lambda[k], pt.q, pt.s, pt.t));
      if (res.solution_dim != 0 || rep.lambda.back() != res.coupling(k, 0)) rep.lambda_matches = false;
    }
  }
  return rep;
}

DeltaPowerReport sq1_delta_powers(int n, int k) {
  auto gens = generic_N20(n);
  GeneratorSet<LPoly3> flat;
  flat.n = n;
  auto at_one = [](const LPoly3& x) { return x.at_qs_one(); };
  for (size_t i = 0; i < gens.sigma.size(); ++i) {
    flat.sigma.push_back(gens.sigma[i].map(at_one));
    flat.sigma_inv.push_back(gens.sigma_inv[i].map(at_one));
  }
  const size_t d = flat.dim();
  LMatrix b(d, 1, LPoly3());
  b(0, 0) = 1;
  LMatrix img = flat.apply(half_twist_word(n).pow(k), b);
  DeltaPowerReport rep;
  rep.matches = true;
  for (size_t i = 0; i < d; ++i) {
    rep.image.push_back(img(i, 0));
    LPoly3 want = i == 0 ? LPoly3(1) : LPoly3::monomial(0, 0, 1, k);
    if (img(i, 0) != want) rep.matches = false;
  }
  return rep;
}

}  // namespace rhorep
