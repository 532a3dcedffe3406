#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"

using namespace rhorep;
using rhorep::testing::random_cyc;

namespace {

std::complex<double> root(int r, long k) { return std::polar(1.0, std::numbers::pi * static_cast<double>(k) / (2.0 * r)); }

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-10) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("cyclotomic field has degree phi(4r)") {
  // phi(12) = 4, phi(16) = 8, phi(20) = 8, phi(24) = 8, phi(8) = 4
  CHECK(CycField::get(3).degree() == 4);
  CHECK(CycField::get(4).degree() == 8);
  CHECK(CycField::get(5).degree() == 8);
  CHECK(CycField::get(6).degree() == 8);
  CHECK(CycField::get(2).degree() == 4);
  CHECK(&CycField::get(4) == &CycField::get(4));
}

TEST_CASE("zeta powers evaluate to the primitive root") {
  for (int r : {2, 3, 4, 5, 6, 7}) {
    const auto& f = CycField::get(r);
    for (long k = -8 * r; k <= 8 * r; k += 3) CHECK(near(f.zeta_pow(k).to_complex(), root(r, k)));
    CHECK(f.zeta_pow(4 * r).is_one());
    CHECK(f.zeta_pow(2 * r) == -f.one());
    CHECK(near(f.q().to_complex(), std::polar(1.0, std::numbers::pi / r)));
  }
}

TEST_CASE("s = q^{r-1} and s^2 = q^{-2}") {
  for (int r : {3, 4, 5, 6}) {
    const auto& f = CycField::get(r);
    CHECK(f.s() == f.q_pow(r - 1));
    CHECK(f.s_pow(2) == f.q_pow(-2));
    CHECK(f.s_pow(-3) * f.s_pow(3) == f.one());
  }
}

TEST_CASE("inverse and division") {
  const auto& f = CycField::get(4);
  CHECK(f.q() * f.q().inverse() == f.one());
  CHECK(f.q_pow(-1) == f.q().inverse());
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(f.one() / f.zero(), std::domain_error);
  CycNum x = f.from_int(3) + f.q() - f.zeta_pow(5);
  CHECK((x / x).is_one());
  CHECK(x.pow(-2) * x.pow(2) == f.one());
  CHECK(x.pow(0).is_one());
}

TEST_CASE("mixed fields are rejected") {
  const CycNum a = CycField::get(3).q(), b = CycField::get(4).q();
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
  CHECK_THROWS_AS(CycField::get(1), std::invalid_argument);
  CHECK_THROWS_AS(CycNum(CycField::get(3), {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CycNum().field(), std::logic_error);
}

TEST_CASE("quantum integers") {
  for (int r : {3, 4, 5, 6}) {
    const auto& f = CycField::get(r);
    CHECK(f.qint(0).is_zero());
    CHECK(f.qint(1).is_one());
    CHECK(f.qint(r).is_zero());
    CHECK(f.qint(-2) == -f.qint(2));
    for (int x = 1; x < r; ++x) {
      // [x] = sin(pi x / r) / sin(pi / r), real and positive for 0 < x < r
      const double expect = std::sin(std::numbers::pi * x / r) / std::sin(std::numbers::pi / r);
      CHECK(near(f.qint(x).to_complex(), expect));
      CHECK(f.qint(x) == f.qint(r - x));
    }
    CHECK(f.qnum(1) * f.qint(3) == f.qnum(3));
  }
}

TEST_CASE("quantum factorials and binomials") {
  const auto& f = CycField::get(5);
  CHECK(f.qfact(0).is_one());
  CHECK(f.qfact(3) == f.qint(1) * f.qint(2) * f.qint(3));
  CHECK_THROWS_AS(f.qfact(5), std::domain_error);
  CHECK_THROWS_AS(f.qfact(-1), std::domain_error);
  CHECK(f.qbinom(4, 0).is_one());
  CHECK(f.qbinom(4, 5).is_zero());
  // Pascal: [n choose m] = q^{-m} [n-1 choose m-1] + q^{n-m} [n-1 choose m]
  for (int n = 1; n < 5; ++n)
    for (int m = 1; m < n; ++m)
      CHECK(f.qbinom(n, m) == f.q_pow(-(n - m)) * f.qbinom(n - 1, m - 1) + f.q_pow(m) * f.qbinom(n - 1, m));
}

TEST_CASE("rational detection and printing") {
  const auto& f = CycField::get(3);
  mpq_class v;
  CHECK(f.rational(mpq_class(2, 3)).is_rational(&v));
  CHECK(v == mpq_class(2, 3));
  CHECK_FALSE(f.q().is_rational());
  CHECK(f.zero().to_string() == "0");
  CHECK(f.from_int(-2).to_string().find('2') != std::string::npos);
}

TEST_CASE("json round trip") {
  for (int r : {2, 3, 4, 5}) {
    for (int k = 0; k < 20; ++k) {
      CycNum x = random_cyc(r);
      CHECK(cyc_from_json(to_json_value(x)) == x);
      CHECK(cyc_from_json(nlohmann::json::parse(to_json_value(x).dump())) == x);
    }
  }
  auto j = to_json_value(CycField::get(3).rational(mpq_class(-1, 4)));
  CHECK(j["r"] == 3);
  CHECK(j["coeffs"][0] == "-1/4");
}

TEST_CASE("property: field axioms and complex evaluation is a homomorphism") {
  for (int r : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 25; ++trial) {
      CycNum a = random_cyc(r), b = random_cyc(r), c = random_cyc(r);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a - a == zero_like(a));
      CHECK(near((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-8));
      CHECK(near((a + c).to_complex(), a.to_complex() + c.to_complex(), 1e-8));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == one_like(a));
        CHECK(near(a.inverse().to_complex(), 1.0 / a.to_complex(), 1e-6));
      }
    }
  }
}
