#include <catch_amalgamated.hpp>

#include <cmath>

#include "lal/thresholds.hpp"

using namespace lal;

namespace {

// Long-double re-evaluation of the palette bound, independent of the header.
long double palette_bound_ld(unsigned delta) {
  long double d = static_cast<long double>(delta);
  long double d13 = cbrtl(d);
  long double d53 = d * d13 * d13;
  long double c13 = cbrtl(2.0L);
  long double c23 = c13 * c13;
  return d * d + 3.0L * d53 / c23 + c23 * d53 / (d13 - c13);
}

}  // namespace

TEST_CASE("palette threshold values") {
  CHECK(nonrep_color_threshold(3) == 76);
  CHECK(nonrep_color_threshold(10) == 271);
  CHECK(nonrep_color_threshold(100) == 15083);
  CHECK_THROWS_AS(nonrep_color_threshold(2), error);
  CHECK_THROWS_AS(nonrep_color_threshold(1), error);
}

TEST_CASE("palette threshold matches a long-double evaluation") {
  for (unsigned delta : {3u, 4u, 7u, 10u, 25u, 100u, 1000u}) {
    long double ref = palette_bound_ld(delta);
    CHECK(std::abs(nonrep_color_threshold_raw(delta) - static_cast<double>(ref)) <
          1e-9 * static_cast<double>(ref));
    CHECK(nonrep_color_threshold(delta) == static_cast<std::uint64_t>(ceill(ref)));
  }
}

TEST_CASE("palette threshold is quadratic in the degree asymptotically") {
  // threshold / delta^2 - 1 decays like 3*2^{-2/3} * delta^{-1/3}
  double r6 = nonrep_color_threshold_raw(1'000'000) / 1e12;
  double r9 = nonrep_color_threshold_raw(1'000'000'000) / 1e18;
  CHECK(r6 > 1.0);
  CHECK(r9 > 1.0);
  CHECK(r9 - 1.0 < (r6 - 1.0) / 9.0);
  CHECK(std::abs((r6 - 1.0) * 1e2 - 3.0 / std::cbrt(4.0)) < 0.02);
}

TEST_CASE("binomial helper") {
  CHECK(binomial(3, 4) == 0.0);
  CHECK(binomial(4, 2) == 6.0);
  CHECK(binomial(28, 4) == 20475.0);
  CHECK(binomial(5, 0) == 1.0);
}

TEST_CASE("certificate with an empty clique class") {
  ramsey_certificate c = ramsey_certify(6, 5);
  CHECK(c.certified);
  CHECK(c.clique_class_empty);
  CHECK(std::abs(c.x_star - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(c.h1 - 2.0 / 9.0) < 1e-15);
  CHECK(c.p > 0.0);
  CHECK(c.p < 1.0);
  CHECK(std::abs(c.f - (c.x_star + c.y_star)) < 1e-15);
}

TEST_CASE("certificate fails once the clique term bites") {
  ramsey_certificate c = ramsey_certify(6, 8);
  CHECK_FALSE(c.certified);
  CHECK_FALSE(c.clique_class_empty);
  CHECK(std::abs(c.h1 + c.h2 - 0.791039) < 1e-3);
}

TEST_CASE("certificate rejects degenerate clique orders") {
  CHECK_THROWS_AS(ramsey_certify(2, 10), error);
  CHECK_THROWS_AS(ramsey_certify(4, 2), error);
}

TEST_CASE("largest certified order per clique size") {
  CHECK(ramsey_max_n(3) == 2);  // no n >= 3 certifies for triangles alone
  CHECK(ramsey_max_n(4) == 3);
  CHECK(ramsey_max_n(5) == 4);
  CHECK(ramsey_max_n(6) == 5);
  CHECK(ramsey_max_n(7) == 6);
  CHECK(ramsey_max_n(8) == 8);
  CHECK(ramsey_max_n(9) == 9);
  CHECK(ramsey_max_n(10) == 10);
}

TEST_CASE("max order grows with the clique size") {
  for (std::uint32_t k = 3; k < 12; ++k) CHECK(ramsey_max_n(k + 1) >= ramsey_max_n(k));
}

TEST_CASE("certified orders certify, the next one does not") {
  for (std::uint32_t k : {4u, 5u, 6u, 8u}) {
    std::uint32_t n = ramsey_max_n(k);
    CHECK(ramsey_certify(k, n).certified);
    CHECK_FALSE(ramsey_certify(k, n + 1).certified);
  }
}
