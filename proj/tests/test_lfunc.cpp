#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ref_lfunc.hpp"
#include "zetalim/errors.hpp"
#include "zetalim/ffcore.hpp"
#include "zetalim/lfunc.hpp"

using namespace zetalim;

namespace {

lpolynomial lp(const std::vector<long long>& a, long long r, int g) {
  lpolynomial P;
  P.r = r;
  P.g = g;
  P.a = a;
  return P;
}

// Sort inverse roots by (re, im) for stable comparison.
std::vector<cplx> sorted_pi(const inverse_roots& roots) {
  std::vector<cplx> v = roots.pi;
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

}  // namespace

TEST_CASE("numerator polynomials from counts match references") {
  CHECK(lpoly_from_counts({4, 16}, 3, 1).a == refdata::hyper_f3_g1_lpoly);
  CHECK(lpoly_from_counts({7, 13, 37, 73}, 3, 3).a == refdata::hyper_f3_g3_lpoly);
  CHECK(lpoly_from_counts({6, 46}, 5, 2).a == refdata::hyper_f5_g2_lpoly);
  CHECK(lpoly_from_counts({6, 36}, 5, 2).a == refdata::hyper_f5_g2e_lpoly);
  CHECK(lpoly_from_counts({13, 91}, 9, 1).a == refdata::hyper_f9_g1_lpoly);
  CHECK(lpoly_from_counts({3, 9}, 2, 1).a == refdata::plane_f2_fermat3_lpoly);
  CHECK(lpoly_from_counts({3, 5, 24}, 2, 3).a == refdata::plane_f2_klein_lpoly);
  CHECK(lpoly_from_counts({8}, 5, 1).a == refdata::toy_f5_g1_lpoly);
  // genus 0: the trivial polynomial
  CHECK(lpoly_from_counts({}, 2, 0).a == std::vector<long long>{1});
}

TEST_CASE("functional equation holds for constructed polynomials") {
  lpolynomial P = lpoly_from_counts({3, 5, 24}, 2, 3);
  REQUIRE(P.a.size() == 7);
  for (int i = 0; i <= P.g; ++i) {
    long long scale = 1;
    for (int j = 0; j < P.g - i; ++j) scale *= P.r;
    CHECK(P.a[2 * P.g - i] == scale * P.a[i]);
  }
  CHECK(P.a[0] == 1);
}

TEST_CASE("construction rejects inconsistent counts") {
  // forces a non-integral Newton step: a_2 = 5/2
  CHECK_THROWS_AS(lpoly_from_counts({4, 15}, 3, 2), non_integral_coefficient);
  // too few counts for the genus
  CHECK_THROWS_AS(lpoly_from_counts({4}, 3, 2), insufficient_depth);
}

TEST_CASE("count extension by the exact recurrence") {
  lpolynomial P1 = lp(refdata::hyper_f3_g1_lpoly, 3, 1);
  CHECK(extend_counts(P1, 12) == refdata::hyper_f3_g1_counts_ext);
  lpolynomial P2 = lp(refdata::hyper_f5_g2_lpoly, 5, 2);
  CHECK(extend_counts(P2, 12) == refdata::hyper_f5_g2_counts_ext);
  lpolynomial P3 = lp(refdata::toy_f5_g1_lpoly, 5, 1);
  CHECK(extend_counts(P3, 20) == refdata::toy_f5_g1_counts_ext);
}

TEST_CASE("extended places are the Moebius inversion of extended counts") {
  lpolynomial P = lp(refdata::hyper_f3_g1_lpoly, 3, 1);
  auto places = extend_places(P, 12);
  auto counts = extend_counts(P, 12);
  for (int n = 1; n <= 12; ++n) {
    long long total = 0;
    for (const auto& [f, phi] : places)
      if (n % f == 0) total += f * phi;
    CHECK(total == counts[n - 1]);
  }
}

TEST_CASE("inverse roots of the toy polynomial are exact") {
  lpolynomial P = lp(refdata::toy_f5_g1_lpoly, 5, 1);
  auto roots = lpoly_roots(P);
  REQUIRE(roots.pi.size() == 2);
  auto v = sorted_pi(roots);
  CHECK(v[0].real() == doctest::Approx(refdata::toy_f5_pi[0].real()).epsilon(1e-14));
  CHECK(v[0].imag() == doctest::Approx(refdata::toy_f5_pi[0].imag()).epsilon(1e-14));
  CHECK(v[1].real() == doctest::Approx(refdata::toy_f5_pi[1].real()).epsilon(1e-14));
  CHECK(v[1].imag() == doctest::Approx(refdata::toy_f5_pi[1].imag()).epsilon(1e-14));
  CHECK(roots.pair_tol <= 1e-12);
}

TEST_CASE("Riemann hypothesis check over the reference polynomials") {
  const std::vector<long long>* polys[] = {
      &refdata::hyper_f3_g1_lpoly, &refdata::hyper_f3_g3_lpoly,
      &refdata::hyper_f5_g2_lpoly, &refdata::hyper_f5_g2e_lpoly,
      &refdata::hyper_f9_g1_lpoly, &refdata::plane_f2_fermat3_lpoly,
      &refdata::plane_f2_klein_lpoly};
  long long rs[] = {3, 3, 5, 5, 9, 2, 2};
  int gs[] = {1, 3, 2, 2, 1, 1, 3};
  for (int i = 0; i < 7; ++i) {
    lpolynomial P = lp(*polys[i], rs[i], gs[i]);
    auto roots = lpoly_roots(P);
    REQUIRE(roots.pi.size() == static_cast<std::size_t>(2 * gs[i]));
    auto rh = rh_check(roots, rs[i], 1e-8);
    CHECK(rh.pass);
    CHECK(rh.max_dev <= 1e-8);
    // product of (1 - pi t) reproduces the coefficients
    std::vector<cplx> coef(roots.pi.size() + 1, 0.0);
    coef[0] = 1.0;
    for (cplx pi : roots.pi) {
      for (std::size_t j = coef.size() - 1; j >= 1; --j)
        coef[j] -= pi * coef[j - 1];
    }
    for (std::size_t j = 0; j < coef.size(); ++j) {
      CHECK(std::abs(coef[j].imag()) <= 1e-6 * std::abs(P.a[P.g]));
      CHECK(coef[j].real() ==
            doctest::Approx(static_cast<double>(P.a[j])).epsilon(1e-9));
    }
  }
}

TEST_CASE("root-modulus violations are reported") {
  // the inverse roots of 1 + 2t + 6t^2 have |pi| = sqrt(6); against r = 5
  // the modulus check must fail by sqrt(6) - sqrt(5)
  inverse_roots bad;
  bad.pi = {refdata::bad_f5_pi[0], refdata::bad_f5_pi[1]};
  auto rh = rh_check(bad, 5, 1e-8);
  CHECK_FALSE(rh.pass);
  CHECK(rh.max_dev ==
        doctest::Approx(std::sqrt(6.0) - std::sqrt(5.0)).epsilon(1e-9));
}

TEST_CASE("root finding rejects polynomials without the symmetry") {
  // 1 + 2t + 6t^2 over r = 5 breaks a_2 = r a_0
  CHECK_THROWS_AS(lpoly_roots(lp({1, 2, 6}, 5, 1)), bad_model);
  CHECK_THROWS_AS(lpoly_roots(lp({1, 2}, 5, 1)), bad_model);   // wrong size
  CHECK_THROWS_AS(lpoly_roots(lp({2, 2, 10}, 5, 1)), bad_model);  // a_0 != 1
}

TEST_CASE("repeated inverse roots are resolved with full multiplicity") {
  // 1 + 10t^2 + 25t^4 = (1 + 5t^2)^2: pi = +-i sqrt5, each twice
  lpolynomial P = lp(refdata::hyper_f5_g2_lpoly, 5, 2);
  auto roots = lpoly_roots(P);
  REQUIRE(roots.pi.size() == 4);
  int up = 0, down = 0;
  for (cplx pi : roots.pi) {
    CHECK(std::abs(pi.real()) <= 1e-9);
    CHECK(std::abs(std::abs(pi.imag()) - std::sqrt(5.0)) <= 1e-9);
    (pi.imag() > 0 ? up : down)++;
  }
  CHECK(up == 2);
  CHECK(down == 2);
}

TEST_CASE("log-derivative closed form matches the rational reference") {
  lpolynomial P1 = lp(refdata::hyper_f3_g1_lpoly, 3, 1);
  auto r1 = lpoly_roots(P1);
  // reference order: hyper_f3_g1 at s=2, s=0.75; hyper_f3_g3 at 0.75; toy at 3
  cplx z = z_ff_closed(r1, 3, 1, cplx(1.5));  // s = 2 -> eps = 1.5
  CHECK(z.real() == doctest::Approx(refdata::z_rational_vals[0].real()).epsilon(1e-12));
  CHECK(std::abs(z.imag()) <= 1e-12);
  z = z_ff_closed(r1, 3, 1, cplx(0.25));      // s = 0.75
  CHECK(z.real() == doctest::Approx(refdata::z_rational_vals[1].real()).epsilon(1e-12));

  lpolynomial P2 = lp(refdata::hyper_f3_g3_lpoly, 3, 3);
  auto r2 = lpoly_roots(P2);
  z = z_ff_closed(r2, 3, 3, cplx(0.25));
  CHECK(z.real() == doctest::Approx(refdata::z_rational_vals[2].real()).epsilon(1e-11));

  lpolynomial P3 = lp(refdata::toy_f5_g1_lpoly, 5, 1);
  auto r3 = lpoly_roots(P3);
  z = z_ff_closed(r3, 5, 1, cplx(2.5));       // s = 3
  CHECK(z.real() == doctest::Approx(refdata::z_rational_vals[3].real()).epsilon(1e-12));
}

TEST_CASE("closed form reports pole collisions") {
  lpolynomial P = lp(refdata::hyper_f3_g1_lpoly, 3, 1);
  auto roots = lpoly_roots(P);
  // eps = 1/2 puts r^{1/2+eps} on the pole at s = 1
  CHECK_THROWS_AS(z_ff_closed(roots, 3, 1, cplx(0.5)), pole_proximity);
}

TEST_CASE("series form agrees with the closed form where it converges") {
  lpolynomial P = lp(refdata::hyper_f3_g1_lpoly, 3, 1);
  auto roots = lpoly_roots(P);
  // depth 36 keeps 3^d within 64-bit count range
  auto places = extend_places(P, 36);

  for (cplx s : {cplx(2.0), cplx(2.5), cplx(3.0), cplx(2.5, 1.0)}) {
    auto sv = z_ff_series(places, 3, 1, s, 36);
    cplx closed = z_ff_closed(roots, 3, 1, s - cplx(0.5));
    CHECK(std::abs(sv.value - closed) <= std::max(sv.tail_bound, 1e-9));
    if (s.real() >= 2.5) CHECK(std::abs(sv.value - closed) <= 1e-9);
  }
  // the tail bound shrinks as the cutoff grows
  auto lo = z_ff_series(places, 3, 1, cplx(2.0), 16);
  auto hi = z_ff_series(places, 3, 1, cplx(2.0), 32);
  CHECK(hi.tail_bound < lo.tail_bound);
  CHECK(std::abs(lo.value - hi.value) <= lo.tail_bound);
  // the series domain requires Re s > 1
  CHECK_THROWS_AS(z_ff_series(places, 3, 1, cplx(0.9), 32), domain_error);
}

TEST_CASE("zeta evaluation at integer points") {
  lpolynomial P = lp(refdata::hyper_f3_g1_lpoly, 3, 1);
  cplx z = zeta_ff_eval(P, cplx(2.0));
  CHECK(z.real() == doctest::Approx(refdata::hyper_f3_g1_zeta_at2).epsilon(1e-14));
  CHECK(std::abs(z.imag()) <= 1e-14);
}

TEST_CASE("extended-precision roots agree with the double pipeline") {
  lpolynomial P = lp(refdata::plane_f2_klein_lpoly, 2, 3);
  auto ld = lpoly_roots_ld(P);
  REQUIRE(ld.size() == 6);
  for (const auto& pi : ld) {
    long double dev = std::abs(std::abs(pi) - std::sqrt(2.0l));
    CHECK(static_cast<double>(dev) <= 1e-12);
  }
}
