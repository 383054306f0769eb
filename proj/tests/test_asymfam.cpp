#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "ref_lfunc.hpp"
#include "zetalim/asymfam.hpp"
#include "zetalim/errors.hpp"

using namespace zetalim;

namespace {

// phi_{4^f} = 0.1 * 4^{-f/4} for all f >= 1, as a pure geometric tail
tv_invariants tail_family() {
  tv_invariants inv;
  inv.r = 4;
  inv.tail = geometric_tail{0.1, -0.25, 1};
  return inv;
}

// phi_4 = 1: meets the basic inequality with equality
tv_invariants equality_family() {
  tv_invariants inv;
  inv.r = 4;
  inv.phi[1] = 1.0;
  return inv;
}

}  // namespace

TEST_CASE("invariant estimation from member sequences") {
  // members whose ratios phi/g are already exact: estimates must match
  std::vector<family_member> members;
  for (double g : {100.0, 200.0, 400.0, 800.0}) {
    family_member m;
    m.g = g;
    m.phi[1] = static_cast<long long>(0.5 * g);
    m.phi[2] = static_cast<long long>(0.25 * g);
    members.push_back(m);
  }
  auto est = estimate_invariants(members, 3, 2);
  CHECK(est.inv.r == 2);
  CHECK(est.inv.phi.at(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(est.inv.phi.at(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(est.spread.at(1) <= 1e-12);
  CHECK(est.spread.at(2) <= 1e-12);

  // too few members
  members.resize(2);
  CHECK_THROWS_AS(estimate_invariants(members, 2, 2), too_few_members);
  // genera must increase strictly
  members.resize(3);
  members[2].g = members[1].g;
  CHECK_THROWS_AS(estimate_invariants(members, 2, 2), domain_error);
}

TEST_CASE("limit inequality value for the reference families") {
  auto tail = basic_ineq_ff(tail_family());
  CHECK(tail.value ==
        doctest::Approx(refdata::tailinv_basicineq).epsilon(1e-12));
  CHECK(tail.pass);
  CHECK_FALSE(tail.equality);

  auto eq = basic_ineq_ff(equality_family());
  CHECK(std::abs(eq.value - 1.0) <= 1e-12);
  CHECK(eq.pass);
  CHECK(eq.equality);

  // violating family: phi_4 = 1.2
  tv_invariants bad;
  bad.r = 4;
  bad.phi[1] = 1.2;
  CHECK_FALSE(basic_ineq_ff(bad).pass);
}

TEST_CASE("limit log-derivative") {
  auto tail = tail_family();
  auto v = limit_z(tail, cplx(0.8), 200);
  CHECK(v.value.real() ==
        doctest::Approx(refdata::tailinv_limitz_08).epsilon(1e-12));
  CHECK(std::abs(v.value.imag()) <= 1e-15);
  // deeper truncation moves the value by at most the reported tail bound
  auto v2 = limit_z(tail, cplx(0.8), 210);
  CHECK(std::abs(v2.value - v.value) <= v.tail_bound + 1e-18);

  // single-place family: Z(s) = -1/(4^s - 1) exactly
  auto eq = equality_family();
  auto ve = limit_z(eq, cplx(0.8), 50);
  double closed = -1.0 / (std::pow(4.0, 0.8) - 1.0);
  CHECK(ve.value.real() == doctest::Approx(closed).epsilon(1e-14));

  // domain: requires Re s > 1/2
  CHECK_THROWS_AS(limit_z(tail, cplx(0.5), 100), domain_error);
  CHECK_THROWS_AS(limit_z(tail, cplx(0.3, 2.0), 100), domain_error);
}

TEST_CASE("truncation residual of the limit log-derivative") {
  auto tail = tail_family();
  auto rep = corollary13_residual(tail, 10, 0.2);
  CHECK(std::abs(rep.residual - refdata::tailinv_cor13_N10_eps02) <=
        1e-9 * std::abs(refdata::tailinv_cor13_N10_eps02));
  CHECK(rep.envelope == doctest::Approx(8.0 / (0.2 * std::pow(4.0, 0.2 * 10)))
                            .epsilon(1e-12));
  CHECK(rep.pass);

  // decay rate: the log-log slope must at least match eps
  double prev = std::abs(corollary13_residual(tail, 8, 0.2).residual);
  double next = std::abs(corollary13_residual(tail, 16, 0.2).residual);
  double slope = (std::log(next) - std::log(prev)) / (8.0 * std::log(4.0));
  CHECK(slope <= -0.9 * 0.2);

  // finite support: residual is exactly zero beyond the support
  auto eq = equality_family();
  auto z = corollary13_residual(eq, 5, 0.2);
  CHECK(z.residual == 0.0);
  CHECK(z.pass);

  CHECK_THROWS_AS(corollary13_residual(tail, 0, 0.2), domain_error);
  CHECK_THROWS_AS(corollary13_residual(tail, 10, 0.0), domain_error);
}

TEST_CASE("residual at the half line and its fitted decay rate") {
  std::vector<int> grid;
  for (int N = 40; N <= 80; N += 4) grid.push_back(N);

  SUBCASE("decaying tail family") {
    tv_invariants inv;
    inv.r = 4;
    inv.tail = geometric_tail{0.1, -0.25, 1};
    auto res = theorem_onehalf_residual(inv, grid);
    REQUIRE(res.residuals.size() == grid.size());
    // the residuals are minuscule, so compare relatively
    CHECK(std::abs(res.residuals[0] -
                   refdata::onehalf_residual_beta_neg_quarter_N40) <=
          1e-9 * std::abs(refdata::onehalf_residual_beta_neg_quarter_N40));
    CHECK(std::abs(res.residuals[5] -
                   refdata::onehalf_residual_beta_neg_quarter_N60) <=
          1e-9 * std::abs(refdata::onehalf_residual_beta_neg_quarter_N60));
    CHECK_FALSE(res.fit.exact_zero);
    CHECK(res.fit.points_used == static_cast<int>(grid.size()));
    CHECK(res.fit.delta_hat ==
          doctest::Approx(refdata::deltahat_beta_neg_quarter).epsilon(1e-9));
  }
  SUBCASE("growing-but-convergent tail family") {
    tv_invariants inv;
    inv.r = 4;
    inv.tail = geometric_tail{0.1, 0.25, 1};
    auto res = theorem_onehalf_residual(inv, grid);
    CHECK(std::abs(res.residuals[0] -
                   refdata::onehalf_residual_beta_pos_quarter_N40) <=
          1e-9 * std::abs(refdata::onehalf_residual_beta_pos_quarter_N40));
    CHECK(std::abs(res.residuals[5] -
                   refdata::onehalf_residual_beta_pos_quarter_N60) <=
          1e-9 * std::abs(refdata::onehalf_residual_beta_pos_quarter_N60));
    CHECK(res.fit.delta_hat ==
          doctest::Approx(refdata::deltahat_beta_pos_quarter).epsilon(1e-9));
  }
  SUBCASE("finite support: exact-zero sentinel") {
    auto res = theorem_onehalf_residual(equality_family(), grid);
    for (double r : res.residuals) CHECK(r == 0.0);
    CHECK(res.fit.exact_zero);
    CHECK(res.fit.points_used == 0);
    CHECK(std::isinf(res.fit.delta_hat));
    CHECK(res.fit.delta_hat > 0.0);
  }
  SUBCASE("tails at the convergence boundary are rejected") {
    tv_invariants inv;
    inv.r = 4;
    inv.tail = geometric_tail{0.1, 0.5, 1};
    CHECK_THROWS_AS(theorem_onehalf_residual(inv, grid),
                    no_convergence_at_half);
  }
}

TEST_CASE("limit of the Euler-product logarithm") {
  CHECK(kappa_limit(tail_family()) ==
        doctest::Approx(refdata::tailinv_kappa).epsilon(1e-12));
  // phi_4 = 1: kappa = log_4(4/3)
  double want = std::log(4.0 / 3.0) / std::log(4.0);
  CHECK(kappa_limit(equality_family()) == doctest::Approx(want).epsilon(1e-14));
  tv_invariants none;
  none.r = 4;
  CHECK(kappa_limit(none) == 0.0);
}

TEST_CASE("partial-sum residual of the Euler-product limit") {
  auto tail = tail_family();
  auto rep = corollary15_residual(tail, 10);
  CHECK(std::abs(rep.residual - refdata::tailinv_cor15_N10) <=
        1e-9 * std::abs(refdata::tailinv_cor15_N10));
  CHECK(rep.pass);
  // |residual| decreases in N
  double a = std::abs(corollary15_residual(tail, 5).residual);
  double b = std::abs(corollary15_residual(tail, 10).residual);
  double c = std::abs(corollary15_residual(tail, 20).residual);
  CHECK(b < a);
  CHECK(c < b);

  // finite support: geometric bound r^{-N} r/(r-1) holds (trivially, at 0)
  auto eq = equality_family();
  for (int N : {1, 3, 8}) {
    auto z = corollary15_residual(eq, N);
    CHECK(std::abs(z.residual) <= std::pow(4.0, -N) * (4.0 / 3.0));
  }
}

TEST_CASE("synthetic families") {
  std::map<int, double> targets = {{1, 0.4}, {2, 0.1}};
  std::vector<double> genera = {50.0, 100.0, 200.0, 400.0};
  auto fam = synth_family(targets, 4, genera);
  REQUIRE(fam.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(fam[i].g == genera[i]);
    // counts are the floor of target * genus, up to the Weil-type cap
    CHECK(fam[i].phi.at(1) <= static_cast<long long>(0.4 * genera[i]));
    CHECK(fam[i].phi.at(1) >= static_cast<long long>(0.4 * genera[i]) - 1);
  }
  // round trip through estimation recovers the targets to O(1/g)
  auto est = estimate_invariants(fam, 2, 4);
  CHECK(std::abs(est.inv.phi.at(1) - 0.4) <= 2.0 / genera[0]);
  CHECK(std::abs(est.inv.phi.at(2) - 0.1) <= 2.0 / genera[0]);

  // equality targets are feasible; anything above is not
  std::map<int, double> eq_targets = {{1, 1.0}};
  CHECK_NOTHROW(synth_family(eq_targets, 4, genera));
  std::map<int, double> bad_targets = {{1, 1.05}};
  CHECK_THROWS_AS(synth_family(bad_targets, 4, genera), infeasible_targets);

  // genus schedules must be strictly increasing and long enough
  CHECK_THROWS_AS(synth_family(targets, 4, {10.0, 10.0, 20.0}), domain_error);
  CHECK_THROWS_AS(synth_family(targets, 4, {10.0, 20.0}), too_few_members);
}

TEST_CASE("invariant validation") {
  tv_invariants bad;
  bad.r = 1;  // not a prime power >= 2
  CHECK_THROWS_AS(basic_ineq_ff(bad), domain_error);
  tv_invariants neg;
  neg.r = 4;
  neg.phi[1] = -0.5;
  CHECK_THROWS_AS(basic_ineq_ff(neg), domain_error);
  tv_invariants badf;
  badf.r = 4;
  badf.phi[0] = 1.0;  // degrees start at 1
  CHECK_THROWS_AS(basic_ineq_ff(badf), domain_error);
}
