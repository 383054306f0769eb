#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "ref_analytic.hpp"
#include "ref_nf.hpp"
#include "zetalim/analytic.hpp"
#include "zetalim/errors.hpp"
#include "zetalim/nfquad.hpp"

using namespace zetalim;

TEST_CASE("Kronecker symbol basics") {
  // period-4 pattern of chi_{-4}: 1, 0, -1, 0 on 1, 2, 3, 4
  CHECK(kronecker(1, 4) == 1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(-4, 7) == -1);
  CHECK(kronecker(-4, 13) == 1);
  // chi_5 distinguishes residues mod 5
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(5, 3) == -1);
  CHECK(kronecker(5, 11) == 1);
  CHECK(kronecker(5, 19) == 1);
  CHECK(kronecker(5, 5) == 0);
  // complete multiplicativity in the lower argument
  for (long long D : {-23ll, 8ll, 5ll})
    for (long long a = 1; a <= 20; ++a)
      for (long long b = 1; b <= 20; ++b)
        CHECK(kronecker(D, a * b) == kronecker(D, a) * kronecker(D, b));
  // (a|2) via the 8-periodic rule
  CHECK(kronecker(8, 3) == kronecker(8, 11));
  CHECK(kronecker(17, 2) == 1);   // 17 = 1 mod 8
  CHECK(kronecker(21, 2) == -1);  // 21 = 5 mod 8
}

TEST_CASE("squarefree and fundamental discriminants") {
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(-23));
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(4));
  CHECK_FALSE(is_squarefree(-9));
  CHECK_FALSE(is_squarefree(50));

  CHECK(fundamental_discriminant(-1) == -4);
  CHECK(fundamental_discriminant(-23) == -23);  // -23 = 1 mod 4
  CHECK(fundamental_discriminant(5) == 5);
  CHECK(fundamental_discriminant(2) == 8);
  CHECK(fundamental_discriminant(3) == 12);
  CHECK(fundamental_discriminant(-5) == -20);
}

TEST_CASE("field construction") {
  quadratic_field q = make_rational();
  CHECK(q.D == 1);
  CHECK(q.degree == 1);
  CHECK(q.r1 == 1);
  CHECK(q.r2 == 0);
  CHECK(q.g == 0.0);

  quadratic_field qi = make_quadratic(-1);
  CHECK(qi.D == -4);
  CHECK(qi.w == 4);
  CHECK(qi.r1 == 0);
  CHECK(qi.r2 == 1);
  CHECK(qi.g == doctest::Approx(std::log(2.0)).epsilon(1e-15));

  quadratic_field q3 = make_quadratic(-3);
  CHECK(q3.w == 6);
  quadratic_field q23 = make_quadratic(-23);
  CHECK(q23.D == -23);
  CHECK(q23.w == 2);
  quadratic_field q5 = make_quadratic(5);
  CHECK(q5.r1 == 2);
  CHECK(q5.r2 == 0);
  CHECK(q5.w == 2);

  CHECK_THROWS_AS(make_quadratic(4), not_fundamental);
  CHECK_THROWS_AS(make_quadratic(-9), not_fundamental);
  CHECK_THROWS_AS(make_quadratic(0), not_fundamental);
}

TEST_CASE("splitting types follow the character") {
  quadratic_field qi = make_quadratic(-1);
  CHECK(splitting_type(qi, 2) == split_type::ramified);
  CHECK(splitting_type(qi, 5) == split_type::split);
  CHECK(splitting_type(qi, 3) == split_type::inert);
  quadratic_field q23 = make_quadratic(-23);
  CHECK(splitting_type(q23, 23) == split_type::ramified);
  CHECK(splitting_type(q23, 2) == split_type::split);
}

TEST_CASE("place tables match references") {
  auto m23 = place_counts_nf(-23, 50);
  std::map<long long, long long> want;
  for (const auto& row : refdata::places_m23_50) want[row[0]] = row[1];
  CHECK(m23 == want);

  auto p5 = place_counts_nf(5, 30);
  want.clear();
  for (const auto& row : refdata::places_p5_30) want[row[0]] = row[1];
  CHECK(p5 == want);

  // rational field: one place per prime
  auto q = place_counts_nf(1, 10);
  CHECK(q == std::map<long long, long long>{{2, 1}, {3, 1}, {5, 1}, {7, 1}});
}

TEST_CASE("prime splitting is balanced up to 1e5") {
  // simple sieve, then count split vs inert primes
  const int X = 100000;
  std::vector<bool> comp(X + 1, false);
  for (int p = 2; p * p <= X; ++p)
    if (!comp[p])
      for (int j = p * p; j <= X; j += p) comp[j] = true;

  auto tally = [&](long long d) {
    quadratic_field K = make_quadratic(d);
    long long split = 0, inert = 0, total = 0;
    for (int p = 2; p <= X; ++p) {
      if (comp[p]) continue;
      ++total;
      auto st = splitting_type(K, p);
      if (st == split_type::split) ++split;
      else if (st == split_type::inert) ++inert;
    }
    return std::array<long long, 3>{split, inert, total};
  };
  auto mi = tally(-1);
  CHECK(mi[0] == refdata::split_balance_Dm4[0]);
  CHECK(mi[1] == refdata::split_balance_Dm4[1]);
  CHECK(mi[2] == refdata::split_balance_Dm4[2]);
  auto p5 = tally(5);
  CHECK(p5[0] == refdata::split_balance_Dp5[0]);
  CHECK(p5[1] == refdata::split_balance_Dp5[1]);
  CHECK(p5[2] == refdata::split_balance_Dp5[2]);
}

TEST_CASE("imaginary class numbers by reduced forms") {
  for (const auto& row : refdata::imag_class_numbers)
    CHECK(class_number_imag(row[0]) == row[1]);
}

TEST_CASE("real regulators by the continued-fraction cycle") {
  for (const auto& row : refdata::real_regulators) {
    long long d = static_cast<long long>(row[0]);
    CHECK(regulator_real(d) == doctest::Approx(row[1]).epsilon(1e-12));
  }
}

TEST_CASE("residue of the Dedekind zeta at s = 1") {
  SUBCASE("Gaussian field: kappa = pi/4") {
    auto rd = residue_kappa(make_quadratic(-1));
    CHECK(rd.h == 1);
    CHECK(rd.w == 4);
    CHECK(rd.kappa == doctest::Approx(kPi / 4.0).epsilon(1e-9));
  }
  SUBCASE("imaginary fields: kappa = 2 pi h / (w sqrt|D|)") {
    for (const auto& row : refdata::imag_class_numbers) {
      long long D = row[0];
      long long d = (D % 4 == 0) ? D / 4 : D;
      quadratic_field K = make_quadratic(d);
      auto rd = residue_kappa(K);
      CHECK(rd.h == row[1]);
      double want = 2.0 * kPi * static_cast<double>(row[1]) /
                    (static_cast<double>(K.w) *
                     std::sqrt(static_cast<double>(-D)));
      CHECK(rd.kappa == doctest::Approx(want).epsilon(1e-9));
      CHECK(rd.ln_kappa == doctest::Approx(std::log(want)).epsilon(1e-9));
    }
  }
  SUBCASE("real fields: h recovered from the class number formula") {
    for (const auto& row : refdata::real_class_numbers) {
      long long d = row[0];
      auto rd = residue_kappa(make_quadratic(d));
      CHECK(rd.h == row[1]);
      // kappa = 2 h R / sqrt(D)
      quadratic_field K = make_quadratic(d);
      double want = 2.0 * static_cast<double>(rd.h) * rd.R /
                    std::sqrt(static_cast<double>(K.D));
      CHECK(rd.kappa == doctest::Approx(want).epsilon(1e-12));
    }
  }
  SUBCASE("kappa equals L(1, chi) for the quadratic field") {
    // zeta_K = zeta * L(s, chi_D), so the residue is L(1, chi_D)
    for (long long d : {-1ll, -23ll, 5ll}) {
      quadratic_field K = make_quadratic(d);
      auto rd = residue_kappa(K);
      CHECK(rd.kappa == doctest::Approx(l_one_chi(K.D)).epsilon(1e-9));
    }
  }
  SUBCASE("rational field: kappa = 1") {
    auto rd = residue_kappa(make_rational());
    CHECK(rd.kappa == 1.0);
    CHECK(rd.ln_kappa == 0.0);
  }
}

TEST_CASE("truncated Euler-product sums") {
  CHECK(bs_sum_nf(-4, 10) == doctest::Approx(refdata::bs_qi_N10).epsilon(1e-14));
  // hand value: ln 2 + 2 ln(5/4) + ln(9/8)
  double want = std::log(2.0) + 2.0 * std::log(5.0 / 4.0) + std::log(9.0 / 8.0);
  CHECK(bs_sum_nf(-4, 10) == doctest::Approx(want).epsilon(1e-14));
  // monotone nondecreasing in N
  CHECK(bs_sum_nf(-4, 100) >= bs_sum_nf(-4, 10));
}

TEST_CASE("trend of ln kappa over the genus across discriminants") {
  for (const auto& row : refdata::bs_trend) {
    long long d = static_cast<long long>(row[0]);
    quadratic_field K = make_quadratic(d);
    auto rd = residue_kappa(K);
    CHECK(rd.h == static_cast<long long>(row[1]));
    CHECK(rd.ln_kappa / K.g == doctest::Approx(row[2]).epsilon(1e-9));
  }
}

TEST_CASE("number-field limit inequality") {
  // the zero family satisfies the inequality trivially
  nf_invariants zero;
  auto z = basic_ineq_nf(zero);
  CHECK(z.value == 0.0);
  CHECK(z.pass);

  // archimedean constants match the references
  nf_invariants real_only;
  real_only.phi_r = 1.0;
  CHECK(basic_ineq_nf(real_only).value ==
        doctest::Approx(refdata::arch_const_real).epsilon(1e-12));
  nf_invariants cplx_only;
  cplx_only.phi_c = 1.0;
  CHECK(basic_ineq_nf(cplx_only).value ==
        doctest::Approx(refdata::arch_const_cplx).epsilon(1e-12));

  // finite places enter as phi_q ln q / (sqrt q - 1)
  nf_invariants fin;
  fin.phi[4] = 0.5;
  double want = 0.5 * std::log(4.0) / (2.0 - 1.0);
  CHECK(basic_ineq_nf(fin).value == doctest::Approx(want).epsilon(1e-12));
  CHECK(basic_ineq_nf(fin).pass);

  // and a clearly violating configuration fails
  nf_invariants bad;
  bad.phi_r = 1.0;
  bad.phi_c = 1.0;
  CHECK_FALSE(basic_ineq_nf(bad).pass);
}
