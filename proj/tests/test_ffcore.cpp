#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "ref_ffcounts.hpp"
#include "zetalim/errors.hpp"
#include "zetalim/ffcore.hpp"

using namespace zetalim;

namespace {

std::vector<long long> counts_of(const curve_model& c, int depth) {
  return count_table(c, depth);
}

}  // namespace

TEST_CASE("field_spec validation and sizes") {
  field_spec f2 = make_field(2, 1);
  CHECK(f2.r == 2);
  field_spec f9 = make_field(3, 2);
  CHECK(f9.r == 9);
  CHECK_THROWS_AS(make_field(4, 1), bad_model);   // 4 is not prime
  CHECK_THROWS_AS(make_field(3, 0), bad_model);   // degree must be >= 1
  CHECK_THROWS_AS(make_field(-3, 1), bad_model);
}

TEST_CASE("gf arithmetic in F_4 and F_9") {
  gf f4(2, 2);
  CHECK(f4.order() == 4);
  // the canonical degree-2 modulus over F_2 is x^2 + x + 1
  const auto& m4 = gf::irreducible(2, 2);
  REQUIRE(m4.size() == 3);
  CHECK(m4[0] == 1);
  CHECK(m4[1] == 1);
  CHECK(m4[2] == 1);
  // alpha^2 = alpha + 1, so alpha^3 = 1
  auto a = f4.from_index(2);  // digits (0,1) -> the generator alpha
  auto a3 = f4.pow(a, 3);
  CHECK(f4.to_index(a3) == f4.to_index(f4.one()));
  // index round trip over the whole field
  for (long long i = 0; i < 4; ++i) CHECK(f4.to_index(f4.from_index(i)) == i);

  gf f9(3, 2);
  CHECK(f9.order() == 9);
  // multiplicative group order 8: a^8 = 1 for every nonzero a
  for (long long i = 1; i < 9; ++i) {
    auto x = f9.from_index(i);
    CHECK(f9.to_index(f9.pow(x, 8)) == f9.to_index(f9.one()));
  }
  // additive inverses: a + (0 - a) = 0
  for (long long i = 0; i < 9; ++i) {
    auto x = f9.from_index(i);
    auto nx = f9.sub(f9.zero(), x);
    CHECK(f9.is_zero(f9.add(x, nx)));
  }
}

TEST_CASE("quadratic character chi") {
  gf f9(3, 2);
  int plus = 0, minus = 0, zero = 0;
  for (long long i = 0; i < 9; ++i) {
    int c = f9.chi(f9.from_index(i));
    if (c == 1) ++plus;
    else if (c == -1) ++minus;
    else ++zero;
  }
  CHECK(zero == 1);
  CHECK(plus == 4);   // (q-1)/2 squares
  CHECK(minus == 4);
  // multiplicativity on a few pairs
  for (long long i = 1; i < 9; ++i)
    for (long long j = 1; j < 9; ++j) {
      auto x = f9.from_index(i), y = f9.from_index(j);
      CHECK(f9.chi(f9.mul(x, y)) == f9.chi(x) * f9.chi(y));
    }
}

TEST_CASE("subfield generator lands in the subfield") {
  gf f81(3, 4);
  auto g2 = f81.subfield_generator(2);  // image of the F_9 generator
  // it must satisfy the canonical degree-2 modulus x^2 + 1 over F_3:
  // g2^2 + 1 = 0
  auto sq = f81.mul(g2, g2);
  auto val = f81.add(sq, f81.one());
  CHECK(f81.is_zero(val));
  // and be fixed by Frobenius^2: g2^(3^2) = g2
  auto frob2 = f81.pow(g2, 9);
  CHECK(f81.to_index(frob2) == f81.to_index(g2));
}

TEST_CASE("point counts match independent references") {
  field_spec f2 = make_field(2, 1);
  field_spec f3 = make_field(3, 1);
  field_spec f5 = make_field(5, 1);
  field_spec f9 = make_field(3, 2);

  SUBCASE("projective line over F_2") {
    curve_model p1 = make_projective_line(f2);
    CHECK(counts_of(p1, 4) == std::vector<long long>{3, 5, 9, 17});
  }
  SUBCASE("hyperelliptic y^2 = x^3 + x + 1 over F_3") {
    curve_model c = make_hyperelliptic(f3, {1, 1, 0, 1});
    CHECK(c.genus == 1);
    CHECK(counts_of(c, 6) == refdata::hyper_f3_g1_counts);
  }
  SUBCASE("hyperelliptic genus 3 over F_3") {
    curve_model c = make_hyperelliptic(f3, {1, 2, 0, 0, 0, 0, 0, 1});
    CHECK(c.genus == 3);
    CHECK(counts_of(c, 4) == refdata::hyper_f3_g3_counts);
  }
  SUBCASE("hyperelliptic genus 2 over F_5") {
    curve_model c = make_hyperelliptic(f5, {1, 1, 0, 0, 0, 1});
    CHECK(c.genus == 2);
    CHECK(counts_of(c, 4) == refdata::hyper_f5_g2_counts);
  }
  SUBCASE("second genus-2 curve over F_5") {
    curve_model c = make_hyperelliptic(f5, {3, 1, 0, 0, 0, 0, 2});
    CHECK(c.genus == 2);
    CHECK(counts_of(c, 4) == refdata::hyper_f5_g2e_counts);
  }
  SUBCASE("hyperelliptic over the extension field F_9") {
    curve_model c = make_hyperelliptic(f9, {1, 3, 0, 1});
    CHECK(c.genus == 1);
    CHECK(counts_of(c, 3) == refdata::hyper_f9_g1_counts);
  }
  SUBCASE("Fermat cubic over F_2") {
    curve_model c = make_plane(
        f2, {{3, 0, 0, 1}, {0, 3, 0, 1}, {0, 0, 3, 1}}, 3, "fermat");
    CHECK(c.genus == 1);
    CHECK(counts_of(c, 6) == refdata::plane_f2_fermat3_counts);
  }
  SUBCASE("quartic plane curve over F_2") {
    curve_model c =
        make_plane(f2, {{3, 1, 0, 1}, {0, 3, 1, 1}, {1, 0, 3, 1}}, 4, "klein");
    CHECK(c.genus == 3);
    CHECK(counts_of(c, 6) == refdata::plane_f2_klein_counts);
  }
}

TEST_CASE("model validation") {
  field_spec f2 = make_field(2, 1);
  field_spec f3 = make_field(3, 1);
  // hyperelliptic models require odd characteristic
  CHECK_THROWS_AS(make_hyperelliptic(f2, {1, 1, 0, 1}), bad_model);
  // degree must be at least 3
  CHECK_THROWS_AS(make_hyperelliptic(f3, {1, 0, 1}), bad_model);
  // f must be squarefree: (x+1)^2 (x+2) = x^3 + x^2 + 2x + 2 over F_3
  CHECK_THROWS_AS(make_hyperelliptic(f3, {2, 2, 1, 1}), bad_model);
  // f = x^3 has f' = 0 (p-th power times unit territory); also rejected
  CHECK_THROWS_AS(make_hyperelliptic(f3, {0, 0, 0, 1}), bad_model);
  // leading coefficient must be nonzero
  CHECK_THROWS_AS(make_hyperelliptic(f3, {1, 1, 0, 0}), bad_model);
  // plane models must be homogeneous of the stated degree
  CHECK_THROWS_AS(
      make_plane(f2, {{2, 0, 0, 1}, {0, 3, 0, 1}, {0, 0, 3, 1}}, 3), bad_model);
  // coefficient indices out of field range
  CHECK_THROWS_AS(make_hyperelliptic(f3, {1, 1, 0, 5}), bad_model);
}

TEST_CASE("enumeration budget is enforced") {
  field_spec f3 = make_field(3, 1);
  curve_model c = make_hyperelliptic(f3, {1, 1, 0, 1});
  CHECK_THROWS_AS(count_points(c, 40), budget_exceeded);
  CHECK_THROWS_AS(count_table(c, 6, 10), budget_exceeded);
  // generous budget: same values as the default
  CHECK(count_table(c, 4, kDefaultBudget) ==
        std::vector<long long>(refdata::hyper_f3_g1_counts.begin(),
                               refdata::hyper_f3_g1_counts.begin() + 4));
}

TEST_CASE("place inversion round trip") {
  auto places = places_from_counts(
      {refdata::hyper_f3_g1_counts.begin(), refdata::hyper_f3_g1_counts.begin() + 4});
  REQUIRE(places.size() == 4);
  for (int f = 1; f <= 4; ++f)
    CHECK(places.at(f) == refdata::hyper_f3_g1_places[f - 1]);
  // counts_from_places inverts places_from_counts
  for (int n = 1; n <= 4; ++n)
    CHECK(counts_from_places(places, n) == refdata::hyper_f3_g1_counts[n - 1]);
}

TEST_CASE("place inversion rejects inconsistent tables") {
  // (N_2 - N_1)/2 non-integral
  CHECK_THROWS_AS(places_from_counts({4, 17}), non_integral_inversion);
  // negative place count
  CHECK_THROWS_AS(places_from_counts({4, 2}), negative_count);
  CHECK(places_from_counts({}).empty());
}

TEST_CASE("place counts respect the Weil-type bound") {
  for (int f = 1; f <= 4; ++f)
    CHECK(weil_place_bound_ok(3, 1, f, refdata::hyper_f3_g1_places[f - 1]));
  // a count far above r^f/f + allowance must fail
  CHECK_FALSE(weil_place_bound_ok(3, 1, 2, 100));
}
