#include "zetalim/corpus.hpp"

#include <cstdio>
#include <string>

namespace zetalim {

namespace {

std::string pad3(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", n);
  return buf;
}

}  // namespace

std::vector<curve_model> fixed_corpus() {
  field_spec f2 = make_field(2, 1);
  std::vector<curve_model> out;
  out.push_back(make_projective_line(f2, "p1_f2"));
  out.push_back(make_plane(f2,
                           {{3, 0, 0, 1}, {0, 3, 0, 1}, {0, 0, 3, 1}}, 3,
                           "fermat_f2"));
  out.push_back(make_plane(f2,
                           {{3, 1, 0, 1}, {0, 3, 1, 1}, {1, 0, 3, 1}}, 4,
                           "klein_f2"));
  return out;
}

curve_model random_hyperelliptic(const field_spec& fld, int g, det_rng& rng,
                                 int index) {
  std::string id =
      "hyp_r" + std::to_string(fld.r) + "_g" + std::to_string(g) + "_" +
      pad3(index);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    int deg = 2 * g + 1 + static_cast<int>(rng.below(2));
    std::vector<long long> f(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i)
      f[static_cast<std::size_t>(i)] =
          static_cast<long long>(rng.below(static_cast<std::uint64_t>(fld.r)));
    f[static_cast<std::size_t>(deg)] = static_cast<long long>(
        1 + rng.below(static_cast<std::uint64_t>(fld.r - 1)));
    try {
      return make_hyperelliptic(fld, std::move(f), id);
    } catch (const bad_model&) {
      // not squarefree (or a p-th power slipped in); draw again
    }
  }
  throw bad_model("could not sample a squarefree hyperelliptic model");
}

std::vector<curve_model> default_corpus(std::uint64_t seed, int per_cell) {
  std::vector<curve_model> out = fixed_corpus();
  det_rng rng(seed);
  int index = 0;
  field_spec f3 = make_field(3, 1);
  for (int g = 1; g <= 10; ++g)
    for (int j = 0; j < per_cell; ++j)
      out.push_back(random_hyperelliptic(f3, g, rng, ++index));
  field_spec f5 = make_field(5, 1);
  for (int g = 1; g <= 7; ++g)
    for (int j = 0; j < per_cell; ++j)
      out.push_back(random_hyperelliptic(f5, g, rng, ++index));
  return out;
}

}  // namespace zetalim
