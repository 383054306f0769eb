// The built-in verification corpus: three fixed curves over F_2 plus a
// seeded batch of random hyperelliptic curves over F_3 and F_5.  The same
// seed always yields the same curve list, so downstream reports are
// reproducible byte for byte.
#pragma once

#include <cstdint>
#include <vector>

#include "zetalim/ffcore.hpp"
#include "zetalim/util.hpp"

namespace zetalim {

// Fixed members: the projective line over F_2, the plane cubic
// X^3 + Y^3 + Z^3 (genus 1), and the plane quartic
// X^3 Y + Y^3 Z + Z^3 X (genus 3), both over F_2.
std::vector<curve_model> fixed_corpus();

// One random squarefree hyperelliptic curve y^2 = f(x) of the requested
// genus over F_p (odd p): deg f = 2g + 2 or 2g + 1, chosen by the RNG,
// rejection-sampled until make_hyperelliptic accepts.
curve_model random_hyperelliptic(const field_spec& fld, int g, det_rng& rng,
                                 int index);

// Fixed corpus plus `per_cell` random hyperelliptic curves for every genus
// in 1..10 over F_3 and 1..7 over F_5, derived deterministically from the
// seed.
std::vector<curve_model> default_corpus(std::uint64_t seed, int per_cell = 2);

}  // namespace zetalim
