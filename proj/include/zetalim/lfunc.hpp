// L-polynomials of curves over finite fields: construction from point
// counts via Newton identities + functional equation, exact count
// extension, inverse-root computation, and the log-derivative Z_K in both
// closed (root-based) and series (place-based) form.
#pragma once

#include <complex>
#include <map>
#include <vector>

#include "zetalim/errors.hpp"
#include "zetalim/util.hpp"

namespace zetalim {

// P(t) = sum a_i t^i, deg 2g, a_0 = 1, a_{2g-i} = r^{g-i} a_i.
struct lpolynomial {
  long long r = 0;
  int g = 0;
  std::vector<long long> a;  // size 2g+1
};

// Build P from exact counts N_1..N_g (deeper tables are fine; only the
// first g entries are used).  Checks integrality of every Newton step and
// the positivity P(1) > 0.
lpolynomial lpoly_from_counts(const std::vector<long long>& counts, long long r,
                              int g);

// Exact N_1..N_depth from the coefficient recurrence (128-bit internals).
std::vector<long long> extend_counts(const lpolynomial& P, int depth);

// Moebius-inverted places of extended counts, degrees 1..depth.
std::map<int, long long> extend_places(const lpolynomial& P, int depth);

// All 2g inverse roots (reciprocals of roots of P), closed under
// conjugation within tolerance.
struct inverse_roots {
  std::vector<cplx> pi;
  double pair_tol = 0.0;  // max conjugate-closure defect observed
};

inverse_roots lpoly_roots(const lpolynomial& P, double tol = 1e-10);

struct rh_result {
  bool pass = false;
  double max_dev = 0.0;  // max | |pi_j| - sqrt(r) |
};
rh_result rh_check(const inverse_roots& roots, long long r, double tol);

// Z_K(1/2 + eps) from the partial-fraction form; throws pole_proximity
// when r^{1/2+eps} collides with 1, r^{... -1} terms, or an inverse root.
cplx z_ff_closed(const inverse_roots& roots, long long r, int g, cplx eps);

// Z_K(s) = -sum_f f*Phi_f / (r^{fs} - 1) truncated at `cutoff`, with a
// rigorous tail bound from the Weil place bound (requires Re s > 1).
struct series_value {
  cplx value;
  double tail_bound = 0.0;
};
series_value z_ff_series(const std::map<int, long long>& places, long long r,
                         int g, cplx s, int cutoff);

// zeta_K(s) = P(r^{-s}) / ((1 - r^{-s})(1 - r^{1-s})).
cplx zeta_ff_eval(const lpolynomial& P, cplx s);

// Extended-precision root refinement used by the CLI's --precision mode:
// same algorithm carried out in long double.
std::vector<std::complex<long double>> lpoly_roots_ld(const lpolynomial& P,
                                                      long double tol = 1e-14l);

}  // namespace zetalim
