// Truncated explicit-formula identities for curves over finite fields:
// the exact test-sequence identity, the S-decomposition of the truncated
// log-derivative sum, the residual + error envelope, and the per-pair
// positivity terms behind the basic inequality.
#pragma once

#include <complex>
#include <map>
#include <vector>

#include "zetalim/lfunc.hpp"
#include "zetalim/util.hpp"

namespace zetalim {

// psi_v(t) = sum_{n=1}^{L} v_n t^n (v[0] holds v_1).
cplx psi_v(const std::vector<cplx>& v, cplx t);

// Exact identity: sum_n v_n r^{-n/2} N_n =
//   psi_v(sqrt r) + psi_v(1/sqrt r) - sum_j psi_v(pi_j / sqrt r).
struct ef_check {
  cplx lhs, rhs;
  double gap = 0.0;
};
ef_check explicit_formula_check(const std::vector<cplx>& v,
                                const std::vector<long long>& counts,
                                const inverse_roots& roots, long long r);

// Pieces of the truncated sum at R = r^{1/2+eps}:
//   S0 = sum_{n<=N} R^{-n} N_n            (count-weighted)
//   S1 = sum_{n<=N} r^{n(1/2-eps)}         (main growth)
//   S2 = sum_{n<=N} r^{-n(1/2+eps)}        (bounded)
//   S3 = sum_{j} sum_{n<=N} (pi_j/R)^n     (root oscillation)
//   T  = sum_{f<=N} f Phi_f / (R^f - 1)    (place-truncated)
//   R0 = T - S0 >= 0 for real eps          (higher prime powers)
//   R3 = -sum_j (pi_j/R)^{N+1} / (1 - pi_j/R)
struct sdecomposition {
  cplx S0, S1, S2, S3, T, R0, R3;
  double bound_S2 = 0, bound_R0 = 0, bound_R3 = 0;  // valid for real eps
};
sdecomposition s_decomposition(const lpolynomial& P, const inverse_roots& roots,
                               int N, cplx eps);

struct ff_residual_report {
  cplx residual;        // T + Z_K(1/2+eps) + 1/(r^{-1/2+eps} - 1)
  double envelope = 0;  // C1 g / (eps0 r^{eps0 N}) + C2 r^{N/2}
  bool pass = false;
  sdecomposition sd;
  cplx spath_residual;   // S1 + S2 - 1/(R-1) + R0 - R3
  double cross_gap = 0;  // |residual - spath_residual|
};
ff_residual_report theorem1_residual(const lpolynomial& P,
                                     const inverse_roots& roots, int N, cplx eps,
                                     double C1 = 40.0, double C2 = 4.0);

// Per-conjugate-pair values (r^{1+2eps} - |pi|^2) / ((R-pi)(R-conj pi)),
// each nonnegative iff |pi| <= r^{1/2+eps}; their total satisfies
//   total = Z_K(1/2+eps) + 1/(R-1) + 1/(r^{-1/2+eps}-1) + g.
struct bi_terms {
  std::vector<double> terms;
  double total = 0;
};
bi_terms basic_ineq_ff_terms(const inverse_roots& roots, long long r, int g,
                             double eps);

}  // namespace zetalim
