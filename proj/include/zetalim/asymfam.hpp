// Asymptotically exact families over a fixed base field: limit invariants
// phi_{r^f} (finite support plus an optional geometric tail), the limit
// zeta log-derivative, the basic inequality, the convergence residuals of
// the truncated limit sums, and synthetic family generation.
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "zetalim/errors.hpp"
#include "zetalim/util.hpp"

namespace zetalim {

struct geometric_tail {
  double c = 0.0;     // phi_{r^f} = c * r^{beta f} for f >= f_start
  double beta = 0.0;  // must satisfy beta < 1/2 for convergence at 1/2
  int f_start = 1;
};

struct tv_invariants {
  long long r = 2;
  std::map<int, double> phi;  // degree f -> phi_{r^f} (finite support part)
  std::optional<geometric_tail> tail;

  double phi_at(int f) const {
    auto it = phi.find(f);
    double v = it != phi.end() ? it->second : 0.0;
    if (tail && f >= tail->f_start)
      v += tail->c * std::pow(static_cast<double>(r), tail->beta * f);
    return v;
  }
};

struct family_member {
  double g = 0.0;                     // genus
  std::map<int, long long> phi;      // degree -> place count
};

// Tail-averaged estimates of phi from the last `window` members; spread
// diagnostics record max - min of the averaged ratios per degree.
struct estimate_result {
  tv_invariants inv;
  std::map<int, double> spread;
};
estimate_result estimate_invariants(const std::vector<family_member>& members,
                                    int window, long long r = 2);

// Basic inequality value sum_f f phi_{r^f} / (r^{f/2} - 1).
struct bi_ff_result {
  double value = 0.0;
  bool pass = false;
  bool equality = false;  // within 1e-9 of 1
};
bi_ff_result basic_ineq_ff(const tv_invariants& inv);

// Z_family(s) = -sum_f f phi_{r^f} / (r^{fs} - 1), truncated at `cutoff`
// with a tail bound derived from the basic inequality.  Re s > 1/2.
struct limit_z_value {
  cplx value;
  double tail_bound = 0.0;
};
limit_z_value limit_z(const tv_invariants& inv, cplx s, int cutoff);

struct convergence_fit {
  double delta_hat = 0.0;   // decay rate of log_r |residual| per unit N
  bool exact_zero = false;  // all residuals at floating-point zero
  int points_used = 0;
};

struct fam_residual_report {
  double residual = 0.0;
  double envelope = 0.0;
  bool pass = false;
};

// Residual of the truncated Z at 1/2 + eps against the full limit:
// residual(N) = -sum_{f > N} f phi / (r^{(1/2+eps)f} - 1);
// envelope C / (eps0 r^{eps0 N}).
fam_residual_report corollary13_residual(const tv_invariants& inv, int N,
                                         double eps, double C = 8.0);

// Residual at s = 1/2 exactly (convergent under strict basic inequality /
// tail decay): residual(N) = -sum_{f > N} f phi / (r^{f/2} - 1), plus the
// fitted decay rate delta_hat of log_r |residual| vs N.
struct onehalf_result {
  std::vector<double> residuals;  // per N in the grid
  convergence_fit fit;
};
onehalf_result theorem_onehalf_residual(const tv_invariants& inv,
                                        const std::vector<int>& N_grid);

// kappa = sum_f phi_{r^f} log_r(r^f / (r^f - 1)).
double kappa_limit(const tv_invariants& inv);

// residual(N) = partial kappa sum - kappa.
fam_residual_report corollary15_residual(const tv_invariants& inv, int N);

// Integer member counts floor(phi_alpha * g_i) with a repair pass keeping
// every member inside the Weil-type place bound.
std::vector<family_member> synth_family(const std::map<int, double>& targets,
                                        long long r,
                                        const std::vector<double>& genus_schedule);

}  // namespace zetalim
