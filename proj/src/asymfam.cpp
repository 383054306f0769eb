#include "zetalim/asymfam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace zetalim {

namespace {

void validate(const tv_invariants& inv) {
  if (inv.r < 2) throw domain_error("family base r must be >= 2");
  for (const auto& [f, v] : inv.phi) {
    if (f < 1) throw domain_error("invariant degrees must be positive");
    if (v < 0) throw domain_error("invariants must be nonnegative");
  }
  if (inv.tail) {
    if (inv.tail->c < 0)
      throw domain_error("tail amplitude must be nonnegative");
    if (inv.tail->c > 0 && inv.tail->beta >= 0.5)
      throw no_convergence_at_half(
          "geometric tail must decay faster than r^{f/2}");
  }
}

// sum_{f > from} term(f, phi_at(f)) over the support of the invariants.
// All the series this module sums have one sign and eventually geometric
// decay, so the summation is cancellation-free: it carries full relative
// precision even when the total sits far below 1 ulp of the leading
// magnitude of some other quantity.  The tail portion stops once a term
// falls below 1e-19 of the accumulated value (terms are monotone there).
template <class Term>
double sum_beyond(const tv_invariants& inv, int from, Term term_of) {
  int finite_top = 0;
  for (const auto& [f, v] : inv.phi)
    if (v != 0.0) finite_top = std::max(finite_top, f);
  bool has_tail = inv.tail && inv.tail->c > 0;
  kahan_sum acc;
  const int hard_cap = from + 8'000'000;
  for (int f = from + 1; f <= hard_cap; ++f) {
    bool in_finite = f <= finite_top;
    bool in_tail = has_tail && f >= inv.tail->f_start;
    if (!in_finite && !in_tail) {
      if (!has_tail) break;
      continue;  // gap between the finite support and the tail start
    }
    double v = inv.phi_at(f);
    if (v != 0.0) {
      double t = term_of(f, v);
      acc.add(t);
      if (!in_finite && in_tail &&
          (t == 0.0 || std::abs(t) <= 1e-19 * std::abs(acc.value())))
        break;
    }
  }
  return acc.value();
}

}  // namespace

estimate_result estimate_invariants(const std::vector<family_member>& members,
                                    int window, long long r) {
  if (static_cast<int>(members.size()) < 3)
    throw too_few_members("need at least three family members");
  for (std::size_t i = 1; i < members.size(); ++i)
    if (!(members[i].g > members[i - 1].g))
      throw domain_error("genus schedule must be strictly increasing");
  int W = std::clamp(window, 1, static_cast<int>(members.size()));
  std::set<int> degrees;
  for (std::size_t i = members.size() - W; i < members.size(); ++i)
    for (const auto& [f, c] : members[i].phi) degrees.insert(f);
  estimate_result out;
  out.inv.r = r;
  for (int f : degrees) {
    double lo = std::numeric_limits<double>::max(), hi = 0.0;
    kahan_sum acc;
    for (std::size_t i = members.size() - W; i < members.size(); ++i) {
      auto it = members[i].phi.find(f);
      double ratio =
          (it == members[i].phi.end() ? 0.0 : static_cast<double>(it->second)) /
          members[i].g;
      acc.add(ratio);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    double mean = acc.value() / W;
    if (mean != 0.0) out.inv.phi[f] = mean;
    out.spread[f] = hi - lo;
  }
  return out;
}

bi_ff_result basic_ineq_ff(const tv_invariants& inv) {
  validate(inv);
  double lr = std::log(static_cast<double>(inv.r));
  bi_ff_result out;
  out.value = sum_beyond(inv, 0, [lr](int f, double v) {
    return f * v / std::expm1(0.5 * f * lr);
  });
  out.pass = out.value <= 1.0 + 1e-9;
  out.equality = std::abs(out.value - 1.0) <= 1e-9;
  return out;
}

limit_z_value limit_z(const tv_invariants& inv, cplx s, int cutoff) {
  validate(inv);
  if (s.real() <= 0.5)
    throw domain_error("limit zeta log-derivative requires Re s > 1/2");
  if (cutoff < 1) throw domain_error("cutoff must be positive");
  double lr = std::log(static_cast<double>(inv.r));
  kahan_csum acc;
  for (int f = 1; f <= cutoff; ++f) {
    double v = inv.phi_at(f);
    if (v == 0.0) continue;
    acc.add(-(f * v) / (std::exp(cplx(f) * s * lr) - 1.0));
  }
  // Tail bound via the basic inequality: for every f > cutoff,
  //   |f phi / (r^{fs} - 1)| <= ratio(f) * f phi / (r^{f/2} - 1)
  // with ratio(f) = (r^{f/2}-1) / (r^{f sigma}-1) decreasing in f, so the
  // tail is at most ratio(cutoff+1) times the basic-inequality mass.
  double sigma = s.real();
  double sup_ratio = std::expm1(0.5 * (cutoff + 1) * lr) /
                     std::expm1(sigma * (cutoff + 1) * lr);
  double bi_mass = std::max(basic_ineq_ff(inv).value, 1.0);
  return {acc.value(), sup_ratio * bi_mass};
}

fam_residual_report corollary13_residual(const tv_invariants& inv, int N,
                                         double eps, double C) {
  validate(inv);
  if (eps <= 0) throw domain_error("eps must be positive");
  if (N < 1) throw domain_error("N must be positive");
  double lr = std::log(static_cast<double>(inv.r));
  fam_residual_report rep;
  // residual(N) = -(tail of the convergent series beyond N).
  rep.residual = sum_beyond(inv, N, [lr, eps](int f, double v) {
    return -(f * v) / std::expm1((0.5 + eps) * f * lr);
  });
  rep.envelope = C / (eps * std::exp(eps * N * lr));
  rep.pass = std::abs(rep.residual) <= rep.envelope;
  return rep;
}

onehalf_result theorem_onehalf_residual(const tv_invariants& inv,
                                        const std::vector<int>& N_grid) {
  validate(inv);
  if (N_grid.empty()) throw domain_error("N grid must be non-empty");
  double lr = std::log(static_cast<double>(inv.r));
  onehalf_result out;
  for (int N : N_grid) {
    if (N < 1) throw domain_error("N must be positive");
    out.residuals.push_back(sum_beyond(inv, N, [lr](int f, double v) {
      return -(f * v) / std::expm1(0.5 * f * lr);
    }));
  }
  // Least squares of log_r |residual| against N.  Exact zeros (grid beyond
  // the support, or total underflow) carry no slope information and are
  // excluded; everything else is a cancellation-free sum with full
  // relative precision, however small, so no magnitude floor applies.
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < out.residuals.size(); ++i) {
    double a = std::abs(out.residuals[i]);
    if (a > 0.0) {
      xs.push_back(static_cast<double>(N_grid[i]));
      ys.push_back(std::log(a) / lr);
    }
  }
  if (xs.size() < 2) {
    bool all_zero = true;
    for (double res : out.residuals) all_zero = all_zero && res == 0.0;
    out.fit.exact_zero = all_zero;
    out.fit.delta_hat = std::numeric_limits<double>::infinity();
    out.fit.points_used = static_cast<int>(xs.size());
    return out;
  }
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw no_convergence_at_half("degenerate N grid");
  double slope = (n * sxy - sx * sy) / denom;
  out.fit.delta_hat = -slope;
  out.fit.points_used = static_cast<int>(xs.size());
  return out;
}

double kappa_limit(const tv_invariants& inv) {
  validate(inv);
  double lr = std::log(static_cast<double>(inv.r));
  // log_r(r^f / (r^f - 1)) = -log1p(-r^{-f}) / ln r, overflow-free.
  return sum_beyond(inv, 0, [lr](int f, double v) {
    return -v * std::log1p(-std::exp(-f * lr)) / lr;
  });
}

fam_residual_report corollary15_residual(const tv_invariants& inv, int N) {
  validate(inv);
  if (N < 1) throw domain_error("N must be positive");
  double lr = std::log(static_cast<double>(inv.r));
  fam_residual_report rep;
  // partial sum - kappa = -(tail beyond N).
  rep.residual = sum_beyond(inv, N, [lr](int f, double v) {
    return v * std::log1p(-std::exp(-f * lr)) / lr;
  });
  rep.envelope = 0.0;  // envelope comes from the fitted decay rate
  rep.pass = true;
  return rep;
}

std::vector<family_member> synth_family(const std::map<int, double>& targets,
                                        long long r,
                                        const std::vector<double>& genus_schedule) {
  tv_invariants inv;
  inv.r = r;
  for (const auto& [f, v] : targets) {
    if (v < 0) throw infeasible_targets("targets must be nonnegative");
    if (v != 0) inv.phi[f] = v;
  }
  bi_ff_result bi = basic_ineq_ff(inv);
  if (bi.value > 1.0 + 1e-9)
    throw infeasible_targets("targets violate the basic inequality");
  if (genus_schedule.size() < 3)
    throw too_few_members("schedule needs at least three genera");
  for (std::size_t i = 1; i < genus_schedule.size(); ++i)
    if (!(genus_schedule[i] > genus_schedule[i - 1]))
      throw domain_error("genus schedule must be strictly increasing");
  std::vector<family_member> out;
  for (double g : genus_schedule) {
    if (g <= 0) throw domain_error("genera must be positive");
    family_member m;
    m.g = g;
    for (const auto& [f, v] : inv.phi) {
      long long cnt = static_cast<long long>(std::floor(v * g));
      // Repair pass: clamp to the Weil-type bound for a genus-g curve.
      double cap = (std::pow(static_cast<double>(r), f) + 1.0 +
                    2.0 * g * std::pow(static_cast<double>(r), f / 2.0)) /
                   f;
      if (static_cast<double>(cnt) > cap)
        cnt = static_cast<long long>(std::floor(cap));
      if (cnt > 0) m.phi[f] = cnt;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace zetalim
