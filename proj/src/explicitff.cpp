#include "zetalim/explicitff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetalim/errors.hpp"
#include "zetalim/ffcore.hpp"

namespace zetalim {

cplx psi_v(const std::vector<cplx>& v, cplx t) {
  cplx acc = 0.0;
  for (int n = static_cast<int>(v.size()) - 1; n >= 0; --n) acc = (acc + v[n]) * t;
  return acc;  // Horner on t*(v_1 + t*(v_2 + ...)).
}

ef_check explicit_formula_check(const std::vector<cplx>& v,
                                const std::vector<long long>& counts,
                                const inverse_roots& roots, long long r) {
  if (counts.size() < v.size())
    throw insufficient_depth("counts table shorter than test-sequence support");
  double sr = std::sqrt(static_cast<double>(r));
  kahan_csum lhs;
  double w = 1.0;
  for (std::size_t n = 0; n < v.size(); ++n) {
    w /= sr;
    lhs.add(v[n] * w * static_cast<double>(counts[n]));
  }
  kahan_csum rhs;
  rhs.add(psi_v(v, cplx(sr)));
  rhs.add(psi_v(v, cplx(1.0 / sr)));
  for (const auto& p : roots.pi) rhs.add(-psi_v(v, p / sr));
  ef_check out;
  out.lhs = lhs.value();
  out.rhs = rhs.value();
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

sdecomposition s_decomposition(const lpolynomial& P, const inverse_roots& roots,
                               int N, cplx eps) {
  if (N < 1) throw domain_error("truncation depth must be positive");
  long long r = P.r;
  const double lr = std::log(static_cast<double>(r));
  cplx R = std::exp((0.5 + eps) * lr);
  double eps0 = eps.real();

  std::vector<long long> counts = extend_counts(P, N);
  auto places = places_from_counts(counts);

  sdecomposition sd;
  kahan_csum s0, s1, s2, s3, t, r0, r3;
  cplx Rinv = 1.0 / R;
  cplx Rn = 1.0;
  for (int n = 1; n <= N; ++n) {
    Rn *= Rinv;
    s0.add(Rn * static_cast<double>(counts[n - 1]));
    s1.add(std::exp(static_cast<double>(n) * (0.5 - eps) * lr));
    s2.add(Rn);
  }
  for (const auto& p : roots.pi) {
    cplx x = p / R;
    cplx xn = 1.0;
    kahan_csum geo;
    for (int n = 1; n <= N; ++n) {
      xn *= x;
      geo.add(xn);
    }
    s3.add(geo.value());
    // R3 = -sum_j x^{N+1} / (1 - x).
    r3.add(-(xn * x) / (1.0 - x));
  }
  // T and R0 from the place table; R0 summed directly as the tail
  //   sum_{f<=N} f Phi_f sum_{m: fm>N} R^{-fm}
  // to avoid forming it as a difference of nearly equal quantities.
  for (const auto& [f, phi] : places) {
    if (phi == 0) continue;
    cplx Rf = std::exp(static_cast<double>(f) * (0.5 + eps) * lr);
    double fphi = static_cast<double>(f) * static_cast<double>(phi);
    t.add(fphi / (Rf - 1.0));
    int m0 = N / f + 1;  // first m with f*m > N
    cplx first = std::pow(1.0 / Rf, m0);
    r0.add(fphi * first / (1.0 - 1.0 / Rf));
  }
  sd.S0 = s0.value();
  sd.S1 = s1.value();
  sd.S2 = s2.value();
  sd.S3 = s3.value();
  sd.T = t.value();
  sd.R0 = r0.value();
  sd.R3 = r3.value();
  if (eps0 > 0) {
    double ren = std::exp(-eps0 * N * lr);  // r^{-eps0 N}
    sd.bound_S2 = 4.0;
    sd.bound_R0 =
        32.0 * ren * (P.g * std::exp(-0.25 * N * lr) + 1.0 / eps0);
    sd.bound_R3 = 4.0 * P.g * ren / eps0;
  }
  return sd;
}

ff_residual_report theorem1_residual(const lpolynomial& P,
                                     const inverse_roots& roots, int N, cplx eps,
                                     double C1, double C2) {
  double eps0 = eps.real();
  if (eps0 <= 0) throw domain_error("Re eps must be positive");
  long long r = P.r;
  const double lr = std::log(static_cast<double>(r));

  ff_residual_report rep;
  rep.sd = s_decomposition(P, roots, N, eps);
  cplx z = z_ff_closed(roots, r, P.g, eps);
  cplx Rm = std::exp((-0.5 + eps) * lr);
  rep.residual = rep.sd.T + z + 1.0 / (Rm - 1.0);

  cplx R = std::exp((0.5 + eps) * lr);
  rep.spath_residual =
      rep.sd.S1 + rep.sd.S2 - 1.0 / (R - 1.0) + rep.sd.R0 - rep.sd.R3;
  rep.cross_gap = std::abs(rep.residual - rep.spath_residual);

  rep.envelope = C1 * P.g / (eps0 * std::exp(eps0 * N * lr)) +
                 C2 * std::exp(0.5 * N * lr);
  rep.pass = std::abs(rep.residual) <= rep.envelope;
  return rep;
}

bi_terms basic_ineq_ff_terms(const inverse_roots& roots, long long r, int g,
                             double eps) {
  if (eps <= 0) throw domain_error("eps must be a positive real");
  if (static_cast<int>(roots.pi.size()) != 2 * g)
    throw domain_error("expected 2g inverse roots");
  const double lr = std::log(static_cast<double>(r));
  double R = std::exp((0.5 + eps) * lr);
  double r12e = std::exp((1.0 + 2.0 * eps) * lr);  // r^{1+2eps} = R^2

  // Group the 2g roots into conjugate pairs (real roots pair with an equal
  // real root; multiplicities make that possible for every corpus curve).
  std::vector<cplx> pool = roots.pi;
  std::vector<std::pair<cplx, cplx>> pairs;
  const double tol = 1e-8 * std::sqrt(static_cast<double>(r));
  std::vector<bool> used(pool.size(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = i;
    double bd = std::numeric_limits<double>::max();
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (used[j]) continue;
      double dd = std::abs(pool[j] - std::conj(pool[i]));
      if (dd < bd) {
        bd = dd;
        best = j;
      }
    }
    if (best == i || bd > tol)
      throw domain_error("inverse roots are not closed under conjugation");
    used[best] = true;
    pairs.emplace_back(pool[i], pool[best]);
  }

  bi_terms out;
  kahan_sum total;
  for (const auto& [p1, p2] : pairs) {
    cplx denom = (R - p1) * (R - p2);
    double mod2 = (p1 * p2).real();  // |pi|^2 for a conjugate pair
    double term = ((r12e - mod2) / denom).real();
    out.terms.push_back(term);
    total.add(term);
  }
  out.total = total.value();
  return out;
}

}  // namespace zetalim
