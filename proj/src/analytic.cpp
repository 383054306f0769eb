#include "zetalim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetalim/nfquad.hpp"

namespace zetalim {

namespace {

// B_2 .. B_16 (even Bernoulli numbers).
constexpr double kBern[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,
                            -1.0 / 30,    5.0 / 66,      -691.0 / 2730,
                            7.0 / 6,      -3617.0 / 510};

// exp(z) - 1 with full relative accuracy for small |z|.
cplx cexpm1(cplx z) {
  if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
  cplx term = z, acc = z;
  for (int k = 2; k < 40; ++k) {
    term *= z / static_cast<double>(k);
    acc += term;
    if (std::abs(term) < 1e-20 * (1.0 + std::abs(acc))) break;
  }
  return acc;
}

// f(u) = (e^{-uW} - 1)/u and f'(u), entire in u; the regularized boundary
// term of Euler-Maclaurin with W = ln(M + a).
void boundary_reg(cplx u, double W, cplx& f, cplx& fp) {
  if (std::abs(u) * W < 0.5) {
    // f  = sum_{k>=1} a_k u^{k-1},  a_k = (-W)^k / k!
    // f' = sum_{k>=2} a_k (k-1) u^{k-2}
    f = 0.0;
    fp = 0.0;
    double ak = 1.0;
    cplx ukm1 = 1.0, ukm2 = 0.0;
    for (int k = 1; k <= 70; ++k) {
      ak *= -W / k;
      f += ak * ukm1;
      if (k >= 2) fp += ak * static_cast<double>(k - 1) * ukm2;
      ukm2 = ukm1;
      ukm1 *= u;
    }
  } else {
    cplx em = cexpm1(-u * W);
    f = em / u;
    cplx e = em + 1.0;  // e^{-uW}
    fp = (-W * e * u - em) / (u * u);
  }
}

struct em_core {
  cplx value, deriv;
  double err;
};

// Shared Euler-Maclaurin engine; `regularized` subtracts the 1/(s-1) pole.
em_core hurwitz_em(cplx s, double a, int M, int B, bool regularized) {
  kahan_csum val, der;
  for (int n = 0; n < M; ++n) {
    double w = std::log(n + a);
    cplx e = std::exp(-s * w);
    val.add(e);
    der.add(-w * e);
  }
  double x = M + a;
  double W = std::log(x);
  cplx u = s - 1.0;
  cplx E = std::exp(-s * W);  // x^{-s}
  cplx f, fp;
  if (regularized) {
    boundary_reg(u, W, f, fp);
  } else {
    cplx e = std::exp(-u * W);  // x^{1-s}
    f = e / u;
    fp = -W * e / u - e / (u * u);
  }
  val.add(f);
  der.add(fp);
  val.add(0.5 * E);
  der.add(-0.5 * W * E);

  // Bernoulli corrections: B_{2k}/(2k)! * poch(s, 2k-1) * x^{1-s-2k}.
  cplx poch = 1.0, pochp = 0.0;  // running product and derivative
  double fact = 1.0;
  double xpow = 1.0;  // x^{1-2k} relative to E: starts at x^{-1} at k=1
  int j = 0;          // next factor (s + j)
  double err = 0;
  int K = B / 2;
  for (int k = 1; k <= K + 1; ++k) {
    // extend pochhammer to length 2k-1
    int need = 2 * k - 1;
    while (j < need) {
      cplx fac = s + static_cast<double>(j);
      pochp = pochp * fac + poch;
      poch = poch * fac;
      ++j;
    }
    fact *= (2.0 * k) * (2.0 * k - 1.0);  // (2k)!
    xpow /= (k == 1) ? x : x * x;         // x^{-(2k-1)}
    double c = kBern[k - 1] / fact;
    cplx term = c * poch * E * xpow;
    if (k <= K) {
      val.add(term);
      der.add(c * (pochp * E - W * poch * E) * xpow);
    } else {
      // First omitted correction serves as the honest error estimate,
      // inflated to cover the derivative path as well.
      err = std::abs(term) * (2.0 + W);
    }
  }
  return {val.value(), der.value(), err};
}

em_core hurwitz_auto(cplx s, double a, const em_params& em, bool regularized) {
  int M = std::max(10, em.M);
  int B = std::clamp(em.B - em.B % 2, 4, 14);
  for (int attempt = 0; attempt < 6; ++attempt) {
    em_core c = hurwitz_em(s, a, M, B, regularized);
    if (c.err <= em.target) return c;
    M *= 2;
  }
  throw no_convergence("Euler-Maclaurin failed to reach target accuracy");
}

// --- adaptive Gauss-Kronrod (G7, K15) --------------------------------------

constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double lo, double hi, double& kron, double& err) {
  double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double gk = 0, gg = 0;
  for (int i = 0; i < 8; ++i) {
    double fx;
    if (i == 7) {
      fx = f(c);
      gk += kKronrodW[7] * fx;
      gg += kGaussW[3] * fx;
    } else {
      double f1 = f(c - h * kKronrodX[i]);
      double f2 = f(c + h * kKronrodX[i]);
      gk += kKronrodW[i] * (f1 + f2);
      if (i % 2 == 1) gg += kGaussW[i / 2] * (f1 + f2);
    }
  }
  kron = gk * h;
  err = std::abs((gk - gg) * h);
}

template <class F>
double adaptive_quad(const F& f, double lo, double hi, double rel_tol) {
  struct seg {
    double lo, hi, val, err;
  };
  double v0, e0;
  gk15(f, lo, hi, v0, e0);
  std::vector<seg> stack{{lo, hi, v0, e0}};
  double tol_scale = std::max(std::abs(v0), 1e-8);
  int splits = 0;
  std::vector<seg> done;
  while (!stack.empty()) {
    seg s = stack.back();
    stack.pop_back();
    double local_tol = rel_tol * tol_scale * (s.hi - s.lo) / (hi - lo);
    if (s.err <= std::max(local_tol, 1e-16 * tol_scale) ||
        (s.hi - s.lo) < 1e-13 * (hi - lo)) {
      done.push_back(s);
      continue;
    }
    if (++splits > 20000) throw quadrature_failure("interval budget exhausted");
    double mid = 0.5 * (s.lo + s.hi);
    seg a{s.lo, mid, 0, 0}, b{mid, s.hi, 0, 0};
    gk15(f, a.lo, a.hi, a.val, a.err);
    gk15(f, b.lo, b.hi, b.val, b.err);
    stack.push_back(a);
    stack.push_back(b);
  }
  kahan_sum acc;
  for (const auto& s : done) acc.add(s.val);
  return acc.value();
}

}  // namespace

// ---------------------------------------------------------------------------

double digamma(double x) {
  if (x <= 0) throw domain_error("digamma requires a positive argument");
  kahan_sum shift;
  while (x < 16.0) {
    shift.add(-1.0 / x);
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  double acc = std::log(x) - 0.5 * inv;
  double p = inv2;
  for (int k = 1; k <= 7; ++k) {
    acc -= kBern[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + shift.value();
}

cplx digamma(cplx z) {
  if (z.real() <= 0) throw domain_error("digamma requires Re z > 0");
  kahan_csum shift;
  while (z.real() < 16.0) {
    shift.add(-1.0 / z);
    z += 1.0;
  }
  cplx inv = 1.0 / z, inv2 = inv * inv;
  cplx acc = std::log(z) - 0.5 * inv;
  cplx p = inv2;
  for (int k = 1; k <= 7; ++k) {
    acc -= kBern[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + shift.value();
}

hz_result hurwitz_zeta(cplx s, double a, const em_params& em) {
  if (a <= 0 || a > 1) throw domain_error("hurwitz_zeta requires a in (0, 1]");
  if (std::abs(s - 1.0) < 1e-6) throw near_pole("hurwitz_zeta near s = 1");
  em_core c = hurwitz_auto(s, a, em, false);
  return {c.value, c.deriv, c.err};
}

hz_result hurwitz_zeta_reg(cplx s, double a, const em_params& em) {
  if (a <= 0 || a > 1) throw domain_error("hurwitz_zeta requires a in (0, 1]");
  em_core c = hurwitz_auto(s, a, em, true);
  return {c.value, c.deriv, c.err};
}

hfun riemann_h(cplx s, const em_params& em) {
  hz_result hr = hurwitz_zeta_reg(s, 1.0, em);
  cplx u = s - 1.0;
  return {u * hr.value + 1.0, hr.value + u * hr.deriv};
}

lfun dirichlet_l(cplx s, long long D, const em_params& em) {
  long long q = D < 0 ? -D : D;
  if (q <= 1) throw domain_error("dirichlet_l requires a nontrivial character");
  kahan_csum L, Lp;
  for (long long a = 1; a < q; ++a) {
    int chi = kronecker(D, a);
    if (chi == 0) continue;
    hz_result h = hurwitz_zeta_reg(s, static_cast<double>(a) / q, em);
    L.add(static_cast<double>(chi) * h.value);
    Lp.add(static_cast<double>(chi) * h.deriv);
  }
  double lq = std::log(static_cast<double>(q));
  cplx scale = std::exp(-s * lq);
  cplx Lv = scale * L.value();
  cplx Lpv = -lq * Lv + scale * Lp.value();
  return {Lv, Lpv};
}

double l_one_chi(long long D) {
  long long q = D < 0 ? -D : D;
  if (q <= 1) throw domain_error("l_one_chi requires a nontrivial character");
  kahan_sum acc;
  for (long long a = 1; a < q; ++a) {
    int chi = kronecker(D, a);
    if (chi == 0) continue;
    acc.add(-static_cast<double>(chi) * digamma(static_cast<double>(a) / q));
  }
  return acc.value() / static_cast<double>(q);
}

cplx z_nf(long long D, cplx s) {
  if (std::abs(s - 1.0) < 1e-6) throw near_pole("z_nf near the pole at s = 1");
  hfun h = riemann_h(s);
  cplx u = s - 1.0;
  cplx zeta_k = h.H / u;
  cplx out = h.Hp / h.H - 1.0 / u;
  if (D != 1) {
    lfun l = dirichlet_l(s, D);
    zeta_k *= l.L;
    if (std::abs(l.L) < 1e-12)
      throw near_zero_of_zeta("L-factor vanishes at this point");
    out += l.Lp / l.L;
  }
  if (std::abs(zeta_k) < 1e-12)
    throw near_zero_of_zeta("zeta_K vanishes at this point");
  return out;
}

cplx a2_pole_term(double N, cplx eps) {
  double y = std::log(N + 0.5);
  cplx am = 0.5 - eps, ap = 0.5 + eps;
  // 2 * [ (e^{am y} - 1)/am + (1 - e^{-ap y})/ap ], each factor by expm1
  // (the am branch stays finite as eps -> 1/2 via the series in cexpm1).
  cplx first;
  if (std::abs(am) * y < 1e-8) {
    first = y * (1.0 + am * y / 2.0 + am * am * y * y / 6.0);
  } else {
    first = cexpm1(am * y) / am;
  }
  cplx second = -cexpm1(-ap * y) / ap;
  return 2.0 * (first + second);
}

nf_residual_report theorem2_residual(long long D, long long N, cplx eps,
                                     double C1, double C2) {
  double eps0 = eps.real();
  if (eps0 <= 0) throw domain_error("Re eps must be positive");
  if (N < 10) throw domain_error("truncation N must be >= 10");
  cplx s = 0.5 + eps;

  nf_residual_report rep;
  auto places = place_counts_nf(D, N);
  kahan_csum trunc;
  for (const auto& [q, phi] : places) {
    double lq = std::log(static_cast<double>(q));
    cplx den = std::exp(s * lq) - 1.0;
    trunc.add(static_cast<double>(phi) * lq / den);
  }
  rep.trunc_sum = trunc.value();

  // G_K(s) = zeta_K'/zeta_K(s) + 1/(s-1), assembled from pole-free parts so
  // the eps = 1/2 column (s = 1) evaluates without special-casing.
  hfun h = riemann_h(s);
  rep.gk = h.Hp / h.H;
  cplx u = s - 1.0;
  cplx zeta_k_abs_src = h.H;
  if (D != 1) {
    lfun l = dirichlet_l(s, D);
    if (std::abs(l.L) < 1e-12) {
      rep.skipped = true;
      return rep;
    }
    rep.gk += l.Lp / l.L;
    zeta_k_abs_src *= l.L;
  }
  if (std::abs(u) >= 1e-6) {
    rep.zeta_abs = std::abs(zeta_k_abs_src / u);
    if (rep.zeta_abs < 1e-12) {
      rep.skipped = true;
      return rep;
    }
  }
  rep.residual = rep.trunc_sum + rep.gk;

  double g = D == 1 ? 0.0 : 0.5 * std::log(std::abs(static_cast<double>(D)));
  double n_deg = D == 1 ? 1.0 : 2.0;
  double lnN = std::log(static_cast<double>(N));
  double ae = std::abs(eps);
  rep.envelope = C1 * ((ae * ae * ae * ae + ae) / (eps0 * eps0)) *
                     (g + n_deg * lnN) * lnN * lnN /
                     std::pow(static_cast<double>(N), eps0) +
                 C2 * std::sqrt(static_cast<double>(N));
  rep.pass = std::abs(rep.residual) <= rep.envelope;
  rep.diagnostic = rep.residual - (a2_pole_term(static_cast<double>(N), eps) / 2.0 -
                                   1.0 / (eps + 0.5));
  return rep;
}

arch_result archimedean_integrals(double N, double eps) {
  if (N < 4) throw domain_error("archimedean integrals require N >= 4");
  if (eps <= 0) throw domain_error("eps must be positive");
  double y = std::log(N + 0.5);
  auto sinh_integrand = [eps](double x) {
    if (x < 1e-12) return eps;  // limit of (1-e^{-eps x}) / (2 sinh(x/2))
    return -std::expm1(-eps * x) / (2.0 * std::sinh(0.5 * x));
  };
  auto cosh_integrand = [eps](double x) {
    return -std::expm1(-eps * x) / (2.0 * std::cosh(0.5 * x));
  };
  arch_result ar;
  ar.I_num = adaptive_quad(sinh_integrand, 0.0, y, 1e-10) -
             std::log(std::tanh(0.25 * y));
  ar.J_num = adaptive_quad(cosh_integrand, 0.0, y, 1e-10) +
             (0.5 * kPi - std::atan(std::sinh(0.5 * y)));
  ar.I_closed = kEulerGamma + std::log(4.0) + digamma(0.5 + eps);
  ar.J_closed = 0.5 * kPi + std::log(2.0) + digamma(0.25 + 0.5 * eps) -
                digamma(0.5 + eps);
  ar.gap_I = std::abs(ar.I_num - ar.I_closed);
  ar.gap_J = std::abs(ar.J_num - ar.J_closed);
  return ar;
}

double sech_integral_quad(double eps) {
  if (eps < 0) throw domain_error("eps must be nonnegative");
  const double X = 80.0;
  auto f = [eps](double x) {
    return std::exp(-eps * x) / std::cosh(0.5 * x);
  };
  double main = adaptive_quad(f, 0.0, X, 1e-11);
  // Tail: integrand <= 2 e^{-(1/2+eps)x}; at X = 80 this is ~ 8e-18.
  double tail = 2.0 * std::exp(-(0.5 + eps) * X) / (0.5 + eps);
  return main + tail;
}

double sech_integral_closed(double eps) {
  return digamma(0.75 + 0.5 * eps) - digamma(0.25 + 0.5 * eps);
}

weil_terms weil_rhs_terms(long long D, long long N, double eps) {
  if (eps <= 0) throw domain_error("eps must be positive");
  weil_terms wt;
  double g = D == 1 ? 0.0 : 0.5 * std::log(std::abs(static_cast<double>(D)));
  double n_deg = D == 1 ? 1.0 : 2.0;
  double r1 = D == 1 ? 1.0 : (D > 1 ? 2.0 : 0.0);
  wt.constant = 2.0 * g - n_deg * (kEulerGamma + std::log(8.0 * kPi)) -
                r1 * 0.5 * kPi;
  wt.pole = a2_pole_term(static_cast<double>(N), cplx(eps)).real();
  arch_result ar = archimedean_integrals(static_cast<double>(N), eps);
  wt.arch_sinh = n_deg * ar.I_num;
  wt.arch_cosh = r1 * ar.J_num;
  // -2 sum over prime-ideal powers q^m <= N of ln q * q^{-m(1/2+eps)}.
  auto places = place_counts_nf(D, N);
  kahan_sum ps;
  for (const auto& [q, phi] : places) {
    double lq = std::log(static_cast<double>(q));
    double qm = static_cast<double>(q);
    while (qm <= static_cast<double>(N)) {
      ps.add(-2.0 * phi * lq * std::pow(qm, -(0.5 + eps)));
      qm *= static_cast<double>(q);
    }
  }
  wt.prime_sum = ps.value();
  return wt;
}

double chebyshev_psi(long long D, double x) {
  if (x < 2) throw domain_error("chebyshev_psi requires x >= 2");
  long long nx = static_cast<long long>(x);
  auto places = place_counts_nf(D, nx);
  kahan_sum acc;
  for (const auto& [q, phi] : places) {
    double lq = std::log(static_cast<double>(q));
    int k = 0;  // number of powers q^m <= x (norms up to 1e15 stay exact)
    for (double qm = static_cast<double>(q); qm <= x;
         qm *= static_cast<double>(q))
      ++k;
    acc.add(phi * k * lq);
  }
  return acc.value();
}

}  // namespace zetalim
