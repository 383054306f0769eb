// Special functions and number-field analytic machinery: digamma, Hurwitz
// zeta by Euler-Maclaurin with analytic s-derivative, Dirichlet L and
// Dedekind log-derivatives for the rational and quadratic fields,
// archimedean integrals, the Weil-side terms, and Chebyshev Psi.
//
// Fields are addressed by fundamental discriminant D, with D = 1 meaning
// the rational field.
#pragma once

#include <complex>
#include <map>

#include "zetalim/errors.hpp"
#include "zetalim/util.hpp"

namespace zetalim {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

double digamma(double x);  // x > 0
cplx digamma(cplx z);      // Re z > 0

struct em_params {
  int M = 32;              // direct terms
  int B = 12;              // Bernoulli correction order (even, <= 14)
  double target = 1e-12;   // required error estimate
};

struct hz_result {
  cplx value;
  cplx deriv;     // d/ds
  double err = 0; // honest truncation estimate for the value
};

// zeta(s, a): requires |s-1| >= 1e-6 (near_pole otherwise), a in (0, 1].
hz_result hurwitz_zeta(cplx s, double a, const em_params& em = {});

// zeta(s, a) - 1/(s-1): entire in s, valid at and around s = 1.
hz_result hurwitz_zeta_reg(cplx s, double a, const em_params& em = {});

// H(s) = (s-1) zeta(s) (entire, H(1) = 1) and its derivative.
struct hfun {
  cplx H, Hp;
};
hfun riemann_h(cplx s, const em_params& em = {});

// L(s, chi_D) and L'(s, chi_D) for the quadratic character mod |D|,
// uniformly valid in s (including s = 1).  Requires |D| > 1.
struct lfun {
  cplx L, Lp;
};
lfun dirichlet_l(cplx s, long long D, const em_params& em = {});

// L(1, chi_D) = -(1/q) sum_a chi(a) psi(a/q).
double l_one_chi(long long D);

// Z_K(s) = zeta_K'/zeta_K(s).  Throws near_pole near s = 1 and
// near_zero_of_zeta when |zeta_K(s)| <= 1e-12.
cplx z_nf(long long D, cplx s);

// 4 * int_0^y e^{-eps x} cosh(x/2) dx with y = ln(N + 1/2).
cplx a2_pole_term(double N, cplx eps);

struct nf_residual_report {
  cplx residual;       // trunc sum + zeta_K'/zeta_K(1/2+eps) + 1/(eps-1/2)
  double envelope = 0;
  bool pass = false;
  bool skipped = false;  // near a zero of zeta_K: row flagged, not failed
  cplx diagnostic;       // residual - (A2/2 - 1/(eps+1/2))
  cplx trunc_sum;
  cplx gk;               // zeta_K'/zeta_K + 1/(s-1), pole-free combination
  double zeta_abs = 0;
};
nf_residual_report theorem2_residual(long long D, long long N, cplx eps,
                                     double C1 = 10.0, double C2 = 10.0);

// I_{N,eps} and J_{N,eps}: adaptive quadrature against digamma closed forms.
struct arch_result {
  double I_num = 0, I_closed = 0, J_num = 0, J_closed = 0;
  double gap_I = 0, gap_J = 0;
};
arch_result archimedean_integrals(double N, double eps);

// int_0^infty e^{-eps x} / cosh(x/2) dx, by quadrature and in closed form
// psi(3/4 + eps/2) - psi(1/4 + eps/2) (the sign is fixed by positivity of
// the integrand; quadrature is the source of truth).
double sech_integral_quad(double eps);
double sech_integral_closed(double eps);

// The non-zero-sum side of the Weil formula for F = F_{N,eps} (real eps):
// constant term, pole term, n * sinh integral, r1 * cosh integral, and
// -2 sum over prime-ideal powers of norm <= N.
struct weil_terms {
  double constant = 0;
  double pole = 0;
  double arch_sinh = 0;
  double arch_cosh = 0;
  double prime_sum = 0;
};
weil_terms weil_rhs_terms(long long D, long long N, double eps);

// Psi(x) = sum over prime-ideal powers of norm <= x of ln(norm of ideal).
double chebyshev_psi(long long D, double x);

}  // namespace zetalim
