// Generated by tools/oracles/analytic_ref.py (do not edit by hand).
// mpmath (40 digits) references for special functions, L-functions,
// archimedean integrals and truncated explicit-formula residuals.
#pragma once
#include <complex>

namespace refdata {

// digamma at assorted points (re, im, psi_re, psi_im)
inline const double digamma_table[][4] = {
    {0.5, 0.0, -1.9635100260214235, 0.0},
    {0.25, 0.0, -4.2274535333762655, 0.0},
    {1.0, 0.0, -0.5772156649015329, 0.0},
    {3.7, 0.0, 1.1671535393615113, 0.0},
    {0.5, 0.25, -1.5381612557092357, 1.03011912462879},
    {0.125, -7.5, 2.0154139841030823, -1.620828889285144},
    {9.0, 4.0, 2.240387959922529, 0.4394796951147499}};

// Hurwitz zeta: s_re, s_im, a, zeta_re, zeta_im, dzeta_re, dzeta_im
inline const double hurwitz_table[][7] = {
    {2.0, 0.0, 1.0, 1.6449340668482264, 0.0, -0.9375482543158438, 0.0},
    {3.0, 0.0, 0.5, 8.41439832211716, 0.0, 5.278735126182078, 0.0},
    {0.6, 0.0, 0.3, -0.2583869218044255, 0.0, -3.802263795893459, 0.0},
    {2.0, 3.0, 0.7, 0.8435001840887175, 1.5234494012930888, 0.4516150738739399, 0.716559289825994},
    {3.0, 0.0, 0.25, 64.66386996876847, 0.0, 88.43889946091457, 0.0},
    {1.5, 0.0, 1.0, 2.612375348685488, 0.0, -3.9322397374311016, 0.0}};

// Dirichlet L(s, chi_D) and dL/ds: D, s, L, L'
inline const double dirichlet_table[][4] = {
    {-4, 0.6, 0.6948870591089009, 0.262196976440469},
    {-4, 1.0, 0.7853981633974483, 0.19290131679691244},
    {-4, 2.0, 0.915965594177219, 0.08158073611659279},
    {-23, 0.6, 2.34632166985633, -1.067738162022454},
    {-23, 1.0, 1.9652020541078592, -0.8295529541671136},
    {-23, 2.0, 1.4032169045950413, -0.3492531917165094},
    {5, 0.6, 0.27463335585634724, 0.421451821758471},
    {5, 1.0, 0.43040894096400406, 0.3562406470307615},
    {5, 2.0, 0.706211403259741, 0.202662114870808}};

// zeta'_K/zeta_K: D, s_re, s_im, val_re, val_im
inline const double znf_table[][5] = {
    {1, 2.0, 0.0, -0.5699609930945329, 0.0},
    {1, 3.0, 0.0, -0.16482268215827725, 0.0},
    {1, 0.6, 0.0, 3.1615813116388685, 0.0},
    {-4, 2.0, 0.0, -0.4808957087266478, 0.0},
    {-23, 3.0, 0.0, -0.2862081250376874, 0.0},
    {5, 0.8, 0.0, 6.71229203133673, 0.0},
    {-4, 1.5, 2.5, 0.14793917159049144, 0.010469128803994107}};
inline const double q_prime_sum_s2_1e6 = -0.5699599930643277;  // -sum_{p<1e6} ln p/(p^2-1)
inline const double q_prime_sum_s2_gap = 1.0000302051140328e-06;  // truncation tail ~ 1/X

// G_K(s) = zeta'_K/zeta_K(s) + 1/(s-1) (regular at s=1): D, s, G
inline const double gk_table[][3] = {
    {1, 0.6, 0.6615813116388685},
    {1, 0.8, 0.6169182044665436},
    {1, 1.0, 0.5772156649015329},
    {-4, 0.6, 1.0389044650973618},
    {-4, 0.8, 0.9203582865867553},
    {-4, 1.0, 0.8228252496788471},
    {-23, 0.6, 0.20651235168341886},
    {-23, 0.8, 0.17153343605411747},
    {-23, 1.0, 0.15509471686308554}};

inline const double residue_qi_s1p = 0.7854627888560617;  // (s-1) zeta(s) L(s,chi_-4) at s=1+1e-4

// truncated residual grid: D, eps, N, residual, diagnostic
// (diagnostic = residual - (A2/2 - 1/(eps+1/2)), A2 = 4 int_0^y F cosh(x/2))
inline const double residual2_table[][5] = {
    {1, 0.1, 100, 14.666166056512788, 1.4655771085139777},
    {1, 0.1, 1000, 38.55229713448383, 1.4484510105901751},
    {1, 0.1, 10000, 98.41839485299808, 1.3962466290918376},
    {1, 0.3, 100, 7.8958253623305446, 0.3551323650172967},
    {1, 0.3, 1000, 15.109917290040109, 0.20754297449164785},
    {1, 0.3, 10000, 26.669172056266866, 0.1217780250285012},
    {1, 0.5, 100, 4.692109641976909, 0.09190216323399783},
    {1, 0.5, 1000, 6.941101412949659, 0.03384575917574621},
    {1, 0.5, 10000, 9.22334644694796, 0.01305607122198581},
    {-4, 0.1, 100, 14.669136270304545, 1.4685473223057341},
    {-4, 0.1, 1000, 38.43589070862236, 1.3320445847287088},
    {-4, 0.1, 10000, 98.5417911047888, 1.5196428808825588},
    {-4, 0.3, 100, 7.895369713591761, 0.3546767162785137},
    {-4, 0.3, 1000, 15.079992976525975, 0.17761866097751552},
    {-4, 0.3, 10000, 26.689437569409527, 0.14204353817116314},
    {-4, 0.5, 100, 4.691106595032247, 0.09089911628933543},
    {-4, 0.5, 1000, 6.933299021316342, 0.02604336754242965},
    {-4, 0.5, 10000, 9.226678356317025, 0.016387980591051704},
    {-23, 0.1, 100, 14.152071657941653, 0.9514827099428427},
    {-23, 0.1, 1000, 38.36236652388448, 1.2585203999908274},
    {-23, 0.1, 10000, 97.9799706609561, 0.9578224370498655},
    {-23, 0.3, 100, 7.716558638236099, 0.17586564092285056},
    {-23, 0.3, 1000, 15.066861232221854, 0.16448691667339357},
    {-23, 0.3, 10000, 26.60074867931244, 0.05335464807407405},
    {-23, 0.5, 100, 4.629319764325162, 0.029112285582250253},
    {-23, 0.5, 1000, 6.93140841961733, 0.024152765843416964},
    {-23, 0.5, 10000, 9.21271317793323, 0.002422802207254872}};
inline const double residual2_conv_q[3] = {2.751950171862247, 3.2925903716226284, 3.600944410797457};  // eps=0.75, N=1e2,1e3,1e4
inline const double residual2_qi_complex[2] = {6.360950606105182, -4.0213760750336665};  // D=-4 N=100 eps=0.3+0.2i

// archimedean integrals: N, eps, I_num, I_closed, J_num, J_closed
inline const double arch_table[][6] = {
    {100, 0.1, 0.5281297741203898, 0.42289081212823304, 0.40649499873373074, 0.30203849904789937},
    {100, 0.5, 1.396294444454474, 1.3862943611198906, 0.8875502172176629, 0.8776491462349513},
    {100, 1.0, 2.0006656764657125, 2.0, 1.1422504287524133, 1.1415926535897933},
    {1000, 0.1, 0.4493076811270612, 0.42289081212823304, 0.3284355727116689, 0.30203849904789937},
    {1000, 0.5, 1.387294361203224, 1.3862943611198906, 0.8786481473170361, 0.8776491462349513},
    {1000, 1.0, 2.000021078691895, 2.0, 1.1416137070150483, 1.1415926535897933},
    {10000, 0.1, 0.429525981404223, 0.42289081212823304, 0.308673170729732, 0.30203849904789937},
    {10000, 0.5, 1.386394361119974, 1.3862943611198906, 0.8777491362360346, 0.8776491462349513},
    {10000, 1.0, 2.0000006666566676, 2.0, 1.141593320166471, 1.1415926535897933}};
// int_0^inf e^{-eps x} sech(x/2) dx: eps, quadrature, psi(3/4+eps/2)-psi(1/4+eps/2)
inline const double sech_table[][3] = {
    {0.0, 3.141592653589793, 3.141592653589793},
    {0.3, 1.8064575946380648, 1.8064575946380648},
    {1.0, 0.8584073464102068, 0.8584073464102068}};
// 4 int_0^y e^{-eps x} cosh(x/2) dx: N, eps, value
inline const double a2_table[][3] = {
    {100, 0.3, 17.581385994626494},
    {1000, 0.5, 15.814511307547827},
    {10000, 0.49999, 20.42144907018386},
    {10, 0.1, 10.327143926388807}};

inline const double arch_const_real = 2.6860917096128327;  // ln(2 sqrt(2 pi)) + pi/4 + gamma/2
inline const double arch_const_cplx = 3.801387092430769;  // ln(8 pi) + gamma
inline const double weil_const_qi = -6.216479823741647;  // 2 ln 2 - 2(gamma + ln 8 pi)
inline const double weil_prime_q_n10 = 2.258074992639397;   // Q, N=10, eps=0.3
inline const double weil_prime_qi_n10 = 2.0251858041434363;  // Q(i), N=10, eps=0.3
inline const double weil_exp_half_n10 = 12.008686688809428;  // 4((N+1/2)^{0.2}-1)/0.2 at N=10, eps=0.3

inline const double psi_q_x10 = 7.832014180505469;  // ln 2520
// Chebyshev Psi over Q at x = 1e2, 1e4, 1e6
inline const double psi_q_samples[][2] = {
    {100, 94.0453112293574},
    {10000, 10013.396693263116},
    {1000000, 999586.597495633}};

} // namespace refdata
