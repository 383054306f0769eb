#include "zetalim/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "zetalim/ffcore.hpp"

namespace zetalim {

namespace {

using i128 = __int128;

i128 iabs(i128 x) { return x < 0 ? -x : x; }

void check_i128(i128 x, const char* where) {
  // Generous headroom: anything this large signals coefficient blow-up.
  static const i128 kMax = (i128(1) << 120);
  if (iabs(x) > kMax) throw no_convergence(std::string("coefficient overflow in ") + where);
}

// ---------------------------------------------------------------------------
// Exact integer polynomial helpers (little-endian vector<i128>).

using ipoly = std::vector<i128>;

ipoly itrim(ipoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int ideg(const ipoly& a) { return static_cast<int>(a.size()) - 1; }

ipoly ideriv(const ipoly& a) {
  ipoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * i128(i));
  return itrim(std::move(d));
}

i128 igcd(i128 a, i128 b) {
  a = iabs(a);
  b = iabs(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 icontent(const ipoly& a) {
  i128 g = 0;
  for (i128 c : a) g = igcd(g, c);
  return g == 0 ? 1 : g;
}

ipoly iprimitive(ipoly a) {
  a = itrim(std::move(a));
  if (a.empty()) return a;
  i128 g = icontent(a);
  if (a.back() < 0) g = -g;
  for (i128& c : a) c /= g;
  return a;
}

// Exact division (throws if not exact).
ipoly idivexact(ipoly a, const ipoly& b) {
  a = itrim(std::move(a));
  if (a.empty()) return {};
  int db = ideg(b);
  i128 lb = b.back();
  ipoly q(a.size() - db, 0);
  while (ideg(a) >= db && !a.empty()) {
    int da = ideg(a);
    if (a.back() % lb != 0) throw no_convergence("inexact polynomial division");
    i128 qc = a.back() / lb;
    q[da - db] = qc;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= qc * b[i];
    a = itrim(std::move(a));
  }
  if (!a.empty()) throw no_convergence("nonzero remainder in exact division");
  return itrim(std::move(q));
}

// Non-throwing variant of idivexact: true iff b divides a exactly.  The
// magnitude guards reject (rather than overflow on) garbage divisors whose
// coefficients are far beyond any genuine factor of a.
bool idivides(ipoly a, const ipoly& b) {
  a = itrim(std::move(a));
  if (a.empty()) return true;
  if (b.empty() || ideg(a) < ideg(b)) return false;
  static const i128 kSafe = i128(1) << 60;
  for (i128 c : b)
    if (iabs(c) > kSafe) return false;
  int db = ideg(b);
  i128 lb = b.back();
  while (ideg(a) >= db && !a.empty()) {
    int da = ideg(a);
    if (a.back() % lb != 0) return false;
    i128 qc = a.back() / lb;
    if (iabs(qc) > kSafe) return false;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= qc * b[i];
    a = itrim(std::move(a));
  }
  return a.empty();
}

// ---------------------------------------------------------------------------
// Integer polynomial gcd via modular images.
//
// A fraction-free remainder sequence already overflows 128 bits at the
// degrees and coefficient sizes the symmetrization produces (resultants of
// degree-10 inputs with 10-digit coefficients), so the gcd runs modulo
// word-size primes instead.  The reconstructed candidate is certified by
// exact trial division of both inputs: a common divisor whose degree
// matches the modular gcd degree for a prime not dividing either leading
// coefficient must be the gcd itself, so the result is exact, not
// heuristic.

constexpr std::uint64_t kGcdPrimes[] = {2147483647ull, 2147483629ull,
                                        2147483587ull, 2147483579ull,
                                        2147483563ull, 2147483549ull,
                                        2147483543ull, 2147483497ull};

std::uint64_t mod_of(i128 c, std::uint64_t p) {
  i128 r = c % i128(p);
  if (r < 0) r += i128(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;  // p < 2^31, so the product fits in 64 bits
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using mpoly = std::vector<std::uint64_t>;

mpoly mtrim(mpoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

mpoly reduce_mod(const ipoly& a, std::uint64_t p) {
  mpoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_of(a[i], p);
  return mtrim(std::move(out));
}

// Monic gcd of the images over F_p.
mpoly mgcd(mpoly a, mpoly b, std::uint64_t p) {
  while (!b.empty()) {
    std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t q = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = mulmod(q, b[i], p);
        a[off + i] = (a[off + i] + p - sub) % p;
      }
      a = mtrim(std::move(a));
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (std::uint64_t& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

// Primitive gcd over the integers.  Constants collapse to {1}: only the
// polynomial part matters to the callers (squarefree structure).
ipoly igcd_poly(ipoly a, ipoly b) {
  a = iprimitive(std::move(a));
  b = iprimitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (ideg(a) == 0 || ideg(b) == 0) return {1};

  i128 lc_scale = igcd(a.back(), b.back());
  int best_deg = -1;
  ipoly crt;       // symmetric residues modulo `modulus`
  i128 modulus = 1;
  int used = 0;

  for (std::uint64_t p : kGcdPrimes) {
    if (mod_of(a.back(), p) == 0 || mod_of(b.back(), p) == 0) continue;
    mpoly gp = mgcd(reduce_mod(a, p), reduce_mod(b, p), p);
    int dp = static_cast<int>(gp.size()) - 1;
    if (dp <= 0) return {1};  // certified: gcd degree <= any modular degree
    if (best_deg != -1 && dp > best_deg) continue;  // unlucky prime
    if (best_deg == -1 || dp < best_deg) {
      best_deg = dp;
      crt.assign(static_cast<std::size_t>(dp) + 1, 0);
      modulus = 1;
      used = 0;
    }
    // Image of the lc-scaled gcd: lc_scale * monic image mod p.
    std::uint64_t scale = mod_of(lc_scale, p);
    i128 M = modulus;
    std::uint64_t m_mod_p = mod_of(M, p);
    std::uint64_t m_inv = powmod(m_mod_p, p - 2, p);
    for (std::size_t i = 0; i < crt.size(); ++i) {
      std::uint64_t target = mulmod(scale, gp[i], p);
      std::uint64_t cur = mod_of(crt[i], p);
      std::uint64_t t = mulmod((target + p - cur) % p, m_inv, p);
      crt[i] += M * i128(t);
    }
    modulus = M * i128(p);
    for (i128& c : crt) {  // keep symmetric representatives
      if (2 * c > modulus) c -= modulus;
      if (2 * c < -modulus) c += modulus;
    }
    ++used;

    ipoly cand = iprimitive(crt);
    if (!cand.empty() && ideg(cand) == best_deg && idivides(a, cand) &&
        idivides(b, cand))
      return cand;
    if (used >= 3) break;  // next product would overflow the CRT range
  }
  throw no_convergence("modular gcd reconstruction");
}

ipoly isub(ipoly a, const ipoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return itrim(std::move(a));
}

// Yun's squarefree decomposition: W = prod factor_i ^ mult_i, factors
// squarefree and pairwise coprime.  Exact, so repeated inverse roots are
// identified before any floating-point work.
std::vector<std::pair<ipoly, int>> squarefree_decompose(const ipoly& W) {
  std::vector<std::pair<ipoly, int>> out;
  ipoly d = igcd_poly(W, ideriv(W));
  if (ideg(d) <= 0) {
    out.emplace_back(iprimitive(W), 1);
    return out;
  }
  ipoly b = idivexact(W, d);
  ipoly c = idivexact(ideriv(W), d);
  ipoly z = isub(std::move(c), ideriv(b));
  int i = 1;
  while (ideg(b) > 0) {
    ipoly a = igcd_poly(b, z);
    if (ideg(a) > 0) out.emplace_back(a, i);
    b = idivexact(std::move(b), a);
    c = idivexact(std::move(z), a);
    z = isub(std::move(c), ideriv(b));
    ++i;
    if (i > 64) throw no_convergence("squarefree decomposition runaway");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Floating-point root machinery, templated so the CLI can request long
// double refinement.

template <class Real>
std::complex<Real> horner(const std::vector<Real>& c, std::complex<Real> x) {
  std::complex<Real> acc = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

// Aberth-Ehrlich iteration for a squarefree real polynomial; returns all
// deg(c) complex roots (unpaired, unpolished realness).
template <class Real>
std::vector<std::complex<Real>> aberth(const std::vector<Real>& c, Real radius,
                                       Real tol) {
  using C = std::complex<Real>;
  int n = static_cast<int>(c.size()) - 1;
  std::vector<Real> dc(n);
  for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * i;
  std::vector<C> z(n);
  const Real pi = Real(3.14159265358979323846264338328L);
  for (int j = 0; j < n; ++j) {
    Real ang = (Real(2) * pi * (Real(j) + Real(0.353))) / Real(n);
    z[j] = radius * C(std::cos(ang), std::sin(ang));
  }
  for (int iter = 0; iter < 400; ++iter) {
    Real worst = 0;
    for (int j = 0; j < n; ++j) {
      C p = horner(c, z[j]);
      C dp = horner(dc, z[j]);
      if (dp == C(0)) {
        z[j] += C(tol, tol);  // nudge off a critical point
        worst = 1;
        continue;
      }
      C nw = p / dp;
      C s = 0;
      for (int k = 0; k < n; ++k)
        if (k != j) s += C(1) / (z[j] - z[k]);
      C denom = C(1) - nw * s;
      C step = denom == C(0) ? nw : nw / denom;
      z[j] -= step;
      Real rel = std::abs(step) / (Real(1) + std::abs(z[j]));
      worst = std::max(worst, rel);
    }
    if (worst <= tol) return z;
  }
  throw no_convergence("root iteration did not converge");
}

// Real Newton polish; returns true when it converges to a real root.
template <class Real>
bool real_newton(const std::vector<Real>& c, Real& x, Real tol) {
  std::vector<Real> dc(c.size() > 1 ? c.size() - 1 : 0);
  for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * Real(i);
  for (int it = 0; it < 60; ++it) {
    Real p = 0, dp = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      if (i + 1 < static_cast<int>(c.size())) dp = dp * x + dc[i];
      p = p * x + c[i];
    }
    if (dp == 0) return false;
    Real step = p / dp;
    x -= step;
    if (std::abs(step) <= tol * (Real(1) + std::abs(x))) return true;
  }
  return false;
}

template <class Real>
struct symmetrized_root {
  std::complex<Real> v;
  bool is_real;
  int mult;
};

// Roots of the symmetrized polynomial W(v), exact squarefree split first.
template <class Real>
std::vector<symmetrized_root<Real>> w_roots(const ipoly& W, long long r, Real tol) {
  std::vector<symmetrized_root<Real>> out;
  Real radius = Real(2.2) * std::sqrt(Real(r));
  for (const auto& [factor, mult] : squarefree_decompose(W)) {
    int d = ideg(factor);
    std::vector<Real> c(d + 1);
    for (int i = 0; i <= d; ++i)
      c[i] = static_cast<Real>(static_cast<long double>(factor[i]));
    std::vector<std::complex<Real>> zs;
    if (d == 1) {
      zs = {std::complex<Real>(-c[0] / c[1], 0)};
    } else if (d == 2) {
      std::complex<Real> disc = c[1] * c[1] - Real(4) * c[2] * c[0];
      std::complex<Real> sq = std::sqrt(disc);
      zs = {(-c[1] + sq) / (Real(2) * c[2]), (-c[1] - sq) / (Real(2) * c[2])};
    } else {
      zs = aberth(c, radius, tol);
    }
    for (auto z : zs) {
      Real realness = std::abs(z.imag()) / (Real(1) + std::abs(z));
      bool real_root = false;
      if (realness < Real(1e-6)) {
        Real x = z.real();
        if (real_newton(c, x, tol) &&
            std::abs(x - z.real()) <= Real(16) * std::abs(z.imag()) + Real(1024) * tol * (Real(1) + std::abs(x))) {
          z = std::complex<Real>(x, 0);
          real_root = true;
        }
      }
      out.push_back({z, real_root, mult});
    }
  }
  return out;
}

template <class Real>
std::vector<std::complex<Real>> roots_impl(const lpolynomial& P, Real tol,
                                           Real* pair_defect) {
  using C = std::complex<Real>;
  long long r = P.r;
  int g = P.g;
  // The symmetrization below is only valid for polynomials satisfying the
  // functional equation, so reject anything else up front.
  if (r < 2 || g < 0 || P.a.size() != static_cast<std::size_t>(2 * g + 1) ||
      P.a[0] != 1)
    throw bad_model("numerator polynomial has inconsistent shape");
  {
    i128 scale = 1;
    for (int i = g; i >= 0; --i) {
      if (i128(P.a[2 * g - i]) != scale * P.a[i])
        throw bad_model("numerator polynomial violates the functional equation");
      if (i > 0) scale *= r;
    }
  }
  // Symmetrize: P(t)/t^g = a_g + sum_{k=1..g} a_{g-k} * M_k(v), where
  // v = 1/t + r t and M_k = v M_{k-1} - r M_{k-2}, M_0 = 2, M_1 = v.
  ipoly W = {i128(P.a[g])};
  ipoly Mkm2 = {2}, Mkm1 = {0, 1};
  auto axpy = [](ipoly& acc, i128 s, const ipoly& x) {
    if (acc.size() < x.size()) acc.resize(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      acc[i] += s * x[i];
      check_i128(acc[i], "symmetrization");
    }
  };
  for (int k = 1; k <= g; ++k) {
    if (k > 1) {
      // M_k = v*M_{k-1} - r*M_{k-2}
      ipoly Mk(Mkm1.size() + 1, 0);
      for (std::size_t i = 0; i < Mkm1.size(); ++i) Mk[i + 1] = Mkm1[i];
      for (std::size_t i = 0; i < Mkm2.size(); ++i) Mk[i] -= i128(r) * Mkm2[i];
      Mkm2 = std::move(Mkm1);
      Mkm1 = itrim(std::move(Mk));
    }
    axpy(W, i128(P.a[g - k]), Mkm1);
  }
  W = itrim(std::move(W));
  if (ideg(W) != g) throw no_convergence("symmetrized polynomial degenerated");

  std::vector<C> pis;
  pis.reserve(2 * g);
  Real defect = 0;
  auto roots_v = w_roots<Real>(W, r, tol);
  // Complex v-roots come in conjugate pairs; emit each pair once from the
  // upper-half representative so closure under conjugation is exact.
  std::vector<bool> used(roots_v.size(), false);
  for (std::size_t i = 0; i < roots_v.size(); ++i) {
    if (used[i]) continue;
    auto& rv = roots_v[i];
    used[i] = true;
    if (rv.is_real) {
      Real v = rv.v.real();
      Real disc = v * v - Real(4) * r;
      for (int m = 0; m < rv.mult; ++m) {
        if (disc <= 0) {
          C pi_val(v / 2, std::sqrt(-disc) / 2);  // |pi| = sqrt(r) exactly
          pis.push_back(pi_val);
          pis.push_back(std::conj(pi_val));
        } else {
          Real sq = std::sqrt(disc);
          pis.push_back(C((v + sq) / 2, 0));
          pis.push_back(C((v - sq) / 2, 0));
        }
      }
      defect = std::max(defect, std::abs(rv.v.imag()));
      continue;
    }
    // Find the conjugate partner among unused complex roots.
    std::size_t best = i;
    Real best_d = std::numeric_limits<Real>::max();
    for (std::size_t jj = i + 1; jj < roots_v.size(); ++jj) {
      if (used[jj] || roots_v[jj].is_real) continue;
      Real dcj = std::abs(roots_v[jj].v - std::conj(rv.v));
      if (dcj < best_d) {
        best_d = dcj;
        best = jj;
      }
    }
    if (best == i) throw no_convergence("complex v-root without conjugate partner");
    used[best] = true;
    defect = std::max(defect, best_d);
    C v = rv.v;
    if (v.imag() < 0) v = std::conj(v);
    C sq = std::sqrt(v * v - Real(4) * r);
    C pp = (v + sq) / Real(2), pm = (v - sq) / Real(2);
    for (int m = 0; m < rv.mult; ++m) {
      pis.push_back(pp);
      pis.push_back(pm);
      pis.push_back(std::conj(pp));
      pis.push_back(std::conj(pm));
    }
  }
  if (static_cast<int>(pis.size()) != 2 * g)
    throw no_convergence("inverse-root count mismatch");
  std::sort(pis.begin(), pis.end(), [](const C& x, const C& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  if (pair_defect) *pair_defect = defect;
  return pis;
}

}  // namespace

// ---------------------------------------------------------------------------

lpolynomial lpoly_from_counts(const std::vector<long long>& counts, long long r,
                              int g) {
  if (g < 0) throw bad_model("genus must be nonnegative");
  if (static_cast<int>(counts.size()) < g)
    throw insufficient_depth("need counts to depth g=" + std::to_string(g));
  lpolynomial P;
  P.r = r;
  P.g = g;
  P.a.assign(2 * g + 1, 0);
  P.a[0] = 1;
  if (g == 0) return P;

  // Power sums of the inverse roots: s_n = r^n + 1 - N_n.
  std::vector<i128> s(g + 1, 0);
  i128 rn = 1;
  for (int n = 1; n <= g; ++n) {
    rn *= r;
    s[n] = rn + 1 - i128(counts[n - 1]);
  }
  // Newton:  k a_k = - sum_{i=1..k} a_{k-i} s_i.
  std::vector<i128> a(2 * g + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= g; ++k) {
    i128 acc = 0;
    for (int i = 1; i <= k; ++i) {
      acc += a[k - i] * s[i];
      check_i128(acc, "newton identities");
    }
    if (acc % k != 0)
      throw non_integral_coefficient("Newton step not divisible at k=" +
                                     std::to_string(k));
    a[k] = -acc / k;
  }
  // Functional equation fills the upper half: a_{2g-i} = r^{g-i} a_i.
  for (int i = g - 1; i >= 0; --i) {
    i128 f = 1;
    for (int t = 0; t < g - i; ++t) f *= r;
    a[2 * g - i] = a[i] * f;
    check_i128(a[2 * g - i], "functional equation");
  }
  for (int i = 0; i <= 2 * g; ++i) {
    if (iabs(a[i]) > i128(std::numeric_limits<long long>::max()))
      throw non_integral_coefficient("coefficient exceeds 64-bit range");
    P.a[i] = static_cast<long long>(a[i]);
  }
  // P(1) = prod (1 - pi_j) relates to the class number and must be positive.
  i128 p1 = 0;
  for (int i = 0; i <= 2 * g; ++i) p1 += a[i];
  if (p1 <= 0) throw non_integral_coefficient("P(1) must be positive");
  return P;
}

std::vector<long long> extend_counts(const lpolynomial& P, int depth) {
  if (depth < 1) throw bad_model("depth must be >= 1");
  int g = P.g;
  long long r = P.r;
  std::vector<i128> s(depth + 1, 0);
  // Forward Newton for k <= 2g, then the linear recurrence from P.
  for (int k = 1; k <= depth; ++k) {
    i128 acc = 0;
    int top = std::min(k, 2 * g);
    if (k <= 2 * g) {
      for (int i = 1; i < k; ++i) acc += i128(P.a[i]) * s[k - i];
      s[k] = -i128(k) * P.a[k] - acc;
    } else {
      for (int i = 1; i <= top; ++i) acc += i128(P.a[i]) * s[k - i];
      s[k] = -acc;
    }
    check_i128(s[k], "count extension");
  }
  std::vector<long long> out(depth);
  i128 rn = 1;
  for (int n = 1; n <= depth; ++n) {
    rn *= r;
    check_i128(rn, "count extension r^n");
    i128 Nn = rn + 1 - s[n];
    if (Nn < 0) throw negative_count("extended count negative");
    if (Nn > i128(std::numeric_limits<long long>::max()))
      throw budget_exceeded("extended count exceeds 64-bit range");
    out[n - 1] = static_cast<long long>(Nn);
  }
  return out;
}

std::map<int, long long> extend_places(const lpolynomial& P, int depth) {
  return places_from_counts(extend_counts(P, depth));
}

inverse_roots lpoly_roots(const lpolynomial& P, double tol) {
  inverse_roots out;
  if (P.g == 0) return out;
  double defect = 0;
  out.pi = roots_impl<double>(P, tol, &defect);
  out.pair_tol = defect;
  return out;
}

std::vector<std::complex<long double>> lpoly_roots_ld(const lpolynomial& P,
                                                      long double tol) {
  if (P.g == 0) return {};
  long double defect = 0;
  return roots_impl<long double>(P, tol, &defect);
}

rh_result rh_check(const inverse_roots& roots, long long r, double tol) {
  rh_result res;
  double sr = std::sqrt(static_cast<double>(r));
  for (const auto& p : roots.pi)
    res.max_dev = std::max(res.max_dev, std::abs(std::abs(p) - sr));
  res.pass = res.max_dev <= tol;
  return res;
}

cplx z_ff_closed(const inverse_roots& roots, long long r, int g, cplx eps) {
  const double lr = std::log(static_cast<double>(r));
  cplx R = std::exp((0.5 + eps) * lr);
  cplx Rm = std::exp((-0.5 + eps) * lr);  // r^{-1/2+eps}
  double sr = std::sqrt(static_cast<double>(r));
  const double guard = 1e-9;
  if (std::abs(R - 1.0) < guard || std::abs(Rm - 1.0) < guard)
    throw pole_proximity("evaluation point collides with a zeta pole");
  kahan_csum acc;
  acc.add(-1.0 / (R - 1.0));
  acc.add(-1.0 / (Rm - 1.0));
  for (const auto& p : roots.pi) {
    if (std::abs(R - p) < guard * sr)
      throw pole_proximity("evaluation point collides with an inverse root");
    acc.add(p / (R - p));
  }
  (void)g;
  return acc.value();
}

series_value z_ff_series(const std::map<int, long long>& places, long long r,
                         int g, cplx s, int cutoff) {
  if (s.real() <= 1.0)
    throw domain_error("series form requires Re s > 1");
  const double lr = std::log(static_cast<double>(r));
  kahan_csum acc;
  for (const auto& [f, phi] : places) {
    if (f > cutoff) break;
    if (phi == 0) continue;
    cplx den = std::exp(cplx(f) * s * lr) - 1.0;
    acc.add(-(static_cast<double>(f) * static_cast<double>(phi)) / den);
  }
  // Tail bound from f*Phi_f <= r^f + 1 + 2 g r^{f/2}:
  //   |sum_{f>c}| <= sum_{f>c} (r^f + 1 + 2 g r^{f/2}) r^{-f sigma} / (1 - r^{-sigma}).
  double sigma = s.real();
  auto geom_tail = [&](double expo) {  // sum_{f > cutoff} r^{expo * f}
    double q = std::pow(static_cast<double>(r), expo);
    return std::pow(q, cutoff + 1) / (1.0 - q);
  };
  double denom_floor = 1.0 - std::pow(static_cast<double>(r), -sigma);
  double tail = (geom_tail(1.0 - sigma) + geom_tail(-sigma) +
                 2.0 * g * geom_tail(0.5 - sigma)) /
                denom_floor;
  return {acc.value(), tail};
}

cplx zeta_ff_eval(const lpolynomial& P, cplx s) {
  const double lr = std::log(static_cast<double>(P.r));
  cplx t = std::exp(-s * lr);
  if (std::abs(t - 1.0) < 1e-12 || std::abs(t * static_cast<double>(P.r) - 1.0) < 1e-12)
    throw pole_at_s("zeta has a pole at this s");
  cplx num = 0.0;
  for (int i = 2 * P.g; i >= 0; --i) num = num * t + static_cast<double>(P.a[i]);
  return num / ((1.0 - t) * (1.0 - static_cast<double>(P.r) * t));
}

}  // namespace zetalim
