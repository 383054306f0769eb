#include "zetalim/nfquad.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "zetalim/analytic.hpp"
#include "zetalim/util.hpp"

namespace zetalim {

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a % 2 == 0) && (n % 2 == 0)) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Strip factors of two from n using (a | 2) = (2 | a) rules.
  int two_count = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++two_count;
  }
  if (two_count % 2 == 1) {
    long long am = ((a % 8) + 8) % 8;
    if (am == 3 || am == 5) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  // Jacobi on odd n > 0.
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long nm = n % 8;
      if (nm == 3 || nm == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_squarefree(long long n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

long long fundamental_discriminant(long long d) {
  if (d == 0 || d == 1) throw not_fundamental("d must differ from 0 and 1");
  if (!is_squarefree(d)) throw not_fundamental("d must be squarefree");
  long long m = ((d % 4) + 4) % 4;
  return m == 1 ? d : 4 * d;
}

quadratic_field make_rational() { return quadratic_field{}; }

quadratic_field make_quadratic(long long d) {
  quadratic_field K;
  K.d = d;
  K.D = fundamental_discriminant(d);
  K.degree = 2;
  if (d > 0) {
    K.r1 = 2;
    K.r2 = 0;
  } else {
    K.r1 = 0;
    K.r2 = 1;
  }
  K.w = (K.D == -4) ? 4 : (K.D == -3) ? 6 : 2;
  K.g = 0.5 * std::log(std::abs(static_cast<double>(K.D)));
  return K;
}

split_type splitting_type(const quadratic_field& K, long long p) {
  if (K.D == 1) throw domain_error("splitting is trivial over the rationals");
  int s = kronecker(K.D, p);
  if (s == 1) return split_type::split;
  if (s == 0) return split_type::ramified;
  return split_type::inert;
}

std::map<long long, long long> place_counts_nf(long long D, long long N) {
  if (N < 2) throw domain_error("place table needs N >= 2");
  std::vector<char> composite(static_cast<std::size_t>(N) + 1, 0);
  std::map<long long, long long> out;
  for (long long p = 2; p <= N; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (long long m = p * p; m <= N; m += p) composite[static_cast<std::size_t>(m)] = 1;
    if (D == 1) {
      out[p] += 1;
      continue;
    }
    int s = kronecker(D, p);
    if (s == 1)
      out[p] += 2;
    else if (s == 0)
      out[p] += 1;
    else if (p <= N / p)
      out[p * p] += 1;
  }
  return out;
}

long long class_number_imag(long long D) {
  if (D >= 0) throw domain_error("expected a negative discriminant");
  long long m = ((D % 4) + 4) % 4;
  bool fundamental = false;
  if (m == 1 && is_squarefree(D)) fundamental = true;
  if (m == 0) {
    long long d4 = D / 4;
    long long m4 = ((d4 % 4) + 4) % 4;
    if ((m4 == 2 || m4 == 3) && is_squarefree(d4)) fundamental = true;
  }
  if (!fundamental) throw not_fundamental("discriminant is not fundamental");
  // Reduced forms (a, b, c): b^2 - 4ac = D, |b| <= a <= c,
  // b >= 0 when |b| = a or a = c.
  long long h = 0;
  long long amax = static_cast<long long>(std::sqrt(static_cast<double>(-D) / 3.0)) + 1;
  for (long long a = 1; a <= amax; ++a) {
    for (long long b = -a; b <= a; ++b) {
      long long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;  // count b >= 0 representative
      ++h;
    }
  }
  return h;
}

double regulator_real(long long d) {
  if (d <= 1) throw domain_error("expected d > 1");
  long long D = fundamental_discriminant(d);
  long long sq = static_cast<long long>(std::sqrt(static_cast<double>(D)));
  while (sq * sq > D) --sq;
  while ((sq + 1) * (sq + 1) <= D) ++sq;
  double sqrtD = std::sqrt(static_cast<double>(D));
  // Continued fraction of (D mod 2 + sqrt D)/2; the regulator is the sum of
  // ln((P_i + sqrt D)/Q_i) over one full cycle of the (P, Q) state, located
  // by the first repeated state (the pre-period contributes nothing).
  long long P = D % 2, Q = 2;
  std::map<std::pair<long long, long long>, std::size_t> seen;
  std::vector<double> logs;
  for (long long step = 0; step < 10'000'000; ++step) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      kahan_sum R;
      for (std::size_t i = it->second; i < logs.size(); ++i) R.add(logs[i]);
      return R.value();
    }
    seen.emplace(key, logs.size());
    logs.push_back(std::log((static_cast<double>(P) + sqrtD) /
                            static_cast<double>(Q)));
    long long a = (P + sq) / Q;
    long long Pn = a * Q - P;
    if (Q == 0 || (D - Pn * Pn) % Q != 0)
      throw overflow_budget("degenerate continued fraction state");
    long long Qn = (D - Pn * Pn) / Q;
    P = Pn;
    Q = Qn;
  }
  throw overflow_budget("continued fraction cycle not found");
}

residue_data residue_kappa(const quadratic_field& K) {
  residue_data rd;
  if (K.D == 1) {
    rd = residue_data{1, 2, 0.0, 1.0, 0.0};
    return rd;
  }
  double sqrtAD = std::sqrt(std::abs(static_cast<double>(K.D)));
  rd.w = K.w;
  if (K.D < 0) {
    rd.h = class_number_imag(K.D);
    rd.R = 0.0;
    rd.kappa = 2.0 * kPi * rd.h / (K.w * sqrtAD);
  } else {
    double R = regulator_real(K.d);
    double L1 = l_one_chi(K.D);
    double h_est = sqrtAD * L1 / (2.0 * R);
    long long h = std::llround(h_est);
    if (h < 1 || std::abs(h_est - h) >= 0.1)
      throw no_convergence("class number did not land near an integer: " +
                           std::to_string(h_est));
    rd.h = h;
    rd.R = R;
    rd.kappa = 2.0 * h * R / sqrtAD;
  }
  rd.ln_kappa = std::log(rd.kappa);
  return rd;
}

double bs_sum_nf(long long D, long long N) {
  auto places = place_counts_nf(D, N);
  kahan_sum acc;
  for (const auto& [q, phi] : places)
    acc.add(phi * std::log(static_cast<double>(q) / (static_cast<double>(q) - 1.0)));
  return acc.value();
}

bi_nf_result basic_ineq_nf(const nf_invariants& inv) {
  const double c_r = std::log(2.0 * std::sqrt(2.0 * kPi)) + kPi / 4.0 +
                     kEulerGamma / 2.0;
  const double c_c = std::log(8.0 * kPi) + kEulerGamma;
  kahan_sum acc;
  for (const auto& [q, phi] : inv.phi) {
    if (phi == 0) continue;
    if (phi < 0) throw domain_error("invariants must be nonnegative");
    double qd = static_cast<double>(q);
    acc.add(phi * std::log(qd) / (std::sqrt(qd) - 1.0));
  }
  acc.add(inv.phi_r * c_r);
  acc.add(inv.phi_c * c_c);
  bi_nf_result out;
  out.value = acc.value();
  out.pass = out.value <= 1.0 + 1e-12;
  return out;
}

}  // namespace zetalim
