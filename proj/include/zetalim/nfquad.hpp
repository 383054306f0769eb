// Quadratic number fields: fundamental discriminants, prime splitting and
// place tables, class numbers by reduced-forms enumeration, regulators by
// the continued-fraction cycle, the residue kappa of zeta_K at s = 1, and
// the number-field basic inequality.
#pragma once

#include <map>
#include <vector>

#include "zetalim/errors.hpp"

namespace zetalim {

// Kronecker symbol (a | n), full generality (n may be negative or even).
int kronecker(long long a, long long n);

bool is_squarefree(long long n);

// d squarefree, d != 0, 1  ->  D = d (d = 1 mod 4) or 4d.
long long fundamental_discriminant(long long d);

struct quadratic_field {
  long long d = 1;  // 1 encodes the rational field
  long long D = 1;  // fundamental discriminant (1 for the rational field)
  int degree = 1;
  int r1 = 1, r2 = 0;
  long long w = 2;  // number of roots of unity
  double g = 0.0;   // ln sqrt|D| (0 for the rational field)
};

quadratic_field make_rational();
quadratic_field make_quadratic(long long d);  // throws not_fundamental

enum class split_type { split, inert, ramified };
split_type splitting_type(const quadratic_field& K, long long p);

// Place norms q <= N -> number of places Phi_q of that norm.  Split primes
// contribute two places of norm p, ramified one of norm p, inert one of
// norm p^2 (counted when p^2 <= N).  D = 1 gives one place per prime.
std::map<long long, long long> place_counts_nf(long long D, long long N);

// Class number of the imaginary quadratic order of fundamental
// discriminant D < 0, by enumeration of reduced binary quadratic forms.
long long class_number_imag(long long D);

// Regulator ln(epsilon_d) of the real quadratic field, by the continued
// fraction cycle of (D mod 2 + sqrt D)/2 carried in exact integers.
double regulator_real(long long d);

struct residue_data {
  long long h = 1;
  long long w = 2;
  double R = 0.0;      // regulator; stored 0 for imaginary / rational
  double kappa = 1.0;  // residue of zeta_K at s = 1
  double ln_kappa = 0.0;
};
// Imaginary: exact h; real: h recovered from h*R = sqrt(D) L(1,chi)/2 and
// required to land within 0.1 of an integer.
residue_data residue_kappa(const quadratic_field& K);

// sum over place norms q <= N of Phi_q ln(q / (q-1)); the log of the
// truncated Euler product of zeta_K at s = 1.
double bs_sum_nf(long long D, long long N);

// Number-field limit invariants and basic inequality
//   sum_q phi_q ln q/(sqrt q - 1) + phi_R c_R + phi_C c_C <= 1,
// c_R = ln(2 sqrt(2 pi)) + pi/4 + gamma/2,  c_C = ln(8 pi) + gamma.
struct nf_invariants {
  std::map<long long, double> phi;  // norm -> phi_q
  double phi_r = 0.0, phi_c = 0.0;
};
struct bi_nf_result {
  double value = 0.0;
  bool pass = false;
};
bi_nf_result basic_ineq_nf(const nf_invariants& inv);

}  // namespace zetalim
