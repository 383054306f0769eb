// Finite fields F_{p^m}, curve models over them, exhaustive point counting
// over extension fields, and Moebius inversion of counts into place counts.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetalim/errors.hpp"

namespace zetalim {

inline constexpr long long kDefaultBudget = 100'000'000;  // max enumerated field size

// ---------------------------------------------------------------------------
// Base field F_r with r = p^k.

struct field_spec {
  long long p = 0;  // characteristic, prime
  int k = 1;        // extension degree over F_p
  long long r = 0;  // p^k

  bool operator==(const field_spec&) const = default;
};

// Validates primality of p and computes r; throws bad_model otherwise.
field_spec make_field(long long p, int k);

// ---------------------------------------------------------------------------
// Explicit extension fields F_{p^m}, m <= 16, p <= 13.
//
// Elements are coefficient vectors of residues mod the canonical irreducible:
// the monic degree-m polynomial over F_p whose non-leading coefficient vector,
// read as a base-p integer (constant digit least significant), is smallest
// among all irreducibles of that degree.  This pins one representation per
// (p, m) so every enumeration and subfield embedding is deterministic.

class gf {
 public:
  static constexpr int kMaxDeg = 16;
  using elem = std::array<std::int16_t, kMaxDeg>;

  gf(long long p, int m);

  long long p() const { return p_; }
  int m() const { return m_; }
  long long order() const { return q_; }  // p^m
  const std::vector<std::int16_t>& modulus() const { return mod_; }

  elem zero() const { return elem{}; }
  elem one() const;
  elem from_index(long long idx) const;  // base-p digits -> coefficients
  long long to_index(const elem& a) const;

  elem add(const elem& a, const elem& b) const;
  elem sub(const elem& a, const elem& b) const;
  elem mul(const elem& a, const elem& b) const;
  elem pow(elem a, long long e) const;
  bool is_zero(const elem& a) const;

  // Quadratic character (odd p): 0 on zero, +1 on nonzero squares, -1 else.
  // Evaluated as a^((q-1)/2) by binary exponentiation.
  int chi(const elem& a) const;

  // Image of the canonical generator of F_{p^s} (s | m) inside this field:
  // the first element in index order that is a root of the canonical
  // degree-s irreducible.  Identity when s == m.
  elem subfield_generator(int s) const;

  // Canonical irreducible of degree m over F_p (monic, little-endian,
  // length m+1).  Cached per (p, m).
  static const std::vector<std::int16_t>& irreducible(long long p, int m);

 private:
  long long p_, q_;
  int m_;
  std::vector<std::int16_t> mod_;
};

// ---------------------------------------------------------------------------
// Curve models.

enum class curve_kind { projective_line, hyperelliptic, plane_projective };

struct plane_monomial {
  int ex = 0, ey = 0, ez = 0;  // exponents of X, Y, Z
  long long c = 0;             // coefficient as an element index of F_r
};

struct curve_model {
  curve_kind kind = curve_kind::projective_line;
  field_spec field;

  // hyperelliptic y^2 = f(x): little-endian coefficients of f as element
  // indices of F_r; requires odd p, deg f >= 3, f squarefree.
  std::vector<long long> f;

  // plane projective F(X,Y,Z) = 0: homogeneous monomial list plus degree.
  std::vector<plane_monomial> monomials;
  int plane_degree = 0;

  int genus = 0;
  std::string id;  // label used in reports
};

curve_model make_projective_line(const field_spec& fld, std::string id = "p1");

// Checks odd characteristic, degree, leading coefficient, and
// squarefreeness (gcd(f, f') constant over F_r); derives the genus.
curve_model make_hyperelliptic(const field_spec& fld, std::vector<long long> f,
                               std::string id = "hyp");

// Degree-d plane model; genus defaults to (d-1)(d-2)/2 (smooth model).
curve_model make_plane(const field_spec& fld, std::vector<plane_monomial> mons,
                       int degree, std::string id = "plane");

// ---------------------------------------------------------------------------
// Counting.

// Number of F_{r^n}-rational points.  Throws budget_exceeded when the
// enumeration volume (r^n points, or r^{2n}+r^n+1 chart evaluations for
// plane models) exceeds `budget`.
long long count_points(const curve_model& c, int n,
                       long long budget = kDefaultBudget);

// N_1..N_B.
std::vector<long long> count_table(const curve_model& c, int B,
                                   long long budget = kDefaultBudget);

// Moebius inversion:  f * Phi_f = sum_{d | f} mu(f/d) N_d.
// Keys are the degrees f;  Phi_f counts places of norm r^f.
// Throws non_integral_inversion / negative_count when the table is not a
// consistent count sequence.
std::map<int, long long> places_from_counts(const std::vector<long long>& counts);

// Inverse direction:  N_n = sum_{f | n} f * Phi_f.
long long counts_from_places(const std::map<int, long long>& places, int n);

// Weil bound for one place count:  f*Phi_f <= r^f + 1 + 2g r^{f/2}.
bool weil_place_bound_ok(long long r, int g, int f, long long phi);

}  // namespace zetalim
