#include "zetalim/ffcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

namespace zetalim {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Overflow-checked p^k for budget math; saturates at LLONG_MAX/4.
long long checked_pow(long long b, int e) {
  long long acc = 1;
  for (int i = 0; i < e; ++i) {
    if (acc > (1ll << 61) / b) return 1ll << 61;
    acc *= b;
  }
  return acc;
}

// --- dense little-endian polynomial helpers over F_p (small coefficients) ---

using poly = std::vector<std::int16_t>;

poly ptrim(poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

poly pmul(const poly& a, const poly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        acc[i + j] = (acc[i + j] + 1ll * a[i] * b[j]) % p;
  poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    out[i] = static_cast<std::int16_t>(acc[i]);
  return ptrim(std::move(out));
}

long long inv_mod(long long a, long long p) {
  long long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

poly pmod_poly(poly a, const poly& m, long long p) {
  long long lcinv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    long long c = a.back() % p;
    if (c) {
      long long f = c * lcinv % p;
      std::size_t off = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        long long v = (a[off + i] - f * m[i]) % p;
        if (v < 0) v += p;
        a[off + i] = static_cast<std::int16_t>(v);
      }
    }
    a.pop_back();
  }
  return ptrim(std::move(a));
}

poly pgcd(poly a, poly b, long long p) {
  a = ptrim(std::move(a));
  b = ptrim(std::move(b));
  while (!b.empty()) {
    poly r = pmod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

poly pow_mod_poly(poly base, long long e, const poly& m, long long p) {
  poly r = {1};
  base = pmod_poly(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmod_poly(pmul(r, base, p), m, p);
    base = pmod_poly(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// x^(p^e) mod m via repeated p-th powering.
poly frobenius_power(const poly& m, long long p, int e) {
  poly x = {0, 1};
  poly acc = x;
  for (int i = 0; i < e; ++i) acc = pow_mod_poly(acc, p, m, p);
  return acc;
}

// Rabin irreducibility test for monic m of degree d over F_p:
// x^(p^d) == x (mod m), and for every prime l | d the polynomial
// x^(p^(d/l)) - x must be coprime to m.
bool is_irreducible(const poly& m, long long p) {
  int d = static_cast<int>(m.size()) - 1;
  const poly x = {0, 1};
  if (ptrim(frobenius_power(m, p, d)) != x) return false;
  std::vector<int> prime_divs;
  int n = d;
  for (int l = 2; l * l <= n; ++l)
    if (n % l == 0) {
      prime_divs.push_back(l);
      while (n % l == 0) n /= l;
    }
  if (n > 1) prime_divs.push_back(n);
  for (int l : prime_divs) {
    poly diff = frobenius_power(m, p, d / l);
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::int16_t>(((diff[1] - 1) % p + p) % p);
    if (pgcd(m, ptrim(std::move(diff)), p).size() != 1) return false;
  }
  return true;
}

}  // namespace

field_spec make_field(long long p, int k) {
  if (!is_prime(p)) throw bad_model("field characteristic must be prime");
  if (k < 1 || k > gf::kMaxDeg) throw bad_model("field extension degree out of range");
  if (k > 1 && p > 13) throw bad_model("extension fields supported for p <= 13 only");
  long long r = checked_pow(p, k);
  if (r >= (1ll << 61)) throw bad_model("field size overflows");
  return field_spec{p, k, r};
}

// --- canonical irreducibles -------------------------------------------------

const std::vector<std::int16_t>& gf::irreducible(long long p, int m) {
  static std::map<std::pair<long long, int>, poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (m == 1) {
    poly lin = {0, 1};  // x itself: F_p represented with modulus x
    return cache.emplace(key, std::move(lin)).first->second;
  }
  // Scan lower-coefficient encodings upward; the first monic irreducible wins.
  long long total = checked_pow(p, m);
  for (long long enc = 0; enc < total; ++enc) {
    poly cand(m + 1, 0);
    long long e = enc;
    for (int i = 0; i < m; ++i) {
      cand[i] = static_cast<std::int16_t>(e % p);
      e /= p;
    }
    cand[m] = 1;
    if (is_irreducible(cand, p))
      return cache.emplace(key, std::move(cand)).first->second;
  }
  throw bad_model("no irreducible polynomial found (internal)");
}

gf::gf(long long p, int m) : p_(p), m_(m) {
  if (m < 1 || m > kMaxDeg) throw bad_model("extension degree out of range");
  if (m > 1 && p > 13) throw bad_model("extension fields supported for p <= 13 only");
  q_ = checked_pow(p, m);
  mod_ = irreducible(p, m);
}

gf::elem gf::one() const {
  elem e{};
  e[0] = 1;
  return e;
}

gf::elem gf::from_index(long long idx) const {
  elem e{};
  for (int i = 0; i < m_; ++i) {
    e[i] = static_cast<std::int16_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

long long gf::to_index(const elem& a) const {
  long long idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

bool gf::is_zero(const elem& a) const {
  for (int i = 0; i < m_; ++i)
    if (a[i]) return false;
  return true;
}

gf::elem gf::add(const elem& a, const elem& b) const {
  elem o{};
  for (int i = 0; i < m_; ++i) {
    std::int16_t v = static_cast<std::int16_t>(a[i] + b[i]);
    if (v >= p_) v = static_cast<std::int16_t>(v - p_);
    o[i] = v;
  }
  return o;
}

gf::elem gf::sub(const elem& a, const elem& b) const {
  elem o{};
  for (int i = 0; i < m_; ++i) {
    std::int16_t v = static_cast<std::int16_t>(a[i] - b[i]);
    if (v < 0) v = static_cast<std::int16_t>(v + p_);
    o[i] = v;
  }
  return o;
}

gf::elem gf::mul(const elem& a, const elem& b) const {
  if (m_ == 1) {
    elem o{};
    o[0] = static_cast<std::int16_t>(1ll * a[0] * b[0] % p_);
    return o;
  }
  std::array<long long, 2 * kMaxDeg> acc{};
  for (int i = 0; i < m_; ++i)
    if (a[i])
      for (int j = 0; j < m_; ++j)
        if (b[j]) acc[i + j] += 1ll * a[i] * b[j];
  // Reduce degree 2m-2 .. m by the monic modulus.
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    long long c = acc[d] % p_;
    if (c) {
      for (int i = 0; i < m_; ++i) acc[d - m_ + i] -= c * mod_[i];
    }
    acc[d] = 0;
  }
  elem o{};
  for (int i = 0; i < m_; ++i) {
    long long v = acc[i] % p_;
    if (v < 0) v += p_;
    o[i] = static_cast<std::int16_t>(v);
  }
  return o;
}

gf::elem gf::pow(elem a, long long e) const {
  elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int gf::chi(const elem& a) const {
  if (is_zero(a)) return 0;
  elem v = pow(a, (q_ - 1) / 2);
  if (v == one()) return 1;
  return -1;
}

gf::elem gf::subfield_generator(int s) const {
  if (s < 1 || m_ % s != 0)
    throw bad_model("subfield degree must divide extension degree");
  // Degree-1 digits are plain constants; degree-m is this field's own
  // generator x.  Any embedding choice yields Galois-conjugate coefficient
  // vectors and hence identical point counts; these picks are the cheapest
  // deterministic ones.
  if (s == 1) return one();
  if (s == m_) return from_index(p_);
  const poly& base_min = irreducible(p_, s);
  // First root in index order of the canonical degree-s irreducible.
  for (long long idx = 0; idx < q_; ++idx) {
    elem cand = from_index(idx);
    // Horner evaluation of base_min at cand.
    elem acc = zero();
    for (int i = static_cast<int>(base_min.size()) - 1; i >= 0; --i) {
      acc = mul(acc, cand);
      elem cst{};
      cst[0] = base_min[i];
      acc = add(acc, cst);
    }
    if (is_zero(acc)) return cand;
  }
  throw bad_model("no subfield embedding found (internal)");
}

// --- curve constructors ------------------------------------------------------

curve_model make_projective_line(const field_spec& fld, std::string id) {
  curve_model c;
  c.kind = curve_kind::projective_line;
  c.field = fld;
  c.genus = 0;
  c.id = std::move(id);
  return c;
}

curve_model make_hyperelliptic(const field_spec& fld, std::vector<long long> f,
                               std::string id) {
  if (fld.p == 2) throw bad_model("hyperelliptic models require odd characteristic");
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 4) throw bad_model("hyperelliptic f must have degree >= 3");
  for (long long c : f)
    if (c < 0 || c >= fld.r) throw bad_model("coefficient outside field range");
  // Squarefree test over F_r: gcd(f, f') must be constant.
  gf base(fld.p, fld.k);
  int d = static_cast<int>(f.size()) - 1;
  // Work with full element arithmetic (k may exceed 1): generic poly gcd
  // over the field using vectors of elements.
  using fpoly = std::vector<gf::elem>;
  auto trim = [&](fpoly a) {
    while (!a.empty() && base.is_zero(a.back())) a.pop_back();
    return a;
  };
  auto scalar_mul_p = [&](const gf::elem& a, long long s) {
    gf::elem cst{};
    cst[0] = static_cast<std::int16_t>(s % fld.p);
    return base.mul(a, cst);
  };
  fpoly F(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) F[i] = base.from_index(f[i]);
  fpoly Fp;  // derivative
  for (std::size_t i = 1; i < F.size(); ++i)
    Fp.push_back(scalar_mul_p(F[i], static_cast<long long>(i % fld.p)));
  Fp = trim(std::move(Fp));
  fpoly A = trim(F), B = Fp;
  auto inv_elem = [&](const gf::elem& a) {
    return base.pow(a, base.order() - 2);
  };
  auto poly_mod = [&](fpoly a, const fpoly& m) {
    gf::elem lcinv = inv_elem(m.back());
    while (a.size() >= m.size() && !m.empty()) {
      gf::elem c = base.mul(a.back(), lcinv);
      if (!base.is_zero(c)) {
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
          a[off + i] = base.sub(a[off + i], base.mul(c, m[i]));
      }
      a.pop_back();
      a = trim(std::move(a));
      if (a.size() < m.size()) break;
    }
    return trim(std::move(a));
  };
  while (!B.empty()) {
    fpoly R = poly_mod(A, B);
    A = std::move(B);
    B = std::move(R);
  }
  if (A.size() > 1) throw bad_model("hyperelliptic f is not squarefree");
  if (B.empty() && A.empty())
    throw bad_model("hyperelliptic f vanished (internal)");

  curve_model c;
  c.kind = curve_kind::hyperelliptic;
  c.field = fld;
  c.f = std::move(f);
  c.genus = (d % 2 == 1) ? (d - 1) / 2 : d / 2 - 1;
  if (c.genus < 1) throw bad_model("hyperelliptic genus must be >= 1");
  c.id = std::move(id);
  return c;
}

curve_model make_plane(const field_spec& fld, std::vector<plane_monomial> mons,
                       int degree, std::string id) {
  if (degree < 1) throw bad_model("plane degree must be positive");
  if (mons.empty()) throw bad_model("plane model needs at least one monomial");
  for (const auto& m : mons) {
    if (m.ex < 0 || m.ey < 0 || m.ez < 0 || m.ex + m.ey + m.ez != degree)
      throw bad_model("plane monomial exponents must be nonnegative and homogeneous");
    if (m.c < 0 || m.c >= fld.r) throw bad_model("coefficient outside field range");
  }
  curve_model c;
  c.kind = curve_kind::plane_projective;
  c.field = fld;
  c.monomials = std::move(mons);
  c.plane_degree = degree;
  c.genus = (degree - 1) * (degree - 2) / 2;
  c.id = std::move(id);
  return c;
}

// --- counting ----------------------------------------------------------------

namespace {

long long count_hyperelliptic(const curve_model& c, int n, long long budget) {
  const field_spec& fld = c.field;
  int m = fld.k * n;
  long long qn = checked_pow(fld.r, n);
  if (qn > budget) throw budget_exceeded("r^n exceeds enumeration budget");
  gf ext(fld.p, m);
  // Embed the coefficients: index -> base-field element -> image under the
  // canonical embedding F_{p^k} -> F_{p^{k n}}.
  gf::elem gen = ext.subfield_generator(fld.k);
  std::vector<gf::elem> coeff(c.f.size());
  for (std::size_t i = 0; i < c.f.size(); ++i) {
    long long idx = c.f[i];
    gf::elem acc = ext.zero();
    gf::elem pw = ext.one();
    for (int d = 0; d < fld.k; ++d) {
      long long digit = idx % fld.p;
      idx /= fld.p;
      if (digit) {
        gf::elem cst{};
        cst[0] = static_cast<std::int16_t>(digit);
        acc = ext.add(acc, ext.mul(cst, pw));
      }
      pw = ext.mul(pw, gen);
    }
    coeff[i] = acc;
  }
  long long affine = 0;
  long long q = ext.order();
  for (long long xi = 0; xi < q; ++xi) {
    gf::elem x = ext.from_index(xi);
    gf::elem val = ext.zero();
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
      val = ext.add(ext.mul(val, x), coeff[i]);
    affine += 1 + ext.chi(val);
  }
  // Points at infinity of the smooth model: one for odd degree; for even
  // degree, two when the leading coefficient is a square in F_{r^n}.
  int d = static_cast<int>(c.f.size()) - 1;
  long long inf;
  if (d % 2 == 1) {
    inf = 1;
  } else {
    inf = ext.chi(coeff.back()) == 1 ? 2 : 0;
  }
  return affine + inf;
}

long long count_plane(const curve_model& c, int n, long long budget) {
  const field_spec& fld = c.field;
  int m = fld.k * n;
  long long qn = checked_pow(fld.r, n);
  long long evals = qn >= (1ll << 30) ? (1ll << 61) : qn * qn + qn + 1;
  if (qn > budget || evals > budget)
    throw budget_exceeded("plane chart evaluations exceed budget");
  gf ext(fld.p, m);
  gf::elem gen = ext.subfield_generator(fld.k);
  auto embed = [&](long long idx) {
    gf::elem acc = ext.zero();
    gf::elem pw = ext.one();
    for (int d = 0; d < fld.k; ++d) {
      long long digit = idx % fld.p;
      idx /= fld.p;
      if (digit) {
        gf::elem cst{};
        cst[0] = static_cast<std::int16_t>(digit);
        acc = ext.add(acc, ext.mul(cst, pw));
      }
      pw = ext.mul(pw, gen);
    }
    return acc;
  };
  std::vector<gf::elem> coeff(c.monomials.size());
  for (std::size_t i = 0; i < c.monomials.size(); ++i)
    coeff[i] = embed(c.monomials[i].c);

  long long q = ext.order();
  // Precompute power tables lazily per point via pow (degrees are tiny).
  auto eval = [&](const gf::elem& X, const gf::elem& Y, const gf::elem& Z) {
    gf::elem s = ext.zero();
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      const auto& mo = c.monomials[i];
      gf::elem t = coeff[i];
      t = ext.mul(t, ext.pow(X, mo.ex));
      t = ext.mul(t, ext.pow(Y, mo.ey));
      t = ext.mul(t, ext.pow(Z, mo.ez));
      s = ext.add(s, t);
    }
    return s;
  };
  long long total = 0;
  gf::elem one = ext.one(), zero = ext.zero();
  // Chart [1 : y : z]
  for (long long yi = 0; yi < q; ++yi) {
    gf::elem y = ext.from_index(yi);
    for (long long zi = 0; zi < q; ++zi) {
      gf::elem z = ext.from_index(zi);
      if (ext.is_zero(eval(one, y, z))) ++total;
    }
  }
  // Chart [0 : 1 : z]
  for (long long zi = 0; zi < q; ++zi) {
    gf::elem z = ext.from_index(zi);
    if (ext.is_zero(eval(zero, one, z))) ++total;
  }
  // Point [0 : 0 : 1]
  if (ext.is_zero(eval(zero, zero, one))) ++total;
  return total;
}

}  // namespace

long long count_points(const curve_model& c, int n, long long budget) {
  if (n < 1) throw bad_model("extension degree n must be >= 1");
  long long qn = checked_pow(c.field.r, n);
  switch (c.kind) {
    case curve_kind::projective_line:
      if (qn > budget) throw budget_exceeded("r^n exceeds enumeration budget");
      return qn + 1;
    case curve_kind::hyperelliptic:
      if (c.field.k * n > gf::kMaxDeg)
        throw budget_exceeded("extension degree exceeds supported table");
      return count_hyperelliptic(c, n, budget);
    case curve_kind::plane_projective:
      if (c.field.k * n > gf::kMaxDeg)
        throw budget_exceeded("extension degree exceeds supported table");
      return count_plane(c, n, budget);
  }
  throw bad_model("unknown curve kind");
}

std::vector<long long> count_table(const curve_model& c, int B, long long budget) {
  if (B < 1) throw bad_model("depth must be >= 1");
  std::vector<long long> out(B);
  for (int n = 1; n <= B; ++n) out[n - 1] = count_points(c, n, budget);
  return out;
}

std::map<int, long long> places_from_counts(const std::vector<long long>& counts) {
  int B = static_cast<int>(counts.size());
  for (long long n : counts)
    if (n < 0) throw negative_count("negative point count");
  // mu via smallest-prime-factor sieve on [1, B].
  std::vector<int> mu(B + 1, 1), spf(B + 1, 0);
  for (int i = 2; i <= B; ++i)
    if (!spf[i])
      for (int j = i; j <= B; j += i)
        if (!spf[j]) spf[j] = i;
  for (int i = 2; i <= B; ++i) {
    int x = i, last = 0;
    bool sq = false;
    int cnt = 0;
    while (x > 1) {
      int f = spf[x];
      if (f == last) {
        sq = true;
        break;
      }
      last = f;
      ++cnt;
      x /= f;
    }
    mu[i] = sq ? 0 : (cnt % 2 ? -1 : 1);
  }
  std::map<int, long long> places;
  for (int f = 1; f <= B; ++f) {
    long long s = 0;
    for (int d = 1; d <= f; ++d)
      if (f % d == 0) s += mu[f / d] * counts[d - 1];
    if (s % f != 0)
      throw non_integral_inversion("inverted place count is not divisible by degree " +
                                   std::to_string(f));
    long long phi = s / f;
    if (phi < 0)
      throw negative_count("place count negative at degree " + std::to_string(f));
    places[f] = phi;
  }
  return places;
}

long long counts_from_places(const std::map<int, long long>& places, int n) {
  long long s = 0;
  for (const auto& [f, phi] : places)
    if (f <= n && n % f == 0) s += static_cast<long long>(f) * phi;
  return s;
}

bool weil_place_bound_ok(long long r, int g, int f, long long phi) {
  double bound = std::pow(static_cast<double>(r), f) + 1.0 +
                 2.0 * g * std::pow(static_cast<double>(r), f / 2.0);
  return static_cast<double>(f) * static_cast<double>(phi) <= bound + 1e-9;
}

}  // namespace zetalim
