#!/usr/bin/env python3
"""Independent quadratic-field reference generator.

  * Kronecker symbol: own implementation, spot-checked against factorizations.
  * Imaginary class numbers: reduced-form enumeration.
  * Real class numbers: cycles of reduced indefinite forms (narrow class
    number) divided by 2 when the fundamental unit has norm +1.
  * Regulators: brute-force minimal solution of a^2 - d b^2 = +-4 (covers the
    half-integral units of d = 1 mod 4 automatically); for large d the
    continued-fraction cycle method, cross-validated against brute force.
  * L(1, chi_D): finite digamma sum, cross-checked against the class number
    formula on both signatures.

Regenerate with:  python3 tools/oracles/nf_ref.py > tests/ref_nf.hpp
"""

import sys
from math import isqrt, gcd

import mpmath as mp
from sympy import primerange, isprime

mp.mp.dps = 40


def kronecker(a, n):
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    k = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            k = -k
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                k = -k
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0


def fundamental_discriminant(d):
    assert d not in (0, 1)
    for p in range(2, isqrt(abs(d)) + 1):
        assert d % (p * p) != 0, f"{d} not squarefree"
    return d if d % 4 == 1 else 4 * d


def class_number_imag(D):
    assert D < 0 and D % 4 in (0, 1)
    h = 0
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            h += 1
    return h


def unit_bruteforce(d):
    """minimal (a + b sqrt(d))/2 > 1 with a,b >= 1 and a^2 - d b^2 = +-4"""
    for b in range(1, 10_000_000):
        for sgn in (-4, 4):
            t = d * b * b + sgn
            if t < 0:
                continue
            a = isqrt(t)
            if a * a == t and a >= 1:
                return a, b, sgn // 4
    raise RuntimeError("unit not found")


def regulator_cf(D, max_steps=10_000_000):
    """regulator of the real quadratic order of discriminant D via the product
    of complete quotients over one period of the continued fraction of
    (b0 + sqrt(D))/2, b0 = D mod 2."""
    sq = isqrt(D)
    b0 = D % 2
    P, Q = b0, 2
    seen = {}
    logs = []
    step = 0
    while (P, Q) not in seen:
        seen[(P, Q)] = len(logs)
        a = (P + sq) // Q if Q > 0 else (P + sq + 1) // Q - 1
        logs.append(mp.log((P + mp.sqrt(D)) / Q))
        P2 = a * Q - P
        Q2 = (D - P2 * P2) // Q
        assert (D - P2 * P2) % Q == 0
        P, Q = P2, Q2
        step += 1
        if step > max_steps:
            raise RuntimeError("period too long")
    start = seen[(P, Q)]
    return sum(logs[start:])


def reduced_indefinite_forms(D):
    """all reduced forms (a,b,c), b^2-4ac = D > 0: 0 < b < sqrt(D) and
    sqrt(D) - b < 2|a| < sqrt(D) + b."""
    out = []
    sq = mp.sqrt(D)
    for b in range(1, isqrt(D) + 1):
        if (D - b * b) % 4:
            continue
        prod = (b * b - D) // 4  # = a*c < 0
        for a in range(1, D):
            if abs(prod) % a:
                continue
            if not (sq - b < 2 * a < sq + b):
                if 2 * a >= sq + b:
                    break
                continue
            c = prod // a
            out.append((a, b, c))
            out.append((-a, b, -c))
    return out


def rho(form, D):
    """reduction step on indefinite forms: (a,b,c) -> (c, b', c')"""
    a, b, c = form
    sq = isqrt(D)
    # choose r = b' with r = -b mod 2c, and sq - 2|c| < r < sq (standard)
    m = 2 * abs(c)
    r = (-b) % m
    # bring r into the window (sq - m, sq]
    r += ((sq - r) // m) * m
    if r <= sq - m:
        r += m
    c2 = (r * r - D) // (4 * c)
    return (c, r, c2)


def class_number_real(d):
    D = fundamental_discriminant(d)
    forms = reduced_indefinite_forms(D)
    remaining = set(forms)
    cycles = 0
    while remaining:
        f0 = next(iter(remaining))
        cycles += 1
        f = f0
        while True:
            remaining.discard(f)
            f = rho(f, D)
            if f == f0:
                break
    a, b, sgn = unit_bruteforce(d) if d < 2000 else (None, None, None)
    if sgn is None:
        raise RuntimeError("need unit norm")
    hplus = cycles
    return hplus if sgn == -1 else hplus // 2


def l_one_digamma(D):
    q = abs(D)
    s = mp.mpf(0)
    for a in range(1, q):
        ch = kronecker(D, a)
        if ch:
            s += ch * mp.digamma(mp.mpf(a) / q)
    return -s / q


def fmt(x):
    return repr(float(x))


def main():
    out = []
    out.append("// Generated by tools/oracles/nf_ref.py (do not edit by hand).")
    out.append("// Independent quadratic-field references (forms enumeration, form-cycle")
    out.append("// class numbers, brute-force units, digamma L(1) sums).")
    out.append("#pragma once")
    out.append("#include <vector>")
    out.append("")
    out.append("namespace refdata {")

    # --- imaginary class numbers ---------------------------------------
    imag = [(-4, None), (-3, None), (-23, None), (-15, None), (-20, None),
            (-47, None), (-163, None), (-84, None), (-55, None)]
    vals = []
    for (D, _) in imag:
        h = class_number_imag(D)
        vals.append((D, h))
        print(f"h({D}) = {h}", file=sys.stderr)
    out.append("// imaginary fundamental discriminants and class numbers (reduced forms)")
    out.append("inline const long long imag_class_numbers[][2] = {"
               + ", ".join("{%d, %d}" % v for v in vals) + "};")

    # --- real regulators -------------------------------------------------
    dlist = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 29, 94]
    regs = []
    for d in dlist:
        a, b, sgn = unit_bruteforce(d)
        R = mp.log((a + b * mp.sqrt(d)) / 2)
        D = fundamental_discriminant(d)
        Rcf = regulator_cf(D)
        assert abs(R - Rcf) < mp.mpf("1e-25"), (d, R, Rcf)
        regs.append((d, R))
        print(f"d={d}: unit=({a}+{b}*sqrt{d})/2 norm {sgn}, R={mp.nstr(R, 20)}", file=sys.stderr)
    out.append("// real d, regulator ln((a+b*sqrt(d))/2) from brute-force minimal units,")
    out.append("// cross-checked against the continued-fraction cycle product")
    out.append("inline const double real_regulators[][2] = {")
    out.append("    " + ", ".join("{%d, %s}" % (d, fmt(R)) for (d, R) in regs) + "};")

    # --- real class numbers ----------------------------------------------
    real_h = []
    for d in [2, 3, 5, 6, 7, 10, 13, 15, 17, 21, 29, 79, 82, 145, 229]:
        h = class_number_real(d)
        real_h.append((d, h))
        print(f"h_real({d}) = {h}", file=sys.stderr)
    out.append("// real d and class number via reduced indefinite form cycles")
    out.append("inline const long long real_class_numbers[][2] = {"
               + ", ".join("{%d, %d}" % v for v in real_h) + "};")

    # --- L(1, chi_D) ------------------------------------------------------
    lvals = []
    for D in [-4, -3, -23, 8, 12, 5, 40, 29]:
        L = l_one_digamma(D)
        lvals.append((D, L))
        print(f"L(1,chi_{D}) = {mp.nstr(L, 20)}", file=sys.stderr)
        # cross-check with class number formula
        if D < 0:
            w = 4 if D == -4 else (6 if D == -3 else 2)
            h = class_number_imag(D)
            ref = 2 * mp.pi * h / (w * mp.sqrt(-D))
        else:
            d = D if D % 4 == 1 else D // 4
            h = class_number_real(d)
            R = regulator_cf(D)
            ref = 2 * h * R / mp.sqrt(D)
        assert abs(L - ref) < mp.mpf("1e-25"), (D, L, ref)
    out.append("// L(1, chi_D) via -1/q sum chi(a) digamma(a/q); matches 2^r1 pi^r2 h R/(w sqrt|D|)")
    out.append("inline const double l_one_values[][2] = {")
    out.append("    " + ", ".join("{%d, %s}" % (D, fmt(L)) for (D, L) in lvals) + "};")

    # --- place tables ------------------------------------------------------
    def place_counts(D, N):
        tab = {}
        for p in primerange(2, N + 1):
            k = kronecker(D, p)
            if k == 1:
                tab[p] = tab.get(p, 0) + 2
            elif k == 0:
                tab[p] = tab.get(p, 0) + 1
            else:
                if p * p <= N:
                    tab[p * p] = tab.get(p * p, 0) + 1
        return dict(sorted(tab.items()))

    t = place_counts(-4, 10)
    assert t == {2: 1, 5: 2, 9: 1}, t
    t23 = place_counts(-23, 50)
    print(f"places Q(sqrt-23) N=50: {t23}", file=sys.stderr)
    out.append("// place table of Q(sqrt(-23)) up to norm 50: pairs (q, Phi_q)")
    out.append("inline const long long places_m23_50[][2] = {"
               + ", ".join("{%d, %d}" % kv for kv in t23.items()) + "};")
    t5 = place_counts(5, 30)
    print(f"places Q(sqrt5) N=30: {t5}", file=sys.stderr)
    out.append("// place table of Q(sqrt(5)) up to norm 30")
    out.append("inline const long long places_p5_30[][2] = {"
               + ", ".join("{%d, %d}" % kv for kv in t5.items()) + "};")

    # --- Chebyshev psi ------------------------------------------------------
    def psi_nf(D, x):
        s = mp.mpf(0)
        for (q, phi) in place_counts(D, x).items():
            qk = q
            while qk <= x:
                s += phi * mp.log(q)
                qk *= q
        return s

    psi_qi_5 = psi_nf(-4, 5)
    assert abs(psi_qi_5 - (2 * mp.log(2) + 2 * mp.log(5))) < mp.mpf("1e-30")
    psi_m23_50 = psi_nf(-23, 50)
    print(f"Psi(Q(i),5) = {mp.nstr(psi_qi_5, 20)}  Psi(-23,50)={mp.nstr(psi_m23_50, 20)}", file=sys.stderr)
    out.append("inline const double psi_qi_x5 = " + fmt(psi_qi_5) + ";     // 2 ln 2 + 2 ln 5")
    out.append("inline const double psi_m23_x50 = " + fmt(psi_m23_50) + ";")

    # --- bs diagnostic sum ---------------------------------------------------
    bs_qi = mp.log(2) + 2 * mp.log(mp.mpf(5) / 4) + mp.log(mp.mpf(9) / 8)
    out.append("inline const double bs_qi_N10 = " + fmt(bs_qi) + ";  // ln2 + 2ln(5/4) + ln(9/8)")

    # --- Brauer-Siegel trend samples ----------------------------------------
    # ln(kappa)/g for a deterministic sample; kappa = 2^r1 (2pi)^r2 h R/(w sqrt|D|).
    # Imaginary h exact by forms enumeration (a <= sqrt(|D|/3) stays small even
    # at |D| ~ 1e6); real h from the analytic formula with L(1) via a fast
    # float digamma sum (checked against the dps-40 sum at a mid-size d).
    def l_one_fast(D):
        q = abs(D)
        s = 0.0
        for a in range(1, q):
            ch = kronecker(D, a)
            if ch:
                s += ch * float(mp.fp.psi(0, a / q))
        return -s / q

    lf = l_one_fast(-1003)
    lh = l_one_digamma(-1003)
    assert abs(lf - float(lh)) < 1e-9, (lf, lh)

    samples = []
    for d in [101, 1009, 10007, 100003, 249989]:
        D = fundamental_discriminant(d)
        R = regulator_cf(D)
        L = l_one_fast(D)
        hraw = float(mp.sqrt(D)) * L / (2 * float(R))
        h = int(round(hraw))
        assert abs(hraw - h) < 0.1, (d, hraw)
        kappa = 2 * h * float(R) / float(mp.sqrt(D))
        g = float(mp.log(mp.sqrt(D)))
        samples.append((d, float(h), mp.log(kappa) / g))
        print(f"d={d}: h={h} R={mp.nstr(R, 10)} ln kappa/g = {mp.nstr(mp.log(kappa)/g, 10)}", file=sys.stderr)
    for d in [-101, -1003, -10007, -100003, -999983]:
        for p in range(2, isqrt(-d) + 1):
            assert d % (p * p) != 0, f"non-squarefree sample {d}"
        D = fundamental_discriminant(d)
        h = class_number_imag(D)
        kappa = 2 * mp.pi * h / ((4 if D == -4 else 6 if D == -3 else 2) * mp.sqrt(-D))
        g = mp.log(mp.sqrt(-D))
        samples.append((d, float(h), mp.log(kappa) / g))
        print(f"d={d}: h={h} ln kappa/g = {mp.nstr(mp.log(kappa)/g, 10)}", file=sys.stderr)
    out.append("// Brauer-Siegel trend samples: d, h, ln(kappa)/g")
    out.append("inline const double bs_trend[][3] = {")
    out.append("    " + ", ".join("{%d, %d, %s}" % (d, int(h), fmt(v)) for (d, h, v) in samples) + "};")

    # --- splitting balance ----------------------------------------------------
    X = 100000
    for D in (-4, 5):
        ns = ni = 0
        for p in primerange(2, X + 1):
            k = kronecker(D, p)
            if k == 1:
                ns += 1
            elif k == -1:
                ni += 1
        npr = len(list(primerange(2, X + 1)))
        print(f"D={D}: split={ns} inert={ni} piX={npr}", file=sys.stderr)
        out.append(f"inline const long long split_balance_D{'m4' if D==-4 else 'p5'}[3] = "
                   + "{%d, %d, %d};  // split, inert, pi(10^5)" % (ns, ni, npr))

    out.append("")
    out.append("} // namespace refdata")
    print("\n".join(out))


if __name__ == "__main__":
    main()
