"""Number theory behind the nonemptiness argument.

Factorization of Mersenne-type numbers 2^n - 1, exact totient ratios, the
distinct-prime-factor bound for 2^p - 1, and partial sums of the series
sum_{d odd} mu(d) / (d t_d) whose limit is about 0.73192.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError

FACTOR_LIMIT = 1 << 48
MAX_EXPONENT = 48
SERIES_LIMIT = 0.73192


@dataclass(frozen=True)
class Factorization:
    m: int
    factors: tuple[tuple[int, int], ...] = field(default=())

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def value(self) -> int:
        r = 1
        for p, e in self.factors:
            r *= p**e
        return r

    def to_json(self) -> list[list[int]]:
        return [[p, e] for p, e in self.factors]


def factorize(m: int) -> Factorization:
    """Trial division up to sqrt(m)."""
    if not 1 <= m <= FACTOR_LIMIT:
        raise PreconditionError(f"m={m} outside [1, 2^48]")
    out = []
    rest = m
    for p in (2, 3):
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            out.append((p, e))
    # 6k +- 1 wheel
    p, step = 5, 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if rest > 1:
        out.append((rest, 1))
    return Factorization(m, tuple(out))


def euler_phi(m: int) -> int:
    r = m
    for p, _ in factorize(m).factors:
        r -= r // p
    return r


def is_prime(p: int) -> bool:
    return p >= 2 and factorize(p).factors == ((p, 1),)


def phi_ratio(n: int) -> Fraction:
    """phi(2^n - 1) / (2^n - 1) as an exact rational."""
    if not 2 <= n <= MAX_EXPONENT:
        raise PreconditionError(f"n={n} outside [2, {MAX_EXPONENT}]")
    m = (1 << n) - 1
    return Fraction(euler_phi(m), m)


def omega_bound_check(p: int) -> dict:
    """Check the distinct-prime-factor bound for 2^p - 1.

    Every prime factor r of 2^p - 1 must be of the form 2sp + 1 with s >= 1,
    which forces k < log_{2p}(2^p - 1) < p / log2(p) distinct factors.
    """
    if p > MAX_EXPONENT or not is_prime(p):
        raise PreconditionError(f"p={p} is not a prime <= {MAX_EXPONENT}")
    if p == 2:
        raise PreconditionError("the factor-shape argument needs an odd prime p")
    m = (1 << p) - 1
    fac = factorize(m)
    k = len(fac.factors)
    log_bound = math.log(m) / math.log(2 * p)
    p_bound = p / math.log2(p)
    shapes = []
    for r, _ in fac.factors:
        s, rem = divmod(r - 1, 2 * p)
        shapes.append({"r": r, "s": s, "ok": rem == 0 and s >= 1})
    ratio = phi_ratio(p)
    lower = (1 - 1 / (2 * p)) ** p_bound
    return {
        "p": p,
        "m": m,
        "k": k,
        "log_bound": log_bound,
        "p_bound": p_bound,
        "k_ok": k < log_bound < p_bound,
        "shapes": shapes,
        "shapes_ok": all(s["ok"] for s in shapes),
        "phi_ratio": ratio,
        "ratio_lower_bound": lower,
        "ratio_ok": ratio < 1 and float(ratio) > lower,
        "ok": k < log_bound < p_bound and all(s["ok"] for s in shapes)
        and ratio < 1 and float(ratio) > lower,
    }


def mobius(d: int) -> int:
    if d < 1:
        raise PreconditionError("mobius needs d >= 1")
    mu = 1
    for _, e in factorize(d).factors:
        if e > 1:
            return 0
        mu = -mu
    return mu


def _order_of_2(d: int, phi_factors) -> int:
    t = 1
    for p, e in phi_factors:
        t *= p**e
    for p, _ in phi_factors:
        while t % p == 0 and pow(2, t // p, d) == 1:
            t //= p
    return t


def mult_order_2(d: int) -> int:
    """Multiplicative order of 2 modulo an odd d (t_1 = 1)."""
    if d < 1 or d % 2 == 0:
        raise PreconditionError(f"order of 2 mod {d} needs odd d >= 1")
    if d == 1:
        return 1
    return _order_of_2(d, factorize(euler_phi(d)).factors)


def _smallest_prime_factors(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def _factor_with(spf, m):
    out = {}
    while m > 1:
        p = spf[m]
        out[p] = out.get(p, 0) + 1
        m //= p
    return sorted(out.items())


def mu_partial_sum(D: int) -> float:
    """Sum over odd squarefree d <= D of mu(d) / (d * t_d), ascending in d."""
    if D < 1:
        raise PreconditionError("D must be >= 1")
    spf = _smallest_prime_factors(D)
    total = 0.0
    for d in range(1, D + 1, 2):
        if d == 1:
            total += 1.0
            continue
        fac = _factor_with(spf, d)
        if any(e > 1 for _, e in fac):
            continue
        mu = -1 if len(fac) % 2 else 1
        phi = 1
        for p, _ in fac:
            phi *= p - 1
        t = _order_of_2(d, _factor_with(spf, phi))
        total += mu / (d * t)
    return total


def scan_good_f(max_f: int) -> list[dict]:
    """Odd f in [5, max_f] with phi(2^f-1)/(2^f-1) > 1/3, with usable f0 values.

    For odd f and gcd(f, f0) = 1 one has gcd(2^f - 1, 4^f0 - 1) = 1.  The
    suggested f0 is the smallest such value >= 2; f0 = 1 always works too.
    """
    if not 5 <= max_f <= MAX_EXPONENT:
        raise PreconditionError(f"max_f={max_f} outside [5, {MAX_EXPONENT}]")
    out = []
    for f in range(5, max_f + 1, 2):
        ratio = phi_ratio(f)
        if ratio <= Fraction(1, 3):
            continue
        options = [f0 for f0 in range(1, f) if math.gcd(f, f0) == 1]
        suggested = next(f0 for f0 in options if f0 >= 2)
        out.append({"f": f, "phi_ratio": ratio, "f0_options": options, "suggested_f0": suggested})
    return out


def density_table(max_n: int) -> list[dict]:
    """Rows {n, factors, phi_ratio, qualifies} for odd n in [5, max_n]."""
    if not 5 <= max_n <= MAX_EXPONENT:
        raise PreconditionError(f"max_n={max_n} outside [5, {MAX_EXPONENT}]")
    rows = []
    for n in range(5, max_n + 1, 2):
        ratio = phi_ratio(n)
        rows.append({
            "n": n,
            "factors": factorize((1 << n) - 1).to_json(),
            "phi_ratio": f"{ratio.numerator}/{ratio.denominator}",
            "qualifies": ratio > Fraction(1, 3),
        })
    return rows
