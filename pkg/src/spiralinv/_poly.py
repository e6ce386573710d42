"""Dense univariate polynomial helpers.

Coefficients are stored ascending (index == power) in plain Python lists or
1-D numpy arrays of float64. Everything here is scalar code on tiny
polynomials (degree <= 8); the hot sampled-evaluation paths live in
`spiralinv.kernels` instead.

Real roots are isolated with a Sturm-sequence bisection and polished by
safeguarded Newton. This is deterministic and has no dependence on
eigenvalue machinery.
"""

from __future__ import annotations

import math

_TRIM_REL = 1e-13


def trim(c, rel=_TRIM_REL):
    """Drop leading (highest-power) coefficients that are negligible."""
    c = list(map(float, c))
    top = max((abs(x) for x in c), default=0.0)
    if top == 0.0:
        return [0.0]
    while len(c) > 1 and abs(c[-1]) <= rel * top:
        c.pop()
    return c


def peval(c, x):
    """Horner evaluation."""
    r = 0.0
    for a in reversed(c):
        r = r * x + a
    return r


def padd(*ps):
    n = max(len(p) for p in ps)
    out = [0.0] * n
    for p in ps:
        for i, v in enumerate(p):
            out[i] += v
    return out


def pscale(p, s):
    return [s * v for v in p]


def pmul(p, q):
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0.0:
            continue
        for k, b in enumerate(q):
            out[i + k] += a * b
    return out


def pder(p):
    if len(p) <= 1:
        return [0.0]
    return [i * p[i] for i in range(1, len(p))]


def pdivmod(p, q):
    """Polynomial long division: p = quot*q + rem."""
    p = trim(p)
    q = trim(q)
    if len(q) == 1:
        if q[0] == 0.0:
            raise ZeroDivisionError("polynomial division by zero")
        return pscale(p, 1.0 / q[0]), [0.0]
    rem = list(p)
    n, m = len(rem), len(q)
    if n < m:
        return [0.0], rem
    quot = [0.0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        f = rem[i + m - 1] / q[-1]
        quot[i] = f
        for k in range(m):
            rem[i + k] -= f * q[k]
    return quot, rem[: m - 1] if m > 1 else [0.0]


def pdeflate(p, r):
    """Divide by the linear factor (x - r); returns (quotient, remainder)."""
    desc = list(reversed(p))
    out = [desc[0]]
    for c in desc[1:]:
        out.append(c + r * out[-1])
    remainder = out.pop()
    out.reverse()
    return out, remainder


def cauchy_bound(p):
    """All real roots lie in (-M, M)."""
    p = trim(p)
    lead = abs(p[-1])
    if lead == 0.0:
        return 1.0
    return 1.0 + max(abs(c) for c in p[:-1]) / lead if len(p) > 1 else 1.0


def sturm_sequence(p):
    """Sturm chain of p; each element scaled to unit max-coefficient.

    Returns (chain, gcd) where gcd is a nontrivial common factor of p and p'
    when the chain terminates early (p not square-free), else None.
    """
    p = trim(p)
    chain = [p]
    d = trim(pder(p))
    if len(p) <= 1 or (len(d) == 1 and d[0] == 0.0):
        return chain, None
    chain.append(d)
    while True:
        _, rem = pdivmod(chain[-2], chain[-1])
        rem = trim(rem)
        top = max(abs(c) for c in rem)
        if top == 0.0 or (len(rem) == 1 and abs(rem[0]) <= 1e-12 * max(abs(c) for c in chain[-1])):
            gcd = chain[-1]
            if len(gcd) > 1:
                return chain, gcd
            return chain, None
        chain.append(pscale(rem, -1.0 / top))
        if len(chain[-1]) == 1:
            return chain, None


def sign_variations(chain, x):
    prev = 0
    var = 0
    for p in chain:
        v = peval(p, x)
        s = 0 if v == 0.0 else (1 if v > 0.0 else -1)
        if s != 0:
            if prev != 0 and s != prev:
                var += 1
            prev = s
    return var


def count_real_roots(p, a, b):
    """Number of distinct real roots of p in (a, b]."""
    chain, gcd = sturm_sequence(p)
    if gcd is not None:
        q, _ = pdivmod(p, gcd)
        chain, _ = sturm_sequence(q)
    return sign_variations(chain, a) - sign_variations(chain, b)


def _poly_scale_at(p, x):
    ax = abs(x)
    s = 0.0
    t = 1.0
    for c in p:
        s += abs(c) * t
        t *= ax
    return max(s, 1e-300)


def _refine_root(p, dp, lo, hi):
    """Safeguarded Newton inside a sign-changing bracket."""
    flo = peval(p, lo)
    x = 0.5 * (lo + hi)
    for _ in range(100):
        fx = peval(p, x)
        if fx == 0.0:
            return x
        if (fx > 0.0) == (flo > 0.0):
            lo = x
        else:
            hi = x
        d = peval(dp, x)
        if d != 0.0:
            step = fx / d
            xn = x - step
            if not (lo < xn < hi):
                xn = 0.5 * (lo + hi)
        else:
            xn = 0.5 * (lo + hi)
        if abs(fx) <= 1e-15 * _poly_scale_at(p, x) and abs(xn - x) <= 1e-15 * max(1.0, abs(x)):
            return xn
        x = xn
    return x


def isolate_real_roots(p):
    """All real roots of p, ascending, as (root, multiplicity) pairs."""
    p = trim(p)
    if len(p) == 1:
        return []
    if len(p) == 2:
        return [(-p[0] / p[1], 1)]
    chain, gcd = sturm_sequence(p)
    if gcd is not None:
        # not square-free: roots of the square-free part, multiplicity from gcd
        sf, _ = pdivmod(p, gcd)
        base = isolate_real_roots(sf)
        inner = isolate_real_roots(gcd)
        out = []
        for r, _m in base:
            mult = 1
            for r2, m2 in inner:
                if abs(r - r2) <= 1e-8 * max(1.0, abs(r)):
                    mult += m2
            out.append((r, mult))
        return out

    M = cauchy_bound(p)
    lo, hi = -M, M
    total = sign_variations(chain, lo) - sign_variations(chain, hi)
    if total <= 0:
        return []
    dp = pder(p)
    roots = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            # shrink until the endpoint signs differ, then polish
            fa, fb = peval(p, a), peval(p, b)
            while (fa > 0.0) == (fb > 0.0):
                mid = 0.5 * (a + b)
                if sign_variations(chain, a) - sign_variations(chain, mid) == 1:
                    b, fb = mid, peval(p, mid)
                else:
                    a, fa = mid, peval(p, mid)
                if b - a <= 1e-15 * max(1.0, abs(a), abs(b)):
                    break
            roots.append(_refine_root(p, dp, a, b))
            continue
        mid = 0.5 * (a + b)
        # nudge the split point off a root of the chain
        while any(peval(q, mid) == 0.0 for q in chain):
            mid += (b - a) * 1e-9
        nl = sign_variations(chain, a) - sign_variations(chain, mid)
        stack.append((a, mid, nl))
        stack.append((mid, b, n - nl))
    roots.sort()
    return [(r, 1) for r in roots]


def real_roots_in_unit_interval(p, open_interval=True):
    """Real roots of p inside (0,1) (or [0,1] when open_interval=False)."""
    eps = 1e-12
    out = [r for r, _ in isolate_real_roots(p)]
    if open_interval:
        return [r for r in out if eps < r < 1.0 - eps]
    return [r for r in out if -eps <= r <= 1.0 + eps]


def min_on_unit_interval(p):
    """Minimum of p over [0,1] using exact critical points."""
    dp = trim(pder(p))
    best = min(peval(p, 0.0), peval(p, 1.0))
    for r, _ in isolate_real_roots(dp):
        if 0.0 < r < 1.0:
            best = min(best, peval(p, r))
    return best
