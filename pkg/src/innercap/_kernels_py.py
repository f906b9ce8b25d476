"""Pure-Python kernel lane.

Every function here has a compiled twin in ``_kernels_c`` with identical
semantics, down to the bit pattern of the results: both lanes perform the
same IEEE-754 operations in the same order and use ``nextafter`` nudges for
outward rounding.  ``innercap.kernels`` picks one lane at import time.

Rounding contract: a result interval always encloses the exact real result.
Endpoints produced by +, -, *, / are widened by one ulp; sine and cosine
endpoints by two ulps (libm trig is faithful to about 1 ulp, not correctly
rounded).  Exact zeros are preserved where that is provably sound: a
rounded sum of two doubles that equals zero is exact, and a product is an
exact zero only when an operand is zero (a mere zero-valued product may
have underflowed and is still nudged).
"""
from __future__ import annotations

import math

import numpy as np

BACKEND = "python"

_INF = math.inf
_PI = math.pi
_TWO_PI = 2.0 * math.pi
_HALF_PI = math.pi / 2.0


def next_down(x: float) -> float:
    return math.nextafter(x, -_INF)


def next_up(x: float) -> float:
    return math.nextafter(x, _INF)


def add_down(a: float, b: float) -> float:
    s = a + b
    if s == 0.0:
        return 0.0
    return math.nextafter(s, -_INF)


def add_up(a: float, b: float) -> float:
    s = a + b
    if s == 0.0:
        return 0.0
    return math.nextafter(s, _INF)


def sub_down(a: float, b: float) -> float:
    s = a - b
    if s == 0.0:
        return 0.0
    return math.nextafter(s, -_INF)


def sub_up(a: float, b: float) -> float:
    s = a - b
    if s == 0.0:
        return 0.0
    return math.nextafter(s, _INF)


def mul_down(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    return math.nextafter(a * b, -_INF)


def mul_up(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    return math.nextafter(a * b, _INF)


def div_down(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    return math.nextafter(a / b, -_INF)


def div_up(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    return math.nextafter(a / b, _INF)


def sqrt_down(a: float) -> float:
    if a == 0.0:
        return 0.0
    return math.nextafter(math.sqrt(a), -_INF)


def sqrt_up(a: float) -> float:
    if a == 0.0:
        return 0.0
    return math.nextafter(math.sqrt(a), _INF)


# ---------------------------------------------------------------------------
# scalar interval primitives: (lo, hi) endpoints in, (lo, hi) tuple out
# ---------------------------------------------------------------------------

def iadd(alo, ahi, blo, bhi):
    return add_down(alo, blo), add_up(ahi, bhi)


def isub(alo, ahi, blo, bhi):
    return sub_down(alo, bhi), sub_up(ahi, blo)


def imul(alo, ahi, blo, bhi):
    if (alo == 0.0 and ahi == 0.0) or (blo == 0.0 and bhi == 0.0):
        return 0.0, 0.0
    p1 = alo * blo
    p2 = alo * bhi
    p3 = ahi * blo
    p4 = ahi * bhi
    lo = p1
    if p2 < lo:
        lo = p2
    if p3 < lo:
        lo = p3
    if p4 < lo:
        lo = p4
    hi = p1
    if p2 > hi:
        hi = p2
    if p3 > hi:
        hi = p3
    if p4 > hi:
        hi = p4
    return next_down(lo), next_up(hi)


def idiv(alo, ahi, blo, bhi):
    # caller guarantees 0 is not in [blo, bhi]
    if alo == 0.0 and ahi == 0.0:
        return 0.0, 0.0
    q1 = alo / blo
    q2 = alo / bhi
    q3 = ahi / blo
    q4 = ahi / bhi
    lo = q1
    if q2 < lo:
        lo = q2
    if q3 < lo:
        lo = q3
    if q4 < lo:
        lo = q4
    hi = q1
    if q2 > hi:
        hi = q2
    if q3 > hi:
        hi = q3
    if q4 > hi:
        hi = q4
    return next_down(lo), next_up(hi)


def isq(alo, ahi):
    """Range of x*x over [alo, ahi] (tighter than imul of x with itself)."""
    aa = -alo if alo < 0.0 else alo
    ab = -ahi if ahi < 0.0 else ahi
    big = aa if aa > ab else ab
    if big == 0.0:
        return 0.0, 0.0
    if alo <= 0.0 <= ahi:
        small = 0.0
    else:
        small = ab if aa > ab else aa
    lo = 0.0 if small == 0.0 else next_down(small * small)
    if lo < 0.0:
        lo = 0.0
    return lo, next_up(big * big)


def _wide2_down(x: float) -> float:
    return math.nextafter(math.nextafter(x, -_INF), -_INF)


def _wide2_up(x: float) -> float:
    return math.nextafter(math.nextafter(x, _INF), _INF)


def isin(alo, ahi):
    slo = math.sin(alo)
    shi = math.sin(ahi)
    lo = slo if slo < shi else shi
    hi = slo if slo > shi else shi
    lo = _wide2_down(lo)
    hi = _wide2_up(hi)
    # sin attains +1 at pi/2 + 2k*pi and -1 at -pi/2 + 2k*pi
    k = math.ceil((alo - _HALF_PI) / _TWO_PI)
    if _HALF_PI + _TWO_PI * k <= ahi:
        hi = 1.0
    k = math.ceil((alo + _HALF_PI) / _TWO_PI)
    if -_HALF_PI + _TWO_PI * k <= ahi:
        lo = -1.0
    if lo < -1.0:
        lo = -1.0
    if hi > 1.0:
        hi = 1.0
    return lo, hi


def icos(alo, ahi):
    clo = math.cos(alo)
    chi = math.cos(ahi)
    lo = clo if clo < chi else chi
    hi = clo if clo > chi else chi
    lo = _wide2_down(lo)
    hi = _wide2_up(hi)
    # cos attains +1 at 2k*pi and -1 at pi + 2k*pi
    k = math.ceil(alo / _TWO_PI)
    if _TWO_PI * k <= ahi:
        hi = 1.0
    k = math.ceil((alo - _PI) / _TWO_PI)
    if _PI + _TWO_PI * k <= ahi:
        lo = -1.0
    if lo < -1.0:
        lo = -1.0
    if hi > 1.0:
        hi = 1.0
    return lo, hi


# ---------------------------------------------------------------------------
# array kernels (row-major float64 numpy arrays)
# ---------------------------------------------------------------------------

def _nudge_arr(x, direction):
    out = np.nextafter(x, direction)
    out[x == 0.0] = 0.0
    return out


def ew_add(alo, ahi, blo, bhi):
    return _nudge_arr(alo + blo, -_INF), _nudge_arr(ahi + bhi, _INF)


def ew_sub(alo, ahi, blo, bhi):
    return _nudge_arr(alo - bhi, -_INF), _nudge_arr(ahi - blo, _INF)


def ew_mul(alo, ahi, blo, bhi):
    alo = np.asarray(alo, dtype=float)
    ahi = np.asarray(ahi, dtype=float)
    blo = np.asarray(blo, dtype=float)
    bhi = np.asarray(bhi, dtype=float)
    p1 = alo * blo
    p2 = alo * bhi
    p3 = ahi * blo
    p4 = ahi * bhi
    lo = np.nextafter(np.minimum(np.minimum(p1, p2), np.minimum(p3, p4)), -_INF)
    hi = np.nextafter(np.maximum(np.maximum(p1, p2), np.maximum(p3, p4)), _INF)
    zero = ((alo == 0.0) & (ahi == 0.0)) | ((blo == 0.0) & (bhi == 0.0))
    if np.any(zero):
        lo = np.where(zero, 0.0, lo)
        hi = np.where(zero, 0.0, hi)
    return lo, hi


def mat_vec(alo, ahi, xlo, xhi):
    """Interval matrix (m x n) times interval vector (n).

    Accumulates over columns in index order with an outward nudge after
    every addition; exactly-zero vector entries are skipped so they leave
    no rounding residue.  Both lanes produce identical bits.
    """
    m, n = alo.shape
    rlo = np.zeros(m)
    rhi = np.zeros(m)
    for j in range(n):
        if xlo[j] == 0.0 and xhi[j] == 0.0:
            continue
        plo, phi = ew_mul(alo[:, j], ahi[:, j], xlo[j], xhi[j])
        rlo = _nudge_arr(rlo + plo, -_INF)
        rhi = _nudge_arr(rhi + phi, _INF)
    return rlo, rhi


def mat_mat(alo, ahi, blo, bhi):
    m, k = alo.shape
    _, n = blo.shape
    rlo = np.zeros((m, n))
    rhi = np.zeros((m, n))
    for t in range(k):
        plo, phi = ew_mul(alo[:, t:t + 1], ahi[:, t:t + 1], blo[t], bhi[t])
        rlo = _nudge_arr(rlo + plo, -_INF)
        rhi = _nudge_arr(rhi + phi, _INF)
    return rlo, rhi


def dot_range(rlo, rhi, x):
    """Range of the dot product of an interval row with a point vector."""
    lo = 0.0
    hi = 0.0
    for j in range(len(x)):
        xj = x[j]
        if xj == 0.0:
            continue
        p1 = rlo[j] * xj
        p2 = rhi[j] * xj
        if p1 > p2:
            p1, p2 = p2, p1
        lo = add_down(lo, next_down(p1) if p1 != 0.0 else 0.0)
        hi = add_up(hi, next_up(p2) if p2 != 0.0 else 0.0)
    return lo, hi


def sigma_cube_radius(alo, ahi, blo, bhi, c):
    """Certified radius of the largest axis-aligned box centered at c that
    the tolerance set of [A] x = [b] contains.

    Row i contributes min(inf([a_i] c) - b_i.lo, b_i.hi - sup([a_i] c))
    divided by the supremum 1-norm of the row; downward rounding keeps the
    minimum a valid inner radius.  A negative return means c is outside.
    """
    m, n = alo.shape
    best = _INF
    for i in range(m):
        tlo, thi = dot_range(alo[i], ahi[i], c)
        num1 = sub_down(tlo, blo[i])
        num2 = sub_down(bhi[i], thi)
        num = num1 if num1 < num2 else num2
        den = 0.0
        for j in range(n):
            aa = -alo[i, j] if alo[i, j] < 0.0 else alo[i, j]
            ab = -ahi[i, j] if ahi[i, j] < 0.0 else ahi[i, j]
            mg = aa if aa > ab else ab
            if mg != 0.0:
                den = add_up(den, mg)
        if den == 0.0:
            if num < 0.0:
                return num
            continue
        r = div_down(num, den)
        if r < best:
            best = r
    return best


def _row_vertex_min(rlo, rhi, c, bound, sign, free, fixed):
    """Minimum over row vertices of (bound - a.c)/||a|| (sign < 0) or
    (a.c + bound)/||a|| (sign > 0), rounded down."""
    nfree = len(free)
    a = fixed.copy()
    best = _INF
    for mask in range(1 << nfree):
        for t in range(nfree):
            j = free[t]
            a[j] = rhi[j] if (mask >> t) & 1 else rlo[j]
        lo = 0.0
        hi = 0.0
        nrm2 = 0.0
        for j in range(len(a)):
            aj = a[j]
            if aj != 0.0:
                nrm2 = add_up(nrm2, mul_up(aj, aj))
                cj = c[j]
                if cj != 0.0:
                    p = aj * cj
                    lo = add_down(lo, next_down(p))
                    hi = add_up(hi, next_up(p))
        num = sub_down(bound, hi) if sign < 0 else add_down(lo, bound)
        nrm = sqrt_up(nrm2)
        if nrm == 0.0:
            if num < 0.0:
                return num
            continue
        r = div_down(num, nrm)
        if r < best:
            best = r
    return best


def sigma_ball_radius(alo, ahi, blo, bhi, c, exact=True):
    """Certified radius of the largest ball centered at c inside the
    tolerance set of [A] x = [b].

    With ``exact`` the per-row infima are taken over the row's interval
    vertices (where the minimum is attained); sign conditions on c and on
    the row entries fix most coordinates before enumerating the rest.
    Without it a one-shot interval evaluation gives a cheaper, possibly
    smaller radius.  Negative return means c lies outside.
    """
    m, n = alo.shape
    best = _INF
    for i in range(m):
        rlo = alo[i]
        rhi = ahi[i]
        if exact:
            # upper side: minimize (b_hi - a.c)/||a||
            free1 = []
            fixed1 = np.empty(n)
            for j in range(n):
                if c[j] >= 0.0 and rlo[j] >= 0.0:
                    fixed1[j] = rhi[j]
                elif c[j] <= 0.0 and rhi[j] <= 0.0:
                    fixed1[j] = rlo[j]
                else:
                    fixed1[j] = 0.0
                    free1.append(j)
            r1 = _row_vertex_min(rlo, rhi, c, bhi[i], -1, free1, fixed1)
            # lower side: minimize (a.c - b_lo)/||a||
            free2 = []
            fixed2 = np.empty(n)
            for j in range(n):
                if c[j] <= 0.0 and rlo[j] >= 0.0:
                    fixed2[j] = rhi[j]
                elif c[j] >= 0.0 and rhi[j] <= 0.0:
                    fixed2[j] = rlo[j]
                else:
                    fixed2[j] = 0.0
                    free2.append(j)
            r2 = _row_vertex_min(rlo, rhi, c, -blo[i], 1, free2, fixed2)
        else:
            tlo, thi = dot_range(rlo, rhi, c)
            nrm2 = 0.0
            for j in range(n):
                aa = -rlo[j] if rlo[j] < 0.0 else rlo[j]
                ab = -rhi[j] if rhi[j] < 0.0 else rhi[j]
                mg = aa if aa > ab else ab
                if mg != 0.0:
                    nrm2 = add_up(nrm2, mul_up(mg, mg))
            nrm = sqrt_up(nrm2)
            num1 = sub_down(bhi[i], thi)
            num2 = sub_down(tlo, blo[i])
            if nrm == 0.0:
                num = num1 if num1 < num2 else num2
                if num < 0.0:
                    return num
                continue
            r1 = div_down(num1, nrm)
            r2 = div_down(num2, nrm)
        r = r1 if r1 < r2 else r2
        if r < best:
            best = r
    return best
