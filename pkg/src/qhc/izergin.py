"""Kernel functions f, g and the plain/left/right Izergin determinants.

All evaluators are generic over the scalar ring: arguments may be exact
rationals or (nested) truncated Laurent series, and the same code path serves
plain evaluation and series-based limit/residue evaluation.

The determinant is evaluated in a pole-minimal form.  Pulling the double
product of (q x_i - q^{-1} y_j) into the matrix rows gives entries

    M_ij = (q - q^{-1}) * prod_{j' != j} (q x_i - q^{-1} y_{j'}) / (x_i - y_j),

so only the genuinely singular denominators x_i - y_j and the Cauchy-like
prefactor survive.  This matters because the partition sums evaluate K at
points where some q x_i - q^{-1} y_j vanishes benignly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactnum import LaurentSeries, PoleError, Rat, eps, take_limit
from .params import qshift
from .partitions import enumerate_partitions

__all__ = [
    "Kernel",
    "det",
    "izergin",
    "izergin_left",
    "izergin_right",
    "izergin_side",
    "lemma_partition_sum",
    "mult_pole_limit",
]

_INF = float("inf")


def _is_series(x):
    return isinstance(x, LaurentSeries)


def _is_zero(x):
    return x.is_zero() if _is_series(x) else x == 0


def _val(x):
    """Pivoting key: valuation for series, 0 for nonzero scalars."""
    if _is_series(x):
        return _INF if x.is_zero() else x.valuation
    return _INF if x == 0 else 0


def _div(a, b):
    if not _is_series(b) and b == 0:
        raise PoleError("vanishing denominator")
    return a / b


@dataclass(frozen=True)
class Kernel:
    """The deformation parameter q and the rational kernel functions."""

    q: object
    qinv: object = field(init=False)

    def __post_init__(self):
        q = Rat(self.q)
        if q == 0 or q == 1 or q == -1:
            raise ValueError("q must not be 0, 1, or -1")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "qinv", Rat(1) / q)

    def f(self, u, v):
        return _div(self.q * u - self.qinv * v, u - v)

    def g(self, u, v):
        return _div(self.q - self.qinv, u - v)

    def fprod(self, us, vs):
        """f over all pairs of the two bar-sets; empty product = 1."""
        out = Rat(1)
        for u in us:
            for v in vs:
                out = out * self.f(u, v)
        return out

    def mq(self, e):
        """(-q)^e for integer e of either sign."""
        base = -self.q if e >= 0 else -self.qinv
        out = Rat(1)
        for _ in range(abs(e)):
            out = out * base
        return out

    def usign(self, side):
        """The sign taken by this side in (+-)/(-+) exponents: l is upper."""
        if side not in ("l", "r"):
            raise ValueError(f"side must be 'l' or 'r', got {side!r}")
        return 1 if side == "l" else -1

    def other(self, side):
        return "r" if side == "l" else "l"

    def inverted(self):
        return Kernel(self.qinv)


def det(rows):
    """Determinant by Gaussian elimination, generic over the scalar ring.

    Pivots on the entry of minimal valuation (plain nonzero scalars count as
    valuation 0), which keeps series windows as wide as possible.
    """
    n = len(rows)
    if n == 0:
        return Rat(1)
    m = [list(r) for r in rows]
    sign = 1
    result = Rat(1)
    for k in range(n):
        piv = min(range(k, n), key=lambda i: _val(m[i][k]))
        if _is_zero(m[piv][k]):
            return Rat(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        result = result * pivot
        for i in range(k + 1, n):
            if _is_zero(m[i][k]):
                continue
            factor = _div(m[i][k], pivot)
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - factor * m[k][j]
    return result if sign == 1 else -result


def izergin(kern, xs, ys):
    """K_k(xs|ys); K_0 = 1."""
    k = len(xs)
    if len(ys) != k:
        raise ValueError(f"cardinality mismatch: {k} vs {len(ys)}")
    if k == 0:
        return Rat(1)
    q, qi = kern.q, kern.qinv
    gq = q - qi
    rows = []
    for x in xs:
        factors = [q * x - qi * y for y in ys]
        row = []
        for j, y in enumerate(ys):
            num = gq
            for jp, fct in enumerate(factors):
                if jp != j:
                    num = num * fct
            row.append(_div(num, x - y))
        rows.append(row)
    denom = Rat(1)
    for i in range(k):
        for j in range(i + 1, k):
            denom = denom * (xs[i] - xs[j]) * (ys[j] - ys[i])
    return _div(det(rows), denom)


def izergin_left(kern, xs, ys):
    out = izergin(kern, xs, ys)
    for x in xs:
        out = out * x
    return out


def izergin_right(kern, xs, ys):
    out = izergin(kern, xs, ys)
    for y in ys:
        out = out * y
    return out


def izergin_side(kern, side, xs, ys):
    """K^(l) or K^(r) selected by side."""
    if side == "l":
        return izergin_left(kern, xs, ys)
    if side == "r":
        return izergin_right(kern, xs, ys)
    raise ValueError(f"side must be 'l' or 'r', got {side!r}")


def lemma_partition_sum(kern, side, gamma, alpha, beta):
    """Both sides of the three-set summation identity for K.

    LHS: sum over gamma => {gamma_I, gamma_II} of
    K^(l,r)_{m1}(gamma_I|alpha) K^(r,l)_{m2}(beta|gamma_II) f(gamma_II, gamma_I).
    Returns (lhs, rhs1, rhs2) where rhs1, rhs2 are the two equivalent closed
    forms; all three must be equal.
    """
    m1, m2 = len(alpha), len(beta)
    if len(gamma) != m1 + m2:
        raise ValueError("cardinality mismatch: #gamma must equal #alpha + #beta")
    q = kern.q
    u = kern.usign(side)
    opp = kern.other(side)
    lhs = Rat(0)
    for g1, g2 in enumerate_partitions(gamma, (m1, m2)):
        lhs = lhs + (
            izergin_side(kern, side, g1, alpha)
            * izergin_side(kern, opp, beta, g2)
            * kern.fprod(g2, g1)
        )
    rhs1 = (
        kern.mq(-u * m1)
        * kern.fprod(gamma, alpha)
        * izergin_side(kern, opp, qshift(alpha, -2, q) + tuple(beta), gamma)
    )
    rhs2 = (
        kern.mq(u * m2)
        * kern.fprod(beta, gamma)
        * izergin_side(kern, side, gamma, tuple(alpha) + qshift(beta, 2, q))
    )
    return lhs, rhs1, rhs2


def mult_pole_limit(kern, side, xs, ys, zs):
    """Both sides of the multiple-pole limit for K.

    LHS: lim_{z'->z} f^{-1}(z, z') K^(l,r)_{n+m}({x,z}|{y,z'}) evaluated by
    sequential single-variable series limits (one nested infinitesimal per
    z_j); RHS: f(x,z) f(z,y) K^(l,r)_n(x|y).  Returns (lhs, rhs).
    """
    zprime = tuple(z + eps(level=j + 1) for j, z in enumerate(zs))
    expr = _div(
        izergin_side(kern, side, tuple(xs) + tuple(zs), tuple(ys) + zprime),
        kern.fprod(zs, zprime),
    )
    lhs = take_limit(expr)
    rhs = (
        kern.fprod(xs, zs)
        * kern.fprod(zs, ys)
        * izergin_side(kern, side, xs, ys)
    )
    return lhs, rhs
