"""Exact rational scalars and truncated Laurent series.

All identity checks in this package compare values with exact equality, so the
ground field is the rationals (gmpy2.mpq when available, fractions.Fraction
otherwise).  Limits and residues are computed in a truncated Laurent series
ring over that field.  Series can be nested (a series whose coefficients are
themselves series of a lower ``level``), which is how sequential multi-variable
limits are evaluated one infinitesimal at a time.
"""

from __future__ import annotations

import math
import re

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

__all__ = [
    "Rat",
    "ExactError",
    "PoleError",
    "WindowError",
    "SingularPartError",
    "scalar_parse",
    "scalar_format",
    "LaurentSeries",
    "eps",
    "laurent_from_scalar",
    "take_limit",
]

# Number of series terms computed when inverting a multi-term unit.
INVERT_TERMS = 8

_INF = math.inf

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class ExactError(ArithmeticError):
    """Base class for exact-arithmetic failures."""


class PoleError(ExactError):
    """A denominator vanished where the formula requires it nonzero."""


class WindowError(ExactError):
    """A series order outside the reliable truncation window was requested."""


class SingularPartError(ExactError):
    """A limit was taken of a series with a non-vanishing singular part."""


def scalar_parse(text):
    """Parse ``p`` or ``p/q`` into an exact rational (canonical form)."""
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in rational literal: {text!r}")
    return Rat(num, den)


def scalar_format(value):
    """Render an exact rational as ``p`` or ``p/q`` with q > 0."""
    r = Rat(value)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def _is_series(x):
    return isinstance(x, LaurentSeries)


def _level(x):
    return x.level if _is_series(x) else 0


def _coeff_is_zero(c):
    if _is_series(c):
        return c.is_zero()
    return c == 0


def _coeff_invert(c):
    if _is_series(c):
        return c.invert()
    if c == 0:
        raise PoleError("division by zero coefficient")
    return Rat(1) / c


class LaurentSeries:
    """Truncated Laurent series sum_{k>=valuation} c_k eps^k.

    ``order`` is the first unreliable power (may be ``inf`` for exact
    polynomials); coefficients below ``valuation`` are exactly zero.
    ``level`` orders nested infinitesimals: a higher-level series treats any
    lower-level value (including plain rationals, level 0) as a constant
    coefficient.  The higher-level infinitesimal is the one that tends to zero
    first, so sequential limits peel levels from the top down.
    """

    __slots__ = ("level", "valuation", "coeffs", "order")

    def __init__(self, valuation, coeffs, order=_INF, level=1):
        if level < 1:
            raise ValueError("series level must be >= 1")
        self.level = level
        self.valuation = valuation
        self.coeffs = tuple(coeffs)
        self.order = order
        self._trim()

    def _trim(self):
        v, cs, o = self.valuation, list(self.coeffs), self.order
        # drop coefficients at or above the reliability bound
        if o is not _INF:
            keep = max(0, int(o) - v)
            cs = cs[:keep]
        while cs and _coeff_is_zero(cs[0]):
            cs.pop(0)
            v += 1
        while cs and _coeff_is_zero(cs[-1]):
            cs.pop()
        self.valuation = v
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, level=1):
        return cls(0, (), _INF, level)

    @classmethod
    def constant(cls, value, level=1):
        return cls(0, (value,), _INF, level)

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_exact(self):
        return self.order is _INF

    # -- coefficient access ---------------------------------------------

    def coeff(self, k):
        """Coefficient of eps^k; raises WindowError above the retained window."""
        if k >= self.order:
            raise WindowError(f"order {k} not retained (reliable below {self.order})")
        if k < self.valuation or k >= self.valuation + len(self.coeffs):
            return Rat(0)
        return self.coeffs[k - self.valuation]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        """Lift ``other`` to a constant series of this level, or None."""
        lo = _level(other)
        if lo == self.level:
            return other
        if lo < self.level:
            if _is_series(other) and other.is_zero():
                return LaurentSeries.zero(self.level)
            if not _is_series(other) and other == 0:
                return LaurentSeries.zero(self.level)
            return LaurentSeries.constant(other, self.level)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return other + self
        a = self
        order = min(a.order, b.order)
        if a.is_zero():
            return LaurentSeries(b.valuation, b.coeffs, order, b.level)
        if b.is_zero():
            return LaurentSeries(a.valuation, a.coeffs, order, a.level)
        lo = min(a.valuation, b.valuation)
        hi = max(a.valuation + len(a.coeffs), b.valuation + len(b.coeffs))
        if order is not _INF:
            hi = min(hi, int(order))
        cs = []
        for k in range(lo, hi):
            ca = a.coeffs[k - a.valuation] if a.valuation <= k < a.valuation + len(a.coeffs) else Rat(0)
            cb = b.coeffs[k - b.valuation] if b.valuation <= k < b.valuation + len(b.coeffs) else Rat(0)
            cs.append(ca + cb)
        return LaurentSeries(lo, cs, order, self.level)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.valuation, tuple(-c for c in self.coeffs), self.order, self.level)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return other * self
        a = self
        if a.is_zero() or b.is_zero():
            return LaurentSeries.zero(self.level)
        order = min(
            a.valuation + b.order if b.order is not _INF else _INF,
            b.valuation + a.order if a.order is not _INF else _INF,
        )
        v = a.valuation + b.valuation
        n = len(a.coeffs) + len(b.coeffs) - 1
        if order is not _INF:
            n = min(n, int(order) - v)
        cs = [Rat(0)] * n
        for i, ca in enumerate(a.coeffs):
            if _coeff_is_zero(ca):
                continue
            for j, cb in enumerate(b.coeffs):
                if i + j < n:
                    cs[i + j] = cs[i + j] + ca * cb
        return LaurentSeries(v, cs, order, self.level)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse up to the reliable window."""
        if self.is_zero():
            if self.is_exact():
                raise PoleError("division by exact zero series")
            raise WindowError("non-invertible at this truncation (all retained coefficients zero)")
        v = self.valuation
        cs = self.coeffs
        if self.order is _INF:
            m = _INF if len(cs) == 1 else max(len(cs), INVERT_TERMS)
        else:
            m = int(self.order) - v
        c0inv = _coeff_invert(cs[0])
        if m is _INF:
            return LaurentSeries(-v, (c0inv,), _INF, self.level)
        d = [c0inv]
        for k in range(1, m):
            acc = Rat(0)
            for i in range(1, min(k, len(cs) - 1) + 1):
                acc = acc + cs[i] * d[k - i]
            d.append(-(c0inv * acc))
        order = -v + m if self.order is _INF else int(self.order) - 2 * v
        return LaurentSeries(-v, d, order, self.level)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return other.__rtruediv__(self)
        return self * b.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series exponent must be a non-negative integer")
        out = LaurentSeries.constant(Rat(1), self.level)
        for _ in range(n):
            out = out * self
        return out

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        o = min(a.order, b.order)
        lo = min(a.valuation, b.valuation) if (a.coeffs or b.coeffs) else 0
        hi = max(a.valuation + len(a.coeffs), b.valuation + len(b.coeffs))
        if o is not _INF:
            hi = min(hi, int(o))
        for k in range(lo, hi):
            ca = a.coeffs[k - a.valuation] if a.valuation <= k < a.valuation + len(a.coeffs) else Rat(0)
            cb = b.coeffs[k - b.valuation] if b.valuation <= k < b.valuation + len(b.coeffs) else Rat(0)
            if not (ca == cb):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            terms.append(f"({c})*e^{self.valuation + i}")
        body = " + ".join(terms) if terms else "0"
        tail = "" if self.order is _INF else f" + O(e^{self.order})"
        return f"<L{self.level} {body}{tail}>"


def eps(level=1):
    """The infinitesimal of the given nesting level (exactly known)."""
    return LaurentSeries(1, (Rat(1),), _INF, level)


def laurent_from_scalar(c, window=None, level=1):
    """Embed an exact scalar as a constant series.

    ``window`` bounds the reliable order from above; ``None`` keeps the
    embedding exact.
    """
    order = _INF if window is None else window
    if window is not None and window < 1:
        raise ValueError("window must be >= 1")
    return LaurentSeries(0, (Rat(c),), order, level)


def take_limit(value):
    """Send every infinitesimal to zero, outermost level first.

    Fails with SingularPartError if any singular part survives, and with
    WindowError if the constant term is outside a reliable window.
    """
    if not _is_series(value):
        return value
    if value.is_zero():
        if value.order <= 0:
            raise WindowError("constant term not retained in truncated zero series")
        return Rat(0)
    if value.valuation < 0:
        raise SingularPartError(
            f"non-vanishing singular part (valuation {value.valuation}) in limit"
        )
    c0 = value.coeff(0)
    return take_limit(c0)
