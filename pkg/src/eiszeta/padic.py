"""Capped-precision arithmetic in Q_p.

A value is stored as ``unit * p^valuation`` with the unit carried to a bounded
number of base-p digits (its relative precision), so every number knows how
much of itself is trustworthy.  Absolute precision means "known modulo p^A".
A value indistinguishable from zero is kept as an explicit zero-to-precision
marker carrying the modulus exponent to which it is known to vanish; it is
never silently promoted to an exact zero, because downstream zero/nonzero
verdicts must stay precision-qualified.

Precision propagation:

* add/sub: absolute precisions meet (min); cancellation surfaces as a higher
  valuation with correspondingly fewer unit digits.
* mul/div: valuations add/subtract, relative precisions meet.

Relative precision is capped at the context's working precision N, so a unit
is always reduced modulo p^N at most.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import re

from .primes import is_prime

__all__ = [
    "PadicContext",
    "PadicNumber",
    "ContextMismatchError",
    "teichmuller",
    "one_unit_part",
    "log_one_unit",
    "exp_small",
    "pow_zp",
    "format_padic",
    "parse_padic",
    "agreement_precision",
]


class ContextMismatchError(ValueError):
    """Operands live in incompatible p-adic contexts."""


class PadicContext:
    """An odd prime p together with a working precision N (digits carried)."""

    __slots__ = ("p", "precision")

    def __init__(self, p: int, precision: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p < 3:
            raise ValueError("p = 2 is not supported; only odd primes")
        if not isinstance(precision, int) or precision < 1:
            raise ValueError("precision must be a positive integer")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("PadicContext is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PadicContext)
            and self.p == other.p
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash((self.p, self.precision))

    def __repr__(self):
        return f"PadicContext(p={self.p}, precision={self.precision})"

    def zero(self, abs_prec: int | None = None) -> "PadicNumber":
        return PadicNumber._zero(self, self.precision if abs_prec is None else abs_prec)

    def one(self) -> "PadicNumber":
        return PadicNumber.from_int(1, self)

    def from_int(self, x: int) -> "PadicNumber":
        return PadicNumber.from_int(x, self)

    def from_rational(self, x) -> "PadicNumber":
        return PadicNumber.from_rational(x, self)


def _vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicNumber:
    """Immutable element of Q_p known to a definite absolute precision.

    Nonzero state: ``_unit * p^_val`` with ``_unit`` coprime to p, reduced
    modulo p^_rel (1 <= _rel <= N).  Zero state: ``_unit is None`` and
    ``_val`` holds the exponent A with the value known to lie in p^A Z_p.
    """

    __slots__ = ("ctx", "_val", "_unit", "_rel")

    def __init__(self, *args, **kwargs):
        raise TypeError("use PadicNumber.from_int / from_rational / ctx.zero")

    # -- construction ------------------------------------------------------

    @classmethod
    def _raw(cls, ctx, val, unit, rel):
        self = object.__new__(cls)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_val", val)
        object.__setattr__(self, "_unit", unit)
        object.__setattr__(self, "_rel", rel)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("PadicNumber is immutable")

    @classmethod
    def _zero(cls, ctx, abs_prec: int) -> "PadicNumber":
        if abs_prec < 1:
            raise ValueError("a zero-to-precision value needs a positive modulus exponent")
        return cls._raw(ctx, abs_prec, None, 0)

    @classmethod
    def _make(cls, ctx, val: int, unit: int, rel: int) -> "PadicNumber":
        """Normalize (val, unit, rel) into canonical form, demoting to zero
        when no unit digit survives."""
        p = ctx.p
        rel = min(rel, ctx.precision)
        if rel <= 0:
            # no digits survive: all that remains is the valuation bound
            if val < 1:
                raise ValueError("value carries no usable precision")
            return cls._zero(ctx, val)
        unit %= p**rel
        if unit == 0:
            return cls._zero(ctx, val + rel)
        shift = _vp(unit, p)
        if shift:
            unit //= p**shift
            val += shift
            rel -= shift
        return cls._raw(ctx, val, unit, rel)

    @classmethod
    def from_int(cls, x: int, ctx: PadicContext) -> "PadicNumber":
        if x == 0:
            return cls._zero(ctx, ctx.precision)
        v = _vp(abs(x), ctx.p)
        return cls._make(ctx, v, x // ctx.p**v, ctx.precision)

    @classmethod
    def from_rational(cls, x, ctx: PadicContext) -> "PadicNumber":
        x = Fraction(x)
        if x == 0:
            return cls._zero(ctx, ctx.precision)
        num, den = x.numerator, x.denominator
        vn = _vp(abs(num), ctx.p)
        vd = _vp(den, ctx.p)
        num //= ctx.p**vn
        den //= ctx.p**vd
        rel = ctx.precision
        unit = num * pow(den, -1, ctx.p**rel)
        return cls._make(ctx, vn - vd, unit, rel)

    # -- state -------------------------------------------------------------

    @property
    def is_zero_to_precision(self) -> bool:
        return self._unit is None

    @property
    def valuation(self):
        """Exact valuation for a nonzero value; None when only a lower bound
        (the absolute precision) is known."""
        return None if self._unit is None else self._val

    @property
    def min_valuation(self) -> int:
        """Best known lower bound on the valuation."""
        return self._val

    @property
    def unit(self):
        return self._unit

    @property
    def rel_precision(self) -> int:
        return self._rel

    @property
    def abs_precision(self) -> int:
        """The value is known modulo p^abs_precision."""
        return self._val + self._rel

    def digits(self) -> list[int]:
        """Base-p digits of the unit, least significant first (empty for zero)."""
        if self._unit is None:
            return []
        out, u, p = [], self._unit, self.ctx.p
        for _ in range(self._rel):
            u, d = divmod(u, p)
            out.append(d)
        return out

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return PadicNumber.from_rational(other, self.ctx)
        return None

    def _check_ctx(self, other: "PadicNumber"):
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                f"operands belong to different contexts: {self.ctx} vs {other.ctx}"
            )

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_ctx(other)
        a, b = self, other
        if a._unit is None and b._unit is None:
            return PadicNumber._zero(a.ctx, min(a._val, b._val))
        if a._unit is None:
            a, b = b, a
        if b._unit is None:
            bound = b._val  # b in p^bound Z_p
            if a._val >= bound:
                return PadicNumber._zero(a.ctx, bound)
            return PadicNumber._make(a.ctx, a._val, a._unit, min(a.abs_precision, bound) - a._val)
        absprec = min(a.abs_precision, b.abs_precision)
        base = min(a._val, b._val)
        rep = a._unit * a.ctx.p ** (a._val - base) + b._unit * a.ctx.p ** (b._val - base)
        return PadicNumber._make(a.ctx, base, rep, absprec - base)

    __radd__ = __add__

    def __neg__(self):
        if self._unit is None:
            return self
        return PadicNumber._raw(self.ctx, self._val, self.ctx.p**self._rel - self._unit, self._rel)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_ctx(other)
        a, b = self, other
        if a._unit is None or b._unit is None:
            return PadicNumber._zero(a.ctx, a._val + b._val)
        rel = min(a._rel, b._rel)
        return PadicNumber._make(a.ctx, a._val + b._val, a._unit * b._unit, rel)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_ctx(other)
        if other._unit is None:
            raise ZeroDivisionError(
                f"division by a value indistinguishable from zero modulo p^{other._val}"
            )
        if self._unit is None:
            bound = self._val - other._val
            if bound < 1:
                raise ArithmeticError("quotient has no surviving precision")
            return PadicNumber._zero(self.ctx, bound)
        rel = min(self._rel, other._rel)
        inv = pow(other._unit, -1, self.ctx.p**rel)
        return PadicNumber._make(self.ctx, self._val - other._val, self._unit * inv, rel)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e == 0:
            return PadicNumber.from_int(1, self.ctx)
        if self._unit is None:
            if e < 0:
                raise ZeroDivisionError("negative power of a zero-to-precision value")
            return PadicNumber._zero(self.ctx, self._val * e)
        if e < 0:
            return (PadicNumber.from_int(1, self.ctx) / self) ** (-e)
        mod = self.ctx.p**self._rel
        return PadicNumber._make(self.ctx, self._val * e, pow(self._unit, e, mod), self._rel)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ctx.p != other.ctx.p:
            raise ContextMismatchError("cannot compare values for different primes")
        return _congruent(self, other)

    __hash__ = None  # equality is precision-dependent

    def __repr__(self):
        return f"PadicNumber({format_padic(self)})"

    # -- conversions -------------------------------------------------------

    def restrict(self, ctx: PadicContext) -> "PadicNumber":
        """Reinterpret in a context with the same p and lower working precision."""
        if ctx.p != self.ctx.p:
            raise ContextMismatchError("restrict requires the same prime")
        if ctx.precision > self.ctx.precision:
            raise ValueError("cannot restrict to a finer precision than carried")
        if self._unit is None:
            return PadicNumber._zero(ctx, min(self._val, ctx.precision))
        return PadicNumber._make(ctx, self._val, self._unit, self._rel)

    def cap_absolute(self, absprec: int) -> "PadicNumber":
        """Forget digits beyond p^absprec (no-op when already coarser)."""
        if self._unit is None:
            return self if self._val <= absprec else PadicNumber._zero(self.ctx, absprec)
        if self.abs_precision <= absprec:
            return self
        return PadicNumber._make(self.ctx, self._val, self._unit, absprec - self._val)

    def integer_representative(self) -> int:
        """Smallest nonnegative representative, defined for p-adic integers."""
        if self._unit is None:
            return 0
        if self._val < 0:
            raise ValueError("value has negative valuation")
        return self._unit * self.ctx.p**self._val


def _congruent(a: PadicNumber, b: PadicNumber) -> bool:
    """a == b modulo p^min(abs precisions); primes must already agree."""
    p = a.ctx.p
    absprec = min(a.abs_precision, b.abs_precision)
    if a._unit is None and b._unit is None:
        return True
    if a._unit is None or b._unit is None:
        x = b if a._unit is None else a
        return x._val >= absprec
    base = min(a._val, b._val)
    if absprec - base < 1:
        return True
    rep = a._unit * p ** (a._val - base) - b._unit * p ** (b._val - base)
    return rep % p ** (absprec - base) == 0


def agreement_precision(a: PadicNumber, b: PadicNumber) -> int:
    """Exponent A such that a == b mod p^A: the shared absolute precision when
    they agree, otherwise the valuation of the difference."""
    p = a.ctx.p
    if a.ctx.p != b.ctx.p:
        raise ContextMismatchError("agreement requires the same prime")
    absprec = min(a.abs_precision, b.abs_precision)
    if a._unit is None and b._unit is None:
        return absprec
    if a._unit is None or b._unit is None:
        x = b if a._unit is None else a
        return absprec if x._val >= absprec else x._val
    base = min(a._val, b._val)
    rep = a._unit * p ** (a._val - base) - b._unit * p ** (b._val - base)
    mod = p ** max(absprec - base, 0)
    rep = rep % mod if mod > 1 else 0
    if rep == 0:
        return absprec
    return base + _vp(rep, p)


# -- Teichmuller lift and one-unit functions -------------------------------


@lru_cache(maxsize=None)
def _teich_unit(p: int, precision: int, a: int) -> int:
    """The (p-1)-th root of unity congruent to a mod p, as an integer mod p^N.

    Iterating x -> x^p gains at least one correct digit per step, so N
    iterations reach the fixed point exactly."""
    mod = p**precision
    x = a % mod
    for _ in range(precision):
        y = pow(x, p, mod)
        if y == x:
            break
        x = y
    return x


def teichmuller(a: int, ctx: PadicContext) -> PadicNumber:
    """Teichmuller lift omega(a) for an integer a coprime to p."""
    if a % ctx.p == 0:
        raise ValueError(f"{a} is divisible by p = {ctx.p}; no Teichmuller lift")
    u = _teich_unit(ctx.p, ctx.precision, a % ctx.p)
    return PadicNumber._make(ctx, 0, u, ctx.precision)


def one_unit_part(x: PadicNumber) -> PadicNumber:
    """For a unit x, the factor <x> = x / omega(x mod p), congruent to 1 mod p."""
    if x.is_zero_to_precision or x.valuation != 0:
        raise ValueError("one_unit_part is defined for units (valuation 0)")
    return x / teichmuller(x.unit % x.ctx.p, x.ctx)


def log_one_unit(u: PadicNumber) -> PadicNumber:
    """p-adic logarithm of a one-unit, by the alternating series in z = u - 1.

    Truncation: term n is z^n/n with valuation >= n*v(z) - v_p(n); this grows
    strictly, so the series stops once the next index already clears the
    working precision.  Result has valuation >= v(z) >= 1.
    """
    z = u - PadicNumber.from_int(1, u.ctx)
    if z.is_zero_to_precision:
        return z
    if z.valuation < 1:
        raise ValueError("log_one_unit needs u = 1 mod p")
    ctx = u.ctx
    N, p = ctx.precision, ctx.p
    vz = z.valuation
    total = z
    zpow = z
    n = 1
    while True:
        nxt = n + 1
        # floor(log_p(nxt)) bounds v_p(m) for every m >= nxt up to the next power
        bound = nxt * vz - _floor_log(nxt, p)
        if bound >= N:
            break
        n = nxt
        zpow = zpow * z
        term = zpow / PadicNumber.from_int(n, ctx)
        if n % 2 == 0:
            term = -term
        total = total + term
    return total


def _floor_log(n: int, p: int) -> int:
    e = 0
    while p**(e + 1) <= n:
        e += 1
    return e


def exp_small(x: PadicNumber) -> PadicNumber:
    """p-adic exponential for v(x) >= 1 (convergent since p >= 3).

    Truncation: term n is x^n/n! with valuation >= n*v(x) - (n-1)/(p-1),
    strictly increasing, so summation stops once the next index clears the
    working precision.
    """
    ctx = x.ctx
    one = PadicNumber.from_int(1, ctx)
    if x.is_zero_to_precision:
        return PadicNumber._make(ctx, 0, 1, min(x.min_valuation, ctx.precision))
    if x.valuation < 1:
        raise ValueError("exp_small needs v(x) >= 1")
    N, p = ctx.precision, ctx.p
    vx = x.valuation
    total = one + x
    term = x
    n = 1
    while True:
        nxt = n + 1
        # (nxt * vx - n/(p-1)) >= N, checked in integers
        if (nxt * vx) * (p - 1) - n >= N * (p - 1):
            break
        n = nxt
        term = term * x / PadicNumber.from_int(n, ctx)
        total = total + term
    return total


def pow_zp(u: PadicNumber, s) -> PadicNumber:
    """<u>^s = exp(s*log u) for a one-unit u and a p-adic integer exponent s."""
    if isinstance(s, (int, Fraction)):
        s = PadicNumber.from_rational(s, u.ctx)
    if not s.is_zero_to_precision and s.valuation < 0:
        raise ValueError("exponent must be a p-adic integer")
    return exp_small(s * log_one_unit(u))


# -- textual form ----------------------------------------------------------


def format_padic(x: PadicNumber) -> str:
    """Render as a base-p digit expansion with an O(p^A) tail marker, e.g.
    ``3 + 1*5 + 2*5^3 + O(5^20)``.  Zero digits are omitted; a bare marker
    means zero to that precision."""
    p = x.ctx.p
    parts = []
    if not x.is_zero_to_precision:
        for offset, d in enumerate(x.digits()):
            if d == 0:
                continue
            e = x.valuation + offset
            if e == 0:
                parts.append(str(d))
            elif e == 1:
                parts.append(f"{d}*{p}")
            else:
                parts.append(f"{d}*{p}^{e}")
    parts.append(f"O({p}^{x.abs_precision})")
    return " + ".join(parts)


_TERM_RE = re.compile(r"^(\d+)(?:\*(\d+)(?:\^(-?\d+))?)?$")
_TAIL_RE = re.compile(r"^O\((\d+)\^(-?\d+)\)$")


def parse_padic(text: str, ctx: PadicContext) -> PadicNumber:
    """Inverse of :func:`format_padic` (exact round trip)."""
    chunks = [c.strip() for c in text.split("+")]
    if not chunks:
        raise ValueError("empty p-adic literal")
    tail = _TAIL_RE.match(chunks[-1])
    if not tail:
        raise ValueError(f"missing O(p^A) tail marker in {text!r}")
    if int(tail.group(1)) != ctx.p:
        raise ValueError("literal was written for a different prime")
    absprec = int(tail.group(2))
    terms = []
    for chunk in chunks[:-1]:
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad term {chunk!r}")
        d = int(m.group(1))
        if m.group(2) is None:
            e = 0
        else:
            if int(m.group(2)) != ctx.p:
                raise ValueError("literal was written for a different prime")
            e = int(m.group(3)) if m.group(3) is not None else 1
        terms.append((e, d))
    if not terms:
        return PadicNumber._zero(ctx, absprec)
    v = min(e for e, _ in terms)
    unit = sum(d * ctx.p ** (e - v) for e, d in terms)
    return PadicNumber._make(ctx, v, unit, absprec - v)
