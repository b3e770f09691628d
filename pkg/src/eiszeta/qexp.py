"""Truncated q-expansions with Hecke operators, the theta operator, and the
critical / ordinary Eisenstein families.

A critical Eisenstein series of weight k and character eps = omega^i has

    a_0 = 0,  a_1 = 1,  a_(p^r) = p^(r(k-1)),  a_l = eps(l) + l^(k-1)  (l != p),

extended to all indices as a normalized eigenform: the standard prime-power
recursion with nebentypus eps and multiplicativity across coprime indices.
The ordinary series at a weight-space point w has

    a_0 = zeta_p(w)/2,  a_(p^r) = 1,  a_l = 1 + w(l)/l,

with the geometric prime-power values sum_t (w(l)/l)^t.  Negative integer
weights are first class; they carry the ordinary twins of the critical
points, and theta^(k-1) (a_n -> n^(k-1) a_n) maps weight 2-k to weight k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import TeichCharacter
from .kubota import WeightPoint, zeta_weight
from .padic import PadicContext, PadicNumber
from .primes import is_prime, primes_up_to, smallest_prime_factors

__all__ = [
    "QExpansion",
    "eisenstein_critical",
    "eisenstein_ordinary",
    "hecke_Tl",
    "hecke_Up",
    "theta_pow",
    "multiply",
    "verify_eigensystem",
    "theta_twin_check",
    "OperatorCheck",
    "EigenReport",
    "TwinConventionError",
    "TwinCheckReport",
    "dump_lines",
]


class TwinConventionError(RuntimeError):
    """Neither twin-character convention realizes the theta identity; this
    indicates an implementation bug, never a property of the input."""


@dataclass(frozen=True)
class QExpansion:
    """q-series truncated at order M, tagged with weight and nebentypus.

    The weight is an arbitrary integer (twins have weight 2-k <= 0) and the
    character tag is the exponent i of eps = omega^i.
    """

    ctx: PadicContext
    weight: int
    char_exponent: int
    coeffs: tuple[PadicNumber, ...]
    degenerate: bool = False

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> PadicNumber:
        return self.coeffs[n]

    def scale(self, c: PadicNumber) -> "QExpansion":
        return QExpansion(self.ctx, self.weight, self.char_exponent,
                          tuple(c * a for a in self.coeffs))

    def truncate(self, order: int) -> "QExpansion":
        if order >= self.truncation:
            return self
        return QExpansion(self.ctx, self.weight, self.char_exponent,
                          self.coeffs[: order + 1], self.degenerate)

    def first_mismatch(self, other: "QExpansion", start: int = 0) -> int | None:
        """Smallest index where the two expansions disagree at the carried
        precision, over the common truncation; None when they agree."""
        end = min(self.truncation, other.truncation)
        for n in range(start, end + 1):
            if not (self.coeffs[n] == other.coeffs[n]):
                return n
        return None


def _assemble(ctx, weight, char_exponent, M, a0, prime_power):
    """Coefficients from prime-power data by multiplicativity."""
    if M < 1:
        raise ValueError("truncation order must be >= 1")
    one = PadicNumber.from_int(1, ctx)
    coeffs = [a0, one] + [None] * (M - 1)
    spf = smallest_prime_factors(M)
    for n in range(2, M + 1):
        l = spf[n]
        r, m = 0, n
        while m % l == 0:
            m //= l
            r += 1
        alr = prime_power(l, r)
        coeffs[n] = alr if m == 1 else alr * coeffs[m]
    return QExpansion(ctx, weight, char_exponent, tuple(coeffs))


def eisenstein_critical(p: int, k: int, i: int, M: int, ctx: PadicContext) -> QExpansion:
    """The critical Eisenstein eigenform at weight z^k omega^i, truncated at M."""
    w = WeightPoint.classical(p, k, i)
    w.validate_critical()
    if ctx.p != p:
        raise ValueError("context prime differs from p")
    eps = TeichCharacter(p, i)
    one = PadicNumber.from_int(1, ctx)
    tables: dict[int, list[PadicNumber]] = {}

    def prime_power(l: int, r: int) -> PadicNumber:
        if l == p:
            return PadicNumber.from_int(p, ctx) ** (r * (k - 1))
        tab = tables.get(l)
        if tab is None:
            al = eps.value(l, ctx) + PadicNumber.from_int(l, ctx) ** (k - 1)
            tab = tables[l] = [one, al]
        if len(tab) <= r:
            back = eps.value(l, ctx) * PadicNumber.from_int(l, ctx) ** (k - 1)
            while len(tab) <= r:
                tab.append(tab[1] * tab[-1] - back * tab[-2])
        return tab[r]

    return _assemble(ctx, k, i % (p - 1), M, PadicNumber.from_int(0, ctx), prime_power)


def eisenstein_ordinary(w: WeightPoint, M: int, ctx: PadicContext) -> QExpansion:
    """The ordinary Eisenstein series at a weight-space point with integer
    coordinate.  The trivial weight degenerates to the constant 1 and is
    returned flagged rather than rejected."""
    if ctx.p != w.p:
        raise ValueError("context prime differs from the weight's prime")
    if w.is_trivial:
        zero = PadicNumber.from_int(0, ctx)
        coeffs = (PadicNumber.from_int(1, ctx),) + (zero,) * M
        return QExpansion(ctx, 0, 0, coeffs, degenerate=True)
    if not isinstance(w.s, int):
        raise ValueError("q-expansions are built at integer weight coordinates")
    k = w.s
    i = (w.branch - k) % (w.p - 1)
    one = PadicNumber.from_int(1, ctx)
    a0 = zeta_weight(w, ctx).value / PadicNumber.from_int(2, ctx)
    ratios: dict[int, PadicNumber] = {}
    tables: dict[int, list[PadicNumber]] = {}

    def prime_power(l: int, r: int) -> PadicNumber:
        if l == w.p:
            return one
        tab = tables.get(l)
        if tab is None:
            x = ratios[l] = w.value_at(l, ctx) / PadicNumber.from_int(l, ctx)
            tab = tables[l] = [one, one + x]
        while len(tab) <= r:
            tab.append(tab[-1] + ratios[l] ** len(tab))  # sum_{t<=r} x^t
        return tab[r]

    return _assemble(ctx, k, i, M, a0, prime_power)


# -- operators ---------------------------------------------------------------


def _nebentypus_factor(f: QExpansion, l: int) -> PadicNumber:
    """eps(l) * l^(weight-1), read off the expansion's tags."""
    eps = TeichCharacter(f.ctx.p, f.char_exponent)
    lw = PadicNumber.from_rational(Fraction(l) ** (f.weight - 1), f.ctx)
    return eps.value(l, f.ctx) * lw


def hecke_Tl(f: QExpansion, l: int) -> QExpansion:
    """T_l for a prime l != p: a_n -> a_(nl) + eps(l) l^(k-1) a_(n/l)."""
    if not is_prime(l):
        raise ValueError(f"l = {l} is not prime")
    if l == f.ctx.p:
        raise ValueError("T_l is not defined at l = p; use hecke_Up")
    back = _nebentypus_factor(f, l)
    M = f.truncation // l
    coeffs = []
    for n in range(M + 1):
        c = f.coeffs[n * l]
        if n % l == 0:  # includes n = 0
            c = c + back * f.coeffs[n // l]
        coeffs.append(c)
    return QExpansion(f.ctx, f.weight, f.char_exponent, tuple(coeffs))


def hecke_Up(f: QExpansion) -> QExpansion:
    """U_p: a_n -> a_(np)."""
    p = f.ctx.p
    M = f.truncation // p
    return QExpansion(f.ctx, f.weight, f.char_exponent,
                      tuple(f.coeffs[n * p] for n in range(M + 1)))


def theta_pow(f: QExpansion, r: int) -> QExpansion:
    """theta^r: a_n -> n^r a_n, raising the weight tag by 2r."""
    if r < 0:
        raise ValueError("theta power must be >= 0")
    if r == 0:
        return f
    coeffs = tuple(PadicNumber.from_int(n**r, f.ctx) * a for n, a in enumerate(f.coeffs))
    return QExpansion(f.ctx, f.weight + 2 * r, f.char_exponent, coeffs)


def multiply(f: QExpansion, g: QExpansion) -> QExpansion:
    """Product of truncated series, to the shorter truncation."""
    if f.ctx != g.ctx:
        raise ValueError("operands belong to different contexts")
    M = min(f.truncation, g.truncation)
    zero = PadicNumber.from_int(0, f.ctx)
    coeffs = []
    for n in range(M + 1):
        acc = zero
        for u in range(n + 1):
            acc = acc + f.coeffs[u] * g.coeffs[n - u]
        coeffs.append(acc)
    p = f.ctx.p
    return QExpansion(f.ctx, f.weight + g.weight,
                      (f.char_exponent + g.char_exponent) % (p - 1), tuple(coeffs))


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class OperatorCheck:
    operator: str
    passed: bool
    first_fail_index: int | None


@dataclass(frozen=True)
class EigenReport:
    all_passed: bool
    checks: tuple[OperatorCheck, ...]

    def failing(self) -> list[OperatorCheck]:
        return [c for c in self.checks if not c.passed]


def verify_eigensystem(f: QExpansion, primes_bound: int) -> EigenReport:
    """Check T_l f = a_l f for primes l <= primes_bound (l != p) and
    U_p f = a_p f, coefficientwise on the common truncation."""
    if not (f.coeffs[1] == PadicNumber.from_int(1, f.ctx)):
        raise ValueError("eigensystem verification expects a normalized expansion (a_1 = 1)")
    p = f.ctx.p
    checks = []
    for l in primes_up_to(primes_bound):
        if l == p:
            continue
        lhs = hecke_Tl(f, l)
        rhs = f.truncate(lhs.truncation).scale(f.coeffs[l])
        bad = lhs.first_mismatch(rhs)
        checks.append(OperatorCheck(f"T_{l}", bad is None, bad))
    lhs = hecke_Up(f)
    rhs = f.truncate(lhs.truncation).scale(f.coeffs[p])
    bad = lhs.first_mismatch(rhs)
    checks.append(OperatorCheck(f"U_{p}", bad is None, bad))
    return EigenReport(all(c.passed for c in checks), tuple(checks))


@dataclass(frozen=True)
class TwinCheckReport:
    """Outcome of the theta-twin comparison for both twin-character
    conventions.  ``matched`` names the conventions under which
    n^(k-1) a_n(ordinary twin) = a_n(critical) holds for every 1 <= n <= M."""

    p: int
    k: int
    i: int
    truncation: int
    matched: tuple[str, ...]
    first_mismatch: dict = field(default_factory=dict)
    conventions_coincide: bool = False
    constant_term_annihilated: bool = False
    eigenvalue_dictionary_ok: bool = False

    @property
    def passed(self) -> bool:
        return bool(self.matched) and self.constant_term_annihilated \
            and self.eigenvalue_dictionary_ok


def theta_twin_check(p: int, k: int, i: int, M: int, ctx: PadicContext) -> TwinCheckReport:
    """Build the critical series at (k, i) and the ordinary series at the twin
    weight under both character conventions (eps^(-1), the stated twin, and
    eps), apply theta^(k-1), and compare coefficientwise.

    The two conventions coincide exactly when eps is quadratic or trivial.
    If neither matches, something is broken internally and the check aborts
    loudly instead of reporting a verdict.
    """
    crit = eisenstein_critical(p, k, i, M, ctx)
    i = i % (p - 1)
    conventions = [("inverse", (-i) % (p - 1)), ("direct", i)]
    coincide = conventions[0][1] == conventions[1][1]
    matched = []
    mism: dict[str, int | None] = {}
    constant_ok = False
    dictionary_ok = False
    for label, i_star in conventions:
        tw = WeightPoint.classical(p, 2 - k, i_star)
        ordinary = eisenstein_ordinary(tw, M, ctx)
        lifted = theta_pow(ordinary, k - 1)
        bad = lifted.first_mismatch(crit, start=1)
        mism[label] = bad
        if bad is None:
            matched.append(label)
            constant_ok = lifted.coeff(0).is_zero_to_precision and \
                crit.coeff(0).is_zero_to_precision
            # eigenvalue dictionary: l^(k-1) a_l(ord) = a_l(crit), p^(k-1)*1 = a_p(crit)
            ok = True
            for l in primes_up_to(min(20, M)):
                if l == p:
                    lhs = PadicNumber.from_int(p, ctx) ** (k - 1) * ordinary.coeff(p)
                else:
                    lhs = PadicNumber.from_int(l, ctx) ** (k - 1) * ordinary.coeff(l)
                if not (lhs == crit.coeff(l)):
                    ok = False
                    break
            dictionary_ok = ok
        if coincide:
            mism[conventions[1][0]] = bad
            break
    if not matched:
        raise TwinConventionError(
            f"theta^(k-1) matches neither twin convention at (p,k,i)=({p},{k},{i}); "
            f"first mismatches: {mism}"
        )
    if coincide and matched:
        matched = ["inverse", "direct"]
    return TwinCheckReport(
        p=p, k=k, i=i, truncation=M,
        matched=tuple(matched),
        first_mismatch=mism,
        conventions_coincide=coincide,
        constant_term_annihilated=constant_ok,
        eigenvalue_dictionary_ok=dictionary_ok,
    )


def dump_lines(f: QExpansion) -> list[str]:
    """One line per coefficient: index, valuation, unit digits base p, tail."""
    out = []
    p = f.ctx.p
    for n, a in enumerate(f.coeffs):
        if a.is_zero_to_precision:
            out.append(f"{n}\tzero\t-\tO({p}^{a.min_valuation})")
        else:
            digits = ",".join(str(d) for d in a.digits())
            out.append(f"{n}\t{a.valuation}\t{digits}\tO({p}^{a.abs_precision})")
    return out
