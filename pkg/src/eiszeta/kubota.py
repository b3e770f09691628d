"""The Kubota-Leopoldt p-adic L-function by branch, the zeta function on
weight space, and the irregular-prime / zero-locus scan.

Branch dictionary (fixed once, used everywhere):

* Weight space splits into components indexed by an even exponent j modulo
  p-1; the point z -> z^k omega^i(z) sits on branch j = k + i with coordinate
  s = k.
* On branch j, the L-function takes the interpolation values

      L_p(1-n, branch j) = -(1 - chi(p) p^(n-1)) * B_{n,chi} / n,
      chi = omega^(j-n),  n >= 1,

  so chi(p) = 1 exactly when j = n mod p-1 and 0 otherwise.
* The zeta function on weight space evaluates branch j at argument 1 - s.
  On a classical weight z^k omega^i this twists the character to omega^i and
  gives -(1 - omega^i(p) p^(k-1)) B_{k,omega^i} / k.
* The ordinary twin of a critical weight (k, i) is z^(2-k) eps^(-1), i.e.
  branch j* = 2 - k - i with coordinate 2 - k; its zeta value is the branch-j*
  function at argument k - 1.

The convergent evaluation at arbitrary s in Z_p is the classical series over
a twisted sum of one-unit powers,

    L_p(s, branch j) = 1/(p(s-1)) * sum_{a=1}^{p-1} omega^j(a) <a>^(1-s)
                       * sum_{m>=0} C(1-s, m) B_m (p/a)^m,

with <a> = a/omega(a).  Term m of the inner sum has valuation at least
m + v(B_m) >= m - 1 (binomial coefficients of p-adic integers are p-adic
integers; von Staudt-Clausen caps the B_m denominator at one power of p), so
truncating at m = N + 1 leaves a tail of valuation >= N.  The pole of the
trivial branch sits at s = 1; its values carry the pole factor and therefore
have valuation -1 - v(s-1) rather than >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import bernoulli_number, generalized_bernoulli
from .characters import TeichCharacter
from .padic import (
    PadicContext,
    PadicNumber,
    exp_small,
    log_one_unit,
    one_unit_part,
)
from .primes import is_prime

__all__ = [
    "AdmissibilityError",
    "PoleError",
    "WeightPoint",
    "LValue",
    "lp_interpolation",
    "lp_series",
    "zeta_weight",
    "irregular_branches",
    "irregular_scan",
    "ZeroWitness",
]


class AdmissibilityError(ValueError):
    """A requested point violates one of the admissibility constraints."""


class PoleError(ValueError):
    """Evaluation requested at the pole of the trivial branch."""


@dataclass(frozen=True)
class WeightPoint:
    """A point of weight space in intrinsic coordinates (branch j, coordinate
    s), with the classical view (k, i) attached when the point is classical
    or a twin with integer coordinate."""

    p: int
    branch: int
    s: object  # int for classical/twin points, PadicNumber in general
    k: int | None = None
    i: int | None = None

    @classmethod
    def classical(cls, p: int, k: int, i: int) -> "WeightPoint":
        if not is_prime(p) or p < 3:
            raise AdmissibilityError(f"p = {p} must be an odd prime")
        i = i % (p - 1)
        if (k - i) % 2 != 0:
            raise AdmissibilityError(
                f"character parity (-1)^{i} must match weight parity (-1)^{k}"
            )
        return cls(p=p, branch=(k + i) % (p - 1), s=k, k=k, i=i)

    @classmethod
    def intrinsic(cls, p: int, branch: int, s) -> "WeightPoint":
        if not is_prime(p) or p < 3:
            raise AdmissibilityError(f"p = {p} must be an odd prime")
        branch = branch % (p - 1)
        if branch % 2 != 0:
            raise AdmissibilityError("weight space is even: branch exponent must be even")
        return cls(p=p, branch=branch, s=s)

    @property
    def is_trivial(self) -> bool:
        if isinstance(self.s, PadicNumber):
            s_zero = self.s.is_zero_to_precision
        else:
            s_zero = self.s == 0
        return self.branch == 0 and s_zero

    @property
    def is_classical(self) -> bool:
        return self.k is not None and self.k >= 1

    def validate_critical(self) -> None:
        """Constraints for a critical Eisenstein point of weight z^k eps."""
        if self.k is None:
            raise AdmissibilityError("critical points require a classical weight (k, i)")
        if self.k < 2:
            raise AdmissibilityError(f"critical weight needs k >= 2, got k = {self.k}")
        if self.k == 2 and self.i == 0:
            raise AdmissibilityError(
                "weight 2 with trivial character is excluded (no such critical point)"
            )

    def twin(self) -> "WeightPoint":
        """The ordinary partner z^(2-k) eps^(-1) of a critical weight."""
        if self.k is None:
            raise AdmissibilityError("twin is defined for classical weights")
        return WeightPoint.classical(self.p, 2 - self.k, -self.i)

    def value_at(self, a: int, ctx: PadicContext) -> PadicNumber:
        """w(a) = omega^j(a) <a>^s for a coprime to p."""
        if a % self.p == 0:
            raise ValueError("weight characters are evaluated away from p")
        chi = TeichCharacter(self.p, self.branch)
        if isinstance(self.s, int):
            # exact route: a^k * omega^(j-k)(a)
            pw = PadicNumber.from_rational(Fraction(a) ** self.s, ctx)
            return pw * TeichCharacter(self.p, self.branch - self.s).value(a, ctx)
        u = one_unit_part(PadicNumber.from_int(a, ctx))
        return chi.value(a, ctx) * exp_small(self.s * log_one_unit(u))

    def describe(self) -> str:
        if self.k is not None:
            return f"z^{self.k} * omega^{self.i} (branch {self.branch}, s = {self.k})"
        return f"branch {self.branch}, s = {self.s!r}"


@dataclass(frozen=True)
class LValue:
    """An L-function value with its audit trail."""

    value: PadicNumber
    branch: int
    argument: object
    route: str  # "interpolation" | "series"
    precision_achieved: int


def _require_even_branch(j: int, p: int) -> int:
    j = j % (p - 1)
    if j % 2 != 0:
        raise AdmissibilityError("branch exponent must be even")
    return j


def lp_interpolation(n: int, j: int, ctx: PadicContext) -> LValue:
    """L_p(1-n, branch j) from the exact interpolation formula."""
    if n < 1:
        raise ValueError("interpolation needs n >= 1")
    p = ctx.p
    j = _require_even_branch(j, p)
    chi = TeichCharacter(p, j - n)
    bn = generalized_bernoulli(n, chi, ctx)
    if chi.is_trivial:
        euler = PadicNumber.from_rational(1 - Fraction(p) ** (n - 1), ctx)
    else:
        euler = PadicNumber.from_int(1, ctx)
    value = -(euler * bn) / PadicNumber.from_int(n, ctx)
    prec = min(value.abs_precision, ctx.precision)
    return LValue(value=value, branch=j, argument=1 - n, route="interpolation",
                  precision_achieved=prec)


@lru_cache(maxsize=None)
def _log_gamma_a(p: int, precision: int, a: int) -> PadicNumber:
    """log<a> cached per (p, N, a); a in 1..p-1."""
    ctx = PadicContext(p, precision)
    return log_one_unit(one_unit_part(PadicNumber.from_int(a, ctx)))


def _as_padic_integer(s, ctx: PadicContext) -> PadicNumber:
    if isinstance(s, (int, Fraction)):
        s = PadicNumber.from_rational(s, ctx)
    if s.ctx != ctx:
        raise ValueError("argument carried a different context")
    if not s.is_zero_to_precision and s.valuation < 0:
        raise ValueError("the L-function argument must be a p-adic integer")
    return s


def lp_series(s, j: int, ctx: PadicContext) -> LValue:
    """L_p(s, branch j) by the convergent twisted series (module docstring).

    Binomial coefficients C(1-s, m) are built iteratively in Q_p; achieved
    precision is reported from honest propagation rather than assumed.
    """
    p, N = ctx.p, ctx.precision
    j = _require_even_branch(j, p)
    arg = s
    s = _as_padic_integer(s, ctx)
    one = PadicNumber.from_int(1, ctx)
    t = one - s
    s_minus_1 = -t
    if s_minus_1.is_zero_to_precision:
        if j == 0:
            raise PoleError("the trivial branch has its pole at s = 1")
        # s = 1 exactly on a nontrivial branch: the series becomes 0/0, but
        # the function is analytic there.  Evaluate nearby and use
        # |L(1 + p^h) - L(1)| <= p^(-h-1); the precision cost is reported.
        h = max(N // 2, 1)
        near = lp_series(1 + p**h, j, ctx)
        value = near.value.cap_absolute(min(near.value.abs_precision, h + 1))
        return LValue(value=value, branch=j, argument=arg, route="series",
                      precision_achieved=min(value.abs_precision, N))
    # inner-sum length: tail terms have valuation >= m + v(B_m) >= m - 1
    M = N + 1
    binom = one
    coeffs: list[PadicNumber | None] = [PadicNumber.from_rational(bernoulli_number(0), ctx)]
    for m in range(1, M + 1):
        binom = binom * (t - PadicNumber.from_int(m - 1, ctx)) / PadicNumber.from_int(m, ctx)
        b = bernoulli_number(m)
        if b == 0:
            coeffs.append(None)
            continue
        coeffs.append(binom * PadicNumber.from_rational(b * Fraction(p) ** m, ctx))
    chi_j = TeichCharacter(p, j)
    total = None
    for a in range(1, p):
        inv_a = PadicNumber.from_rational(Fraction(1, a), ctx)
        apow = one
        inner = None
        for m, c in enumerate(coeffs):
            if c is not None:
                term = c * apow
                inner = term if inner is None else inner + term
            apow = apow * inv_a
        gamma = exp_small(t * _log_gamma_a(p, N, a))  # <a>^(1-s)
        contrib = chi_j.value(a, ctx) * gamma * inner
        total = contrib if total is None else total + contrib
    value = total / (PadicNumber.from_int(p, ctx) * s_minus_1)
    prec = min(value.abs_precision, N)
    return LValue(value=value, branch=j, argument=arg, route="series",
                  precision_achieved=prec)


def zeta_weight(w: WeightPoint, ctx: PadicContext) -> LValue:
    """zeta_p(w): branch j of the L-function evaluated at argument 1 - s.

    On classical weights z^k omega^i this is
    -(1 - omega^i(p) p^(k-1)) B_{k,omega^i} / k, and it is nonzero there;
    the only pole is the trivial weight.
    """
    if ctx.p != w.p:
        raise ValueError("context prime differs from the weight's prime")
    if w.is_trivial:
        raise PoleError("zeta_p is undefined at the trivial weight")
    if isinstance(w.s, int):
        arg = 1 - w.s
    else:
        arg = PadicNumber.from_int(1, ctx) - w.s
    return lp_series(arg, w.branch, ctx)


# -- irregular primes and the zero locus ------------------------------------


@dataclass(frozen=True)
class ZeroWitness:
    """Numerical shadow of a zero of zeta_p on one branch: every grid value
    has positive valuation, and the residue classes where the valuation jumps
    locate the zero modulo p."""

    branch: int
    grid_precision: int
    baseline_valuation: int
    elevated: tuple[tuple[int, int], ...]  # (s, observed valuation bound)


def irregular_branches(p: int) -> list[int]:
    """Even branches j in {2,...,p-3} where zeta_p vanishes somewhere, by the
    exact criterion p | numerator(B_j)."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"p = {p} must be an odd prime")
    return [j for j in range(2, p - 2, 2) if bernoulli_number(j).numerator % p == 0]


def irregular_scan(p: int, ctx: PadicContext) -> list[tuple[int, ZeroWitness]]:
    """The zero-carrying branches of zeta_p, each cross-checked by the
    valuation profile of the convergent series over a residue grid at the
    context's working precision."""
    if ctx.p != p:
        raise ValueError("context prime differs from p")
    hits = []
    for j in irregular_branches(p):
        profile = []
        # one grid point per residue class mod p; s = 1 is replaced by
        # s = 1 + p to stay clear of the series' removable 0/0 point
        for s in [0, 1 + p] + list(range(2, p)):
            val = lp_series(s, j, ctx).value
            if val.is_zero_to_precision:
                profile.append((s, val.min_valuation))
            else:
                profile.append((s, val.valuation))
        baseline = min(v for _, v in profile)
        elevated = tuple((s, v) for s, v in profile if v > baseline)
        hits.append(
            (
                j,
                ZeroWitness(
                    branch=j,
                    grid_precision=ctx.precision,
                    baseline_valuation=baseline,
                    elevated=elevated,
                ),
            )
        )
    return hits
