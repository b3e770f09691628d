"""Dirichlet characters of conductor dividing p: the powers omega^i of the
Teichmuller character.  Values land in Z_p itself, so no cyclotomic extension
arithmetic is ever needed."""

from __future__ import annotations

from .padic import PadicContext, PadicNumber, teichmuller
from .primes import is_prime

__all__ = ["TeichCharacter"]


class TeichCharacter:
    """omega^i modulo p, with 0 <= i < p-1 canonical.

    Conductor is 1 for the trivial character and p otherwise; in particular
    the trivial character takes the value 1 at p while every other one
    kills p.  That convention is what makes the Euler factor at p in the
    L-function interpolation formula degenerate correctly.
    """

    __slots__ = ("p", "exponent")

    def __init__(self, p: int, exponent: int):
        if not is_prime(p) or p < 3:
            raise ValueError(f"p = {p} must be an odd prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "exponent", exponent % (p - 1))

    def __setattr__(self, name, value):
        raise AttributeError("TeichCharacter is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, TeichCharacter)
            and self.p == other.p
            and self.exponent == other.exponent
        )

    def __hash__(self):
        return hash((self.p, self.exponent))

    def __repr__(self):
        return f"omega^{self.exponent} mod {self.p}"

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    @property
    def conductor(self) -> int:
        return 1 if self.is_trivial else self.p

    @property
    def parity(self) -> int:
        """Value at -1 as a sign: omega(-1) = -1, so this is (-1)^i."""
        return -1 if self.exponent % 2 else 1

    @property
    def order(self) -> int:
        from math import gcd

        return (self.p - 1) // gcd(self.exponent, self.p - 1)

    def value(self, a: int, ctx: PadicContext) -> PadicNumber:
        """omega^i(a); exact 0 at multiples of p unless the character is trivial."""
        if ctx.p != self.p:
            raise ValueError("context prime differs from character prime")
        if a % self.p == 0:
            if self.is_trivial:
                return PadicNumber.from_int(1, ctx)
            return PadicNumber.from_int(0, ctx)
        # omega(a)^i = omega(a^i mod p): one Hensel fixed point instead of i products
        return teichmuller(pow(a, self.exponent, self.p), ctx)

    def __call__(self, a: int, ctx: PadicContext) -> PadicNumber:
        return self.value(a, ctx)

    def _check_same_prime(self, other: "TeichCharacter"):
        if self.p != other.p:
            raise ValueError("characters live at different primes")

    def __mul__(self, other: "TeichCharacter") -> "TeichCharacter":
        self._check_same_prime(other)
        return TeichCharacter(self.p, self.exponent + other.exponent)

    def compose(self, other: "TeichCharacter") -> "TeichCharacter":
        return self * other

    def inverse(self) -> "TeichCharacter":
        return TeichCharacter(self.p, -self.exponent)
