"""Translation-invariant Clifford dynamics over Laurent polynomials.

On the infinite chain a Pauli word is a pair of polynomials ``(xi_X; xi_Z)``
over GF(2) in the shift variable ``u``.  Working modulo ``u^M - 1`` with
``M = 2(k+1)`` periodizes the chain; together with mirror-image seeds this
reproduces the open chain of ``k`` sites.
"""
from __future__ import annotations

from dataclasses import dataclass

from .clifford import layer_map, period
from .errors import DomainError
from .pauli import PauliWord


@dataclass(frozen=True)
class CyclicPoly:
    """Element of GF(2)[u]/(u^modulus - 1); bit ``d`` of ``coeffs`` is the u^d coefficient."""

    modulus: int
    coeffs: int = 0

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError("modulus must be positive")
        object.__setattr__(self, "coeffs", self.coeffs & ((1 << self.modulus) - 1))

    @classmethod
    def monomial(cls, modulus: int, degree: int) -> "CyclicPoly":
        return cls(modulus, 1 << (degree % modulus))

    @classmethod
    def from_degrees(cls, modulus: int, degrees) -> "CyclicPoly":
        c = 0
        for d in degrees:
            c ^= 1 << (d % modulus)
        return cls(modulus, c)

    def degrees(self) -> list[int]:
        return [d for d in range(self.modulus) if (self.coeffs >> d) & 1]

    def _same(self, other: "CyclicPoly") -> None:
        if other.modulus != self.modulus:
            raise DomainError("moduli differ")

    def __add__(self, other: "CyclicPoly") -> "CyclicPoly":
        self._same(other)
        return CyclicPoly(self.modulus, self.coeffs ^ other.coeffs)

    __sub__ = __add__

    def shift(self, d: int) -> "CyclicPoly":
        """Multiplication by ``u^d``."""
        m = self.modulus
        d %= m
        c = self.coeffs
        return CyclicPoly(m, ((c << d) | (c >> (m - d))) if d else c)

    def __mul__(self, other: "CyclicPoly") -> "CyclicPoly":
        self._same(other)
        out = 0
        for d in other.degrees():
            out ^= self.shift(d).coeffs
        return CyclicPoly(self.modulus, out)

    def __pow__(self, e: int) -> "CyclicPoly":
        result = CyclicPoly(self.modulus, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute_power(self, n: int) -> "CyclicPoly":
        """``p(u^n)``."""
        return CyclicPoly.from_degrees(self.modulus, [d * n for d in self.degrees()])

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join("1" if d == 0 else f"u^{d}" for d in self.degrees())


@dataclass(frozen=True)
class PolyMatrix2x2:
    a: CyclicPoly
    b: CyclicPoly
    c: CyclicPoly
    d: CyclicPoly

    @property
    def modulus(self) -> int:
        return self.a.modulus

    @classmethod
    def identity(cls, modulus: int) -> "PolyMatrix2x2":
        one, zero = CyclicPoly(modulus, 1), CyclicPoly(modulus)
        return cls(one, zero, zero, one)

    def __mul__(self, o: "PolyMatrix2x2") -> "PolyMatrix2x2":
        return PolyMatrix2x2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "PolyMatrix2x2") -> "PolyMatrix2x2":
        return PolyMatrix2x2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def scale(self, p: CyclicPoly) -> "PolyMatrix2x2":
        return PolyMatrix2x2(p * self.a, p * self.b, p * self.c, p * self.d)

    def __pow__(self, e: int) -> "PolyMatrix2x2":
        result = PolyMatrix2x2.identity(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def det(self) -> CyclicPoly:
        return self.a * self.d + self.b * self.c

    def trace(self) -> CyclicPoly:
        return self.a + self.d

    def apply(self, x: CyclicPoly, z: CyclicPoly) -> tuple[CyclicPoly, CyclicPoly]:
        return self.a * x + self.b * z, self.c * x + self.d * z


def _modulus_ok(modulus: int) -> None:
    if modulus < 4 or modulus % 2:
        raise DomainError("modulus must be even and at least 4")


def t_infinity(modulus: int) -> PolyMatrix2x2:
    """Single all-ones layer on the periodized chain: X -> Z, Z -> X Z(u + 1 + u^-1)."""
    _modulus_ok(modulus)
    zero, one = CyclicPoly(modulus), CyclicPoly(modulus, 1)
    return PolyMatrix2x2(zero, one, one, CyclicPoly.from_degrees(modulus, [1, 0, -1]))


def gamma(modulus: int) -> CyclicPoly:
    """Closed form ``(u + 1 + u^-1)(u^2 + u^-2)``, the trace of ``t^3``."""
    _modulus_ok(modulus)
    return CyclicPoly.from_degrees(modulus, [1, 0, -1]) * CyclicPoly.from_degrees(modulus, [2, -2])


def gamma_matches_trace(modulus: int) -> bool:
    return (t_infinity(modulus) ** 3).trace() == gamma(modulus)


def cayley_hamilton_check(modulus: int) -> bool:
    """``(t^3)^2 == gamma t^3 + I`` (det t = 1 in characteristic 2)."""
    t3 = t_infinity(modulus) ** 3
    return t3 * t3 == t3.scale(gamma(modulus)) + PolyMatrix2x2.identity(modulus)


def frobenius_check(p: CyclicPoly) -> bool:
    return p * p == p.substitute_power(2)


@dataclass(frozen=True)
class Lemma3Report:
    r: int
    k: int
    doubling: bool
    annihilation: bool
    period: int
    period_ok: bool

    @property
    def passed(self) -> bool:
        return self.doubling and self.annihilation and self.period_ok


def verify_lemma3(r: int, period_cap: int = 10**6) -> Lemma3Report:
    """Period ``3k+3`` for ``k = 2^r - 1`` (divisibility only when ``r = 1``)."""
    if r < 1:
        raise DomainError("r must be positive")
    k = 2**r - 1
    modulus = 2 * (k + 1)
    t3 = t_infinity(modulus) ** 3
    g_half = gamma(modulus) ** (2 ** (r - 1))
    lhs = t3 ** (2**r)
    rhs = PolyMatrix2x2.identity(modulus) + (t3 ** (2 ** (r - 1))).scale(g_half)
    p = period(layer_map(k, [1] * k), period_cap)
    target = 3 * k + 3
    ok = (p == target) if r >= 2 else (target % p == 0)
    return Lemma3Report(r, k, lhs == rhs, g_half.is_zero(), p, ok)


def image_charge_check(k: int, steps: int | None = None) -> bool:
    """Open-chain evolution of every ``X_i``, ``Z_i`` equals the periodized
    evolution of the mirrored seed ``P_i + P_{-i}`` read on sites ``1..k``."""
    modulus = 2 * (k + 1)
    t = t_infinity(modulus)
    open_map = layer_map(k, [1] * k)
    steps = 3 * k + 3 if steps is None else steps
    for i in range(1, k + 1):
        seed = CyclicPoly.from_degrees(modulus, [i, -i])
        zero = CyclicPoly(modulus)
        for xs, zs, letter in ((seed, zero, "X"), (zero, seed, "Z")):
            key = PauliWord.single(k, i, letter).key
            for _ in range(steps + 1):
                x_bits = sum(((xs.coeffs >> j) & 1) << (j - 1) for j in range(1, k + 1))
                z_bits = sum(((zs.coeffs >> j) & 1) << (j - 1) for j in range(1, k + 1))
                ghosts = ((xs.coeffs | zs.coeffs) >> 0) & 1 or ((xs.coeffs | zs.coeffs) >> (k + 1)) & 1
                if ghosts or (x_bits | z_bits << k) != key:
                    return False
                xs, zs = t.apply(xs, zs)
                key = open_map.apply_key(key)
    return True
