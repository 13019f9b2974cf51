"""Pauli words in the binary symplectic representation.

A word on ``n`` qubits is ``i**phase * P_1 (x) ... (x) P_n`` where the letter on
qubit ``j`` is fixed by the bit pair ``(x_j, z_j)``: ``(0,0)=I``, ``(1,0)=X``,
``(0,1)=Z``, ``(1,1)=Y``.  Qubit ``j`` (1-based) lives in bit ``j-1`` of the
packed integers ``x`` and ``z``.  In text, qubit 1 is the leftmost letter.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

from .errors import DimensionError

_LETTERS = "IXZY"  # indexed by x | (z << 1)
_PHASE_TOKENS = {"+1": 0, "+i": 1, "-1": 2, "-i": 3}
_PHASE_NAMES = {0: "+1", 1: "+i", 2: "-1", 3: "-i"}

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _popcount(v: int) -> int:
    return bin(v).count("1")


def symplectic_product(x1: int, z1: int, x2: int, z2: int) -> int:
    """Parity of the symplectic form on packed bit vectors (0 = commute)."""
    return _popcount((x1 & z2) ^ (z1 & x2)) & 1


def product_phase(x1: int, z1: int, x2: int, z2: int) -> int:
    """Exponent ``g`` (mod 4) with ``sigma(a) sigma(b) = i**g sigma(a ^ b)``."""
    y1 = x1 & z1
    xo1 = x1 & ~z1
    zo1 = z1 & ~x1
    y2 = x2 & z2
    xo2 = x2 & ~z2
    zo2 = z2 & ~x2
    g = (
        _popcount(y1 & zo2) - _popcount(y1 & xo2)
        + _popcount(xo1 & y2) - _popcount(xo1 & zo2)
        + _popcount(zo1 & xo2) - _popcount(zo1 & y2)
    )
    return g % 4


@dataclass(frozen=True)
class PauliWord:
    """An ``n``-qubit Pauli operator with an exact ``i``-power phase."""

    n_qubits: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        limit = 1 << self.n_qubits
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError("bit vectors longer than n_qubits")
        object.__setattr__(self, "phase", self.phase % 4)

    # construction -------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliWord":
        """Letter on 1-based ``qubit``, identity elsewhere."""
        code = _LETTERS.index(letter)
        bit = 1 << (qubit - 1)
        return cls(n, bit if code & 1 else 0, bit if code & 2 else 0)

    @classmethod
    def from_key(cls, key: int, n: int) -> "PauliWord":
        mask = (1 << n) - 1
        return cls(n, key & mask, key >> n)

    @classmethod
    def from_string(cls, text: str) -> "PauliWord":
        s = text.strip().replace("−", "-")
        phase = 0
        for token, value in _PHASE_TOKENS.items():
            if s.startswith(token):
                phase, s = value, s[len(token):]
                break
        else:
            if s[:1] in "+-":
                phase, s = (0 if s[0] == "+" else 2), s[1:]
                if s[:1] == "i":
                    phase, s = phase + 1, s[1:]
        if not s:
            raise ValueError(f"no Pauli letters in {text!r}")
        x = z = 0
        for j, ch in enumerate(s):
            try:
                code = _LETTERS.index(ch)
            except ValueError:
                raise ValueError(f"bad Pauli letter {ch!r} in {text!r}") from None
            x |= (code & 1) << j
            z |= ((code >> 1) & 1) << j
        return cls(len(s), x, z, phase)

    # views --------------------------------------------------------------
    @property
    def key(self) -> int:
        """Phaseless canonical key ``x | z << n``."""
        return self.x | (self.z << self.n_qubits)

    def phaseless(self) -> "PauliWord":
        return PauliWord(self.n_qubits, self.x, self.z)

    def letter(self, qubit: int) -> str:
        j = qubit - 1
        return _LETTERS[((self.x >> j) & 1) | (((self.z >> j) & 1) << 1)]

    def letters(self) -> str:
        return "".join(self.letter(q) for q in range(1, self.n_qubits + 1))

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def weight(self) -> int:
        return _popcount(self.x | self.z)

    def to_string(self, with_phase: bool = True) -> str:
        body = self.letters()
        return _PHASE_NAMES[self.phase] + body if with_phase else body

    def __str__(self) -> str:
        return self.letters() if self.phase == 0 else self.to_string()

    def restrict(self, qubits: Iterable[int]) -> "PauliWord":
        """Phaseless word on the listed 1-based qubits, in the given order."""
        qs = list(qubits)
        x = z = 0
        for j, q in enumerate(qs):
            x |= ((self.x >> (q - 1)) & 1) << j
            z |= ((self.z >> (q - 1)) & 1) << j
        return PauliWord(len(qs), x, z)

    def to_matrix(self) -> np.ndarray:
        """Dense ``2**n`` matrix; qubit 1 is the least significant index bit."""
        mats = [_MATS[c] for c in reversed(self.letters())]
        return (1j ** self.phase) * reduce(np.kron, mats)

    # algebra ------------------------------------------------------------
    def __mul__(self, other: "PauliWord") -> "PauliWord":
        return pauli_mul(self, other)


def _check(p: PauliWord, q: PauliWord) -> None:
    if p.n_qubits != q.n_qubits:
        raise DimensionError(f"{p.n_qubits}-qubit word vs {q.n_qubits}-qubit word")


def pauli_mul(p: PauliWord, q: PauliWord) -> PauliWord:
    """Exact product ``p @ q`` including the phase."""
    _check(p, q)
    g = product_phase(p.x, p.z, q.x, q.z)
    return PauliWord(p.n_qubits, p.x ^ q.x, p.z ^ q.z, p.phase + q.phase + g)


def commutes(p: PauliWord, q: PauliWord) -> bool:
    _check(p, q)
    return symplectic_product(p.x, p.z, q.x, q.z) == 0


def commutator(p: PauliWord, q: PauliWord) -> PauliWord | None:
    """Phaseless ``[p, q]``: ``None`` when they commute, else the product."""
    _check(p, q)
    if symplectic_product(p.x, p.z, q.x, q.z) == 0:
        return None
    return PauliWord(p.n_qubits, p.x ^ q.x, p.z ^ q.z)


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of bit vectors packed into ints."""
    basis: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                rank += 1
                break
    return rank
