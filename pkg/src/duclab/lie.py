"""Dynamical Lie algebras generated by Pauli words under commutation.

For Pauli generators the real span of ``i * (Pauli words)`` is closed under
brackets exactly when the phaseless key set is closed under "product if the
pair anticommutes", so closure is a pure set computation.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .clifford import DEFAULT_PERIOD_CAP, spacetime
from .errors import CapExhausted, DimensionError
from .pauli import PauliWord
from .schedules import LambdaSchedule

DEFAULT_MEM_GUARD_MB = 2048
FAMILIES = ("su(2^k)", "sp(2^k)", "so(2^k)", "so(2(k+1))", "sp(2k)")


def mem_guard_bytes() -> int:
    return int(os.environ.get("DUCLAB_MEM_GUARD_MB", DEFAULT_MEM_GUARD_MB)) * 2**20


@dataclass(frozen=True)
class PauliSet:
    n_qubits: int
    members: frozenset[int]

    def __post_init__(self):
        if 0 in self.members:
            raise ValueError("identity is never a member")
        limit = 1 << (2 * self.n_qubits)
        if any(m >= limit for m in self.members):
            raise DimensionError("key wider than the register")

    @classmethod
    def of(cls, words: Iterable[PauliWord | int], n: int) -> "PauliSet":
        keys = set()
        for w in words:
            key = w if isinstance(w, int) else w.key
            if isinstance(w, PauliWord) and w.n_qubits != n:
                raise DimensionError("word size differs from set")
            if key:
                keys.add(int(key))
        return cls(n, frozenset(keys))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: PauliWord | int) -> bool:
        key = item if isinstance(item, int) else item.key
        return key in self.members

    def words(self) -> list[PauliWord]:
        return [PauliWord.from_key(m, self.n_qubits) for m in sorted(self.members)]


def close_keys(keys: Iterable[int], n: int, member_cap: int | None = None) -> np.ndarray:
    """Closure as a sorted uint64 array; raises :class:`CapExhausted`."""
    full = 4**n - 1
    cap = full if member_cap is None else member_cap
    # each member costs 8 bytes plus hash-table overhead beyond the bitmap range
    per_member = 8 if n <= 14 else 48
    bitmap = (1 << (2 * n)) // 8 if n <= 14 else 0
    guard_cap = max(1, (mem_guard_bytes() - bitmap) // per_member)
    effective = min(cap, guard_cap)
    members, complete = kernels.closure(list(keys), n, effective)
    if not complete:
        raise CapExhausted("closure", effective)
    return np.sort(members)


def close(generators: PauliSet, member_cap: int | None = None) -> PauliSet:
    if not generators.members:
        raise ValueError("need at least one generator")
    out = close_keys(generators.members, generators.n_qubits, member_cap)
    return PauliSet(generators.n_qubits, frozenset(int(v) for v in out))


@dataclass(frozen=True)
class AlgebraLabel:
    names: tuple[str, ...]
    dimension: int

    @property
    def name(self) -> str:
        return "/".join(self.names) if self.names else "unknown"

    def __str__(self) -> str:
        return self.name


def family_dims(k: int) -> dict[str, int]:
    return {
        "su(2^k)": 4**k - 1,
        "sp(2^k)": 2 ** (k - 1) * (2**k + 1),
        "so(2^k)": 2 ** (k - 1) * (2**k - 1),
        "so(2(k+1))": (k + 1) * (2 * k + 1),
        "sp(2k)": k * (2 * k + 1),
    }


def classify(dimension: int, k: int) -> AlgebraLabel:
    dims = family_dims(k)
    names = tuple(f for f in FAMILIES if dims[f] == dimension and dimension > 0)
    return AlgebraLabel(names, dimension)


@dataclass(frozen=True)
class ClosureResult:
    k: int
    period: int
    dimension: int
    label: AlgebraLabel

    def tsv(self) -> str:
        return f"{self.k}\t{self.period}\t{self.dimension}\t{self.label.name}"


def closure_dim(k: int, schedule: LambdaSchedule, period_cap: int = DEFAULT_PERIOD_CAP,
                member_cap: int | None = None) -> ClosureResult:
    diagram = spacetime(k, schedule, period_cap)
    members = close_keys(diagram.keys(), k, member_cap)
    return ClosureResult(k, diagram.period, len(members), classify(len(members), k))
