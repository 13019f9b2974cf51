"""Clifford layer maps of the H / HS brickwork and the operator spacetime.

Maps act in the Heisenberg picture: for a layer unitary ``V`` the map sends
``P`` to ``V^dagger P V``.  A layer is ``V = (prod_i H_i S_i^lam_i)(prod_i CZ_{i,i+1})``
on an open chain, so ``V^dagger P V`` conjugates by ``H`` first, then ``S``,
then the ``CZ`` ladder.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExhausted, DimensionError, DomainError
from .pauli import PauliWord, gf2_rank, pauli_mul
from .schedules import LambdaSchedule

DEFAULT_PERIOD_CAP = 10**6


# gate-level conjugation on (x, z, phase) triples --------------------------
def conj_h(x: int, z: int, ph: int, j: int) -> tuple[int, int, int]:
    """``H P H`` on 0-based qubit ``j``."""
    xb, zb = (x >> j) & 1, (z >> j) & 1
    if xb and zb:
        ph += 2
    if xb != zb:
        x ^= 1 << j
        z ^= 1 << j
    return x, z, ph


def conj_s(x: int, z: int, ph: int, j: int) -> tuple[int, int, int]:
    """``S^dagger P S`` on 0-based qubit ``j`` (X -> -Y, Y -> X)."""
    if (x >> j) & 1:
        if not (z >> j) & 1:
            ph += 2
        z ^= 1 << j
    return x, z, ph


def conj_cz(x: int, z: int, ph: int, a: int, b: int) -> tuple[int, int, int]:
    """``CZ P CZ`` on 0-based qubits ``a`` and ``b``."""
    xa, xb = (x >> a) & 1, (x >> b) & 1
    if xa and xb and ((z >> a) ^ (z >> b)) & 1:
        ph += 2
    if xb:
        z ^= 1 << a
    if xa:
        z ^= 1 << b
    return x, z, ph


def conj_layer(x: int, z: int, ph: int, n: int, lam: Sequence[int],
               periodic: bool = False) -> tuple[int, int, int]:
    """Heisenberg action of one brickwork layer on an ``n``-qubit word."""
    for j in range(n):
        x, z, ph = conj_h(x, z, ph, j)
    for j in range(n):
        if lam[j]:
            x, z, ph = conj_s(x, z, ph, j)
    for j in range(n - 1):
        x, z, ph = conj_cz(x, z, ph, j, j + 1)
    if periodic and n > 2:
        x, z, ph = conj_cz(x, z, ph, n - 1, 0)
    return x, z, ph % 4


@dataclass(frozen=True)
class SymplecticMap:
    """Clifford conjugation stored as the exact images of ``X_1..X_k, Z_1..Z_k``."""

    k: int
    images: tuple[PauliWord, ...]

    def __post_init__(self):
        if len(self.images) != 2 * self.k:
            raise DimensionError("need 2k generator images")
        if any(im.n_qubits != self.k for im in self.images):
            raise DimensionError("image size differs from k")

    @classmethod
    def identity(cls, k: int) -> "SymplecticMap":
        return cls(k, tuple(_generators(k)))

    @property
    def cols(self) -> tuple[int, ...]:
        """Phaseless image keys (``x | z << k``), X generators first."""
        return tuple(im.key for im in self.images)

    @property
    def phase_bits(self) -> tuple[int, ...]:
        return tuple(im.phase for im in self.images)

    def apply_key(self, key: int) -> int:
        """Phaseless image of a packed key."""
        out = 0
        cols = self.cols
        i = 0
        while key:
            if key & 1:
                out ^= cols[i]
            key >>= 1
            i += 1
        return out

    def apply(self, p: PauliWord) -> PauliWord:
        """Exact image including the ``i``-power phase."""
        if p.n_qubits != self.k:
            raise DimensionError("word size differs from map")
        k = self.k
        # Y = i X Z, so i^ph * prod sigma = i^(ph + #Y) * prod_j X_j^x Z_j^z
        out = PauliWord(k, phase=p.phase + bin(p.x & p.z).count("1"))
        for j in range(k):
            if (p.x >> j) & 1:
                out = pauli_mul(out, self.images[j])
            if (p.z >> j) & 1:
                out = pauli_mul(out, self.images[k + j])
        return out

    __call__ = apply

    def is_identity(self) -> bool:
        return self.cols == _generator_keys(self.k)

    def preserves_form(self) -> bool:
        gens = _generators(self.k)
        for a in range(2 * self.k):
            for b in range(a + 1, 2 * self.k):
                g = _sp(gens[a], gens[b])
                if _sp(self.images[a], self.images[b]) != g:
                    return False
        return True

    def to_matrix(self):
        """The 2k x 2k GF(2) matrix; column ``g`` is the image of generator ``g``."""
        import numpy as np

        k = self.k
        m = np.zeros((2 * k, 2 * k), dtype=np.uint8)
        for c, key in enumerate(self.cols):
            for r in range(2 * k):
                m[r, c] = (key >> r) & 1
        return m


def _sp(p: PauliWord, q: PauliWord) -> int:
    return bin((p.x & q.z) ^ (p.z & q.x)).count("1") & 1


def _generators(k: int) -> list[PauliWord]:
    return [PauliWord(k, x=1 << j) for j in range(k)] + [PauliWord(k, z=1 << j) for j in range(k)]


def _generator_keys(k: int) -> tuple[int, ...]:
    return tuple(1 << j for j in range(2 * k))


def layer_map(k: int, lam: Sequence[int]) -> SymplecticMap:
    if k < 1:
        raise DomainError("k must be positive")
    if len(lam) != k:
        raise DimensionError("lambda row length differs from k")
    images = []
    for g in _generators(k):
        x, z, ph = conj_layer(g.x, g.z, g.phase, k, lam)
        images.append(PauliWord(k, x, z, ph))
    return SymplecticMap(k, tuple(images))


def build_map(k: int, schedule: LambdaSchedule, layer: int = 1) -> SymplecticMap:
    """Heisenberg map of the layer applied at virtual step ``layer`` (1-based)."""
    if k < 1:
        raise DomainError("k must be positive")
    if schedule.k != k:
        raise DimensionError("schedule built for a different k")
    if layer < 1:
        raise DomainError("layer index starts at 1")
    return layer_map(k, schedule.row(layer))


def compose(a: SymplecticMap, b: SymplecticMap) -> SymplecticMap:
    """The map ``P -> a(b(P))``."""
    if a.k != b.k:
        raise DimensionError("maps act on different k")
    return SymplecticMap(a.k, tuple(a.apply(im) for im in b.images))


def inverse(a: SymplecticMap) -> SymplecticMap:
    k = a.k
    # Solve the GF(2) system column by column with Gauss-Jordan on [M | I].
    rows = []
    cols = a.cols
    for r in range(2 * k):
        v = 0
        for c in range(2 * k):
            v |= ((cols[c] >> r) & 1) << c
        rows.append(v | (1 << (2 * k + r)))
    n = 2 * k
    for c in range(n):
        piv = next((r for r in range(c, n) if (rows[r] >> c) & 1), None)
        if piv is None:
            raise ValueError("map is singular")
        rows[c], rows[piv] = rows[piv], rows[c]
        for r in range(n):
            if r != c and (rows[r] >> c) & 1:
                rows[r] ^= rows[c]
    inv_rows = [row >> n for row in rows]  # row c of M^-1 over input indices
    images = []
    for g, gen in enumerate(_generators(k)):
        key = 0
        for c in range(n):
            if (inv_rows[c] >> g) & 1:
                key |= 1 << c
        w = PauliWord.from_key(key, k)
        back = a.apply(w)
        images.append(PauliWord(k, w.x, w.z, -back.phase + gen.phase))
    return SymplecticMap(k, tuple(images))


def schedule_maps(k: int, schedule: LambdaSchedule) -> list[SymplecticMap]:
    return [build_map(k, schedule, s) for s in range(1, schedule.period_t + 1)]


def period(m: SymplecticMap | Sequence[SymplecticMap], cap: int = DEFAULT_PERIOD_CAP) -> int:
    """Least ``p <= cap`` with ``M_p o ... o M_1`` the identity up to phase.

    A sequence of maps is applied cyclically, so a time-dependent schedule
    counts individual layers rather than whole schedule rows.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    maps = [m] if isinstance(m, SymplecticMap) else list(m)
    k = maps[0].k
    gens = list(_generator_keys(k))
    cur = list(gens)
    for p in range(1, cap + 1):
        step = maps[(p - 1) % len(maps)]
        cur = [step.apply_key(c) for c in cur]
        if cur == gens:
            return p
    raise CapExhausted("period", cap)


def schedule_period(k: int, schedule: LambdaSchedule, cap: int = DEFAULT_PERIOD_CAP) -> int:
    return period(schedule_maps(k, schedule), cap)


@dataclass(frozen=True)
class SpacetimeDiagram:
    """Phaseless columns ``O(0), ..., O(p-1)`` of the evolved ``Z_1``."""

    k: int
    period: int
    columns: tuple[PauliWord, ...]

    def __post_init__(self):
        if len(self.columns) != self.period:
            raise ValueError("column count differs from period")

    def column(self, ell: int) -> PauliWord:
        return self.columns[ell % self.period]

    def cell(self, ell: int, i: int) -> str:
        """Letter of ``O(ell)`` on 1-based site ``i``; ``ell`` taken mod period."""
        return self.column(ell).letter(i)

    def a(self, ell: int, i: int) -> int:
        """Z-bit of ``O(ell)`` at site ``i``; zero outside ``1..k``."""
        if i < 1 or i > self.k:
            return 0
        return (self.column(ell).z >> (i - 1)) & 1

    def b(self, ell: int, i: int) -> int:
        """X-bit of ``O(ell)`` at site ``i``; zero outside ``1..k``."""
        if i < 1 or i > self.k:
            return 0
        return (self.column(ell).x >> (i - 1)) & 1

    def keys(self) -> list[int]:
        return [c.key for c in self.columns]


def spacetime(k: int, schedule: LambdaSchedule, cap: int = DEFAULT_PERIOD_CAP) -> SpacetimeDiagram:
    """Evolve ``Z_1`` forward, ``O(l+1) = M_{l+1}(O(l))``, for one full period."""
    maps = schedule_maps(k, schedule)
    p = period(maps, cap)
    key = 1 << k
    cols = [PauliWord.from_key(key, k)]
    for ell in range(1, p):
        key = maps[(ell - 1) % len(maps)].apply_key(key)
        cols.append(PauliWord.from_key(key, k))
    return SpacetimeDiagram(k, p, tuple(cols))


def render(diagram: SpacetimeDiagram) -> str:
    """``k`` rows (site 1 first) of ``period`` letters."""
    first = diagram.columns[0]
    if first.key != 1 << diagram.k:
        raise ValueError("column 0 must be Z on site 1")
    rows = ["".join(c.letter(i) for c in diagram.columns) for i in range(1, diagram.k + 1)]
    return "\n".join(rows)


def symmetry_row(diagram: SpacetimeDiagram) -> str:
    """I/Z string read off the top row: Z where site 1 carries an X component."""
    return "".join("Z" if diagram.b(ell, 1) else "I" for ell in range(diagram.period))


def generates_all_paulis(diagram: SpacetimeDiagram) -> bool:
    """Multiplicative generation of the full Pauli group by the columns."""
    return gf2_rank(diagram.keys()) == 2 * diagram.k


def conj_layer_forward(x: int, z: int, ph: int, n: int, lam: Sequence[int],
                       periodic: bool = False) -> tuple[int, int, int]:
    """Schrodinger action ``V P V^dagger`` of one brickwork layer."""
    for j in range(n - 1):
        x, z, ph = conj_cz(x, z, ph, j, j + 1)
    if periodic and n > 2:
        x, z, ph = conj_cz(x, z, ph, n - 1, 0)
    for j in range(n):
        if lam[j] and (x >> j) & 1:
            # S P S^dagger: X -> Y, Y -> -X
            if (z >> j) & 1:
                ph += 2
            z ^= 1 << j
    for j in range(n):
        x, z, ph = conj_h(x, z, ph, j)
    return x, z, ph % 4
