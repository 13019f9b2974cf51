"""Dense statevector checks of the resource states and the MBQC protocol.

Site ``i`` (1-based) is bit ``i-1`` of the amplitude index.  A resource state
is ``|psi_k> = L_k ... L_1 |+>^N`` where layer ``L_t`` applies the CZ ladder,
then ``S`` on sites with ``lam(i, t) = 1``, then ``H`` everywhere.  The
measurement basis for site ``i`` is ``|s^theta> = exp(-i theta X)|s>``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .clifford import conj_layer_forward, spacetime
from .errors import DimensionError, DomainError, ResourceGuardError
from .lie import close_keys
from .pauli import PauliWord, gf2_rank
from .schedules import LambdaSchedule, preset

MAX_SITES = 22
MAX_VIRTUAL = 10
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)


def _guard(n: int, k: int | None = None) -> None:
    if n > MAX_SITES:
        raise ResourceGuardError(f"N={n} exceeds the dense limit of {MAX_SITES} sites")
    if k is not None and k > MAX_VIRTUAL:
        raise ResourceGuardError(f"k={k} exceeds the dense limit of {MAX_VIRTUAL}")


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a)


class StateVector:
    """Mutable dense state on ``n_qubits`` sites."""

    def __init__(self, n_qubits: int, amplitudes: np.ndarray | None = None):
        if n_qubits < 1:
            raise DomainError("need at least one qubit")
        _guard(n_qubits)
        self.n_qubits = n_qubits
        if amplitudes is None:
            amplitudes = np.zeros(1 << n_qubits, dtype=complex)
            amplitudes[0] = 1.0
        amplitudes = np.asarray(amplitudes, dtype=complex)
        if amplitudes.shape != (1 << n_qubits,):
            raise DimensionError("amplitude vector has the wrong length")
        self.amplitudes = amplitudes

    @classmethod
    def plus(cls, n: int) -> "StateVector":
        return cls(n, np.full(1 << n, 2 ** (-n / 2), dtype=complex))

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def _index(self) -> np.ndarray:
        return np.arange(1 << self.n_qubits, dtype=np.uint64)

    def apply_1q(self, site: int, u: np.ndarray) -> None:
        n = self.n_qubits
        psi = self.amplitudes.reshape((1 << (n - site), 2, 1 << (site - 1)))
        self.amplitudes = np.einsum("ab,ibj->iaj", u, psi).reshape(-1)

    def apply_layer(self, lam: Sequence[int], periodic: bool = False) -> None:
        """CZ ladder, then ``S^lam``, then ``H`` on every site."""
        n = self.n_qubits
        if len(lam) != n:
            raise DimensionError("lambda row length differs from qubit count")
        idx = self._index()
        links = idx & (idx >> np.uint64(1)) & np.uint64((1 << (n - 1)) - 1) if n > 1 else idx * 0
        parity = _popcount(links).astype(np.int64)
        if periodic and n > 2:
            parity += ((idx & np.uint64(1)) & (idx >> np.uint64(n - 1))).astype(np.int64)
        smask = sum(1 << j for j in range(n) if lam[j])
        spow = _popcount(idx & np.uint64(smask)).astype(np.int64)
        phase = np.array([1, 1j, -1, -1j])[(2 * parity + spow) % 4]
        self.amplitudes = self.amplitudes * phase
        for site in range(1, n + 1):
            self.apply_1q(site, _H)

    def apply_pauli(self, p: PauliWord) -> None:
        if p.n_qubits != self.n_qubits:
            raise DimensionError("word size differs from state")
        self.amplitudes = pauli_action(p, self.amplitudes)

    def expectation(self, p: PauliWord) -> complex:
        return complex(np.vdot(self.amplitudes, pauli_action(p, self.amplitudes)))

    def measure(self, site: int, theta: float, rng: np.random.Generator | None = None,
                outcome: int | None = None) -> tuple[int, float]:
        """Project ``site`` onto ``|s^theta>``; returns ``(s, probability)``."""
        c, s = np.cos(theta), np.sin(theta)
        self.apply_1q(site, np.array([[c, 1j * s], [1j * s, c]]))  # exp(i theta X)
        n = self.n_qubits
        psi = self.amplitudes.reshape((1 << (n - site), 2, 1 << (site - 1)))
        p0 = float(np.sum(np.abs(psi[:, 0, :]) ** 2))
        probs = (p0, max(0.0, 1.0 - p0))
        if outcome is None:
            if rng is None:
                raise ValueError("need an rng or a forced outcome")
            outcome = int(rng.random() >= probs[0])
        p = probs[outcome]
        if p < 1e-14:
            raise ZeroDivisionError(f"outcome {outcome} at site {site} has probability {p:.3g}")
        psi = psi.copy()
        psi[:, 1 - outcome, :] = 0
        self.amplitudes = psi.reshape(-1) / np.sqrt(p)
        return outcome, p


def pauli_action(p: PauliWord, amps: np.ndarray) -> np.ndarray:
    """``P |amps>`` with the exact phase of ``p``."""
    idx = np.arange(len(amps), dtype=np.uint64)
    src = idx ^ np.uint64(p.x)
    sign = 1 - 2 * (_popcount(src & np.uint64(p.z)) & 1).astype(np.int64)
    ph = (1j) ** ((p.phase + bin(p.x & p.z).count("1")) % 4)
    return ph * sign * amps[src]


def _schedule(k: int, schedule: LambdaSchedule | None) -> LambdaSchedule:
    sch = preset("a", k) if schedule is None else schedule
    if sch.k != k:
        raise DimensionError("schedule built for a different k")
    return sch


def physical_lambda(n: int, k: int, schedule: LambdaSchedule | None) -> list[list[int]]:
    """``lam[t][i]`` for physical layer ``t`` (0-based) and site ``i`` (0-based)."""
    sch = _schedule(k, schedule)
    per_site = sch.physical(n)
    return [[per_site[i][t] for i in range(n)] for t in range(k)]


def prepare_resource(n: int, k: int, schedule: LambdaSchedule | None = None,
                     boundary: str = "open") -> StateVector:
    if boundary not in ("open", "periodic"):
        raise ValueError("boundary must be 'open' or 'periodic'")
    _guard(n, k)
    state = StateVector.plus(n)
    if k == 0:
        return state
    for row in physical_lambda(n, k, schedule):
        state.apply_layer(row, periodic=boundary == "periodic")
    return state


def stabilizers(n: int, k: int, schedule: LambdaSchedule | None = None,
                boundary: str = "open") -> list[PauliWord]:
    """``S_i = L_k...L_1 X_i (L_k...L_1)^dagger`` with exact signs."""
    rows = physical_lambda(n, k, schedule) if k else []
    out = []
    for i in range(n):
        x, z, ph = 1 << i, 0, 0
        for row in rows:
            x, z, ph = conj_layer_forward(x, z, ph, n, row, periodic=boundary == "periodic")
        out.append(PauliWord(n, x, z, ph))
    return out


def stabilizer_check(state: StateVector, n: int, k: int, schedule: LambdaSchedule | None = None,
                     boundary: str = "open", atol: float = 1e-10) -> bool:
    return all(
        abs(state.expectation(s) - 1) < atol for s in stabilizers(n, k, schedule, boundary)
    )


# sideways reading -----------------------------------------------------------
def _rot_z(theta: float, s: int) -> np.ndarray:
    """``exp(i theta Z) Z^s``."""
    return np.diag([np.exp(1j * theta), np.exp(-1j * theta) * (-1) ** s])


def virtual_state(k: int, schedule: LambdaSchedule | None, angles: Sequence[float],
                  outcomes: Sequence[int]) -> StateVector:
    """``U_N ... U_1 |+>^k`` with ``U_i = T^(i) exp(i theta_i Z_1) Z_1^s_i``."""
    sch = _schedule(k, schedule)
    if len(angles) != len(outcomes):
        raise DimensionError("one outcome per angle")
    v = StateVector.plus(k)
    for i, (th, s) in enumerate(zip(angles, outcomes), start=1):
        v.apply_1q(1, _rot_z(th, s))
        v.apply_layer(sch.row(i))
    return v


def sideways_amplitude(n: int, k: int, schedule: LambdaSchedule | None,
                       angles: Sequence[float], outcomes: Sequence[int]) -> complex:
    """``2^((k-N)/2) <0^k| U_N ... U_1 |+^k>``, equal to the physical overlap."""
    _guard(n, k)
    if len(angles) != n:
        raise DimensionError("need one angle per site")
    v = virtual_state(k, schedule, angles, outcomes)
    return complex(v.amplitudes[0] * 2 ** ((k - n) / 2))


def physical_amplitude(n: int, k: int, schedule: LambdaSchedule | None,
                       angles: Sequence[float], outcomes: Sequence[int]) -> complex:
    """``<s_1^theta_1 ... s_N^theta_N | psi_k>`` computed densely."""
    state = prepare_resource(n, k, schedule)
    for i in range(n):
        c, s = np.cos(angles[i]), np.sin(angles[i])
        u = np.array([[c, 1j * s], [1j * s, c]])
        if outcomes[i]:
            u = u @ _X
        state.apply_1q(i + 1, u)
    return complex(state.amplitudes[0])


# adaptive protocol ------------------------------------------------------------
@dataclass
class MeasurementRecord:
    seed: int | None
    angles: list[float]
    outcomes: list[int] = field(default_factory=list)
    corrected_angles: list[float] = field(default_factory=list)
    probabilities: list[float] = field(default_factory=list)
    boundary_word: PauliWord | None = None

    @property
    def readout(self) -> int:
        """Logical bit string selected by the boundary word (``<0| P = <b|``)."""
        return self.boundary_word.x

    def probability(self) -> float:
        return float(np.prod(self.probabilities))

    def log_lines(self) -> list[str]:
        return [
            f"{i} {s} {a:.12g} {c:.12g}"
            for i, (s, a, c) in enumerate(zip(self.outcomes, self.angles, self.corrected_angles), 1)
        ]


def _schrodinger(k: int, sch: LambdaSchedule, step: int, p: PauliWord) -> PauliWord:
    x, z, ph = conj_layer_forward(p.x, p.z, p.phase, k, sch.row(step))
    return PauliWord(k, x, z, ph)


def adaptive_run(n: int, k: int, schedule: LambdaSchedule | None, angles: Sequence[float],
                 rng_seed: int | None = 0, forced: Sequence[int] | None = None,
                 ) -> tuple[MeasurementRecord, dict[str, float]]:
    """Measure sites ``1..N`` in order with feed-forward on the resource state.

    A byproduct ``Z_1`` from outcome ``s_j = 1`` is pushed to the right
    boundary through the remaining layers; later angles flip sign whenever the
    accumulated word anticommutes with ``Z_1``.  Returns the record and the
    exact logical output distribution ``|<b|U_N ... U_1|+>|^2``.
    """
    _guard(n, k)
    if len(angles) != n:
        raise DimensionError("need one angle per site")
    sch = _schedule(k, schedule)
    rng = np.random.default_rng(rng_seed)
    state = prepare_resource(n, k, sch)
    rec = MeasurementRecord(rng_seed, [float(a) for a in angles])
    word = PauliWord.identity(k)
    z1 = PauliWord.single(k, 1, "Z")
    for i in range(1, n + 1):
        flip = bin((word.x & z1.z) ^ (word.z & z1.x)).count("1") & 1
        theta = -angles[i - 1] if flip else angles[i - 1]
        s, p = state.measure(i, theta, rng, None if forced is None else forced[i - 1])
        rec.outcomes.append(s)
        rec.corrected_angles.append(float(theta))
        rec.probabilities.append(p)
        if s:
            word = word * z1
        word = _schrodinger(k, sch, i, word)
    rec.boundary_word = word.phaseless()
    return rec, logical_distribution(k, sch, angles)


def logical_distribution(k: int, schedule: LambdaSchedule | None,
                         angles: Sequence[float]) -> dict[str, float]:
    ideal = virtual_state(k, schedule, angles, [0] * len(angles))
    probs = np.abs(ideal.amplitudes) ** 2
    return {format_bits(b, k): float(probs[b]) for b in range(1 << k)}


def format_bits(value: int, k: int) -> str:
    """Qubit 1 first."""
    return "".join(str((value >> j) & 1) for j in range(k))


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    return float(abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b)))


def trajectory_check(n: int, k: int, schedule: LambdaSchedule | None, record: MeasurementRecord,
                     tol: float = 1e-8) -> tuple[float, float]:
    """Fidelity of the corrected logical state with the ideal one, and the
    absolute error of the trajectory probability against ``2^(k-N) |<b|ideal>|^2``."""
    actual = virtual_state(k, schedule, record.corrected_angles, record.outcomes)
    ideal = virtual_state(k, schedule, record.angles, [0] * n)
    undone = pauli_action(record.boundary_word, actual.amplitudes)
    fid = fidelity(undone, ideal.amplitudes)
    expected = 2 ** (k - n) * abs(ideal.amplitudes[record.readout]) ** 2
    return fid, abs(record.probability() - expected)


# symmetries -------------------------------------------------------------------
def symmetry_pattern(n: int, k: int, schedule: LambdaSchedule | None, xi: PauliWord) -> int:
    """Sites (bit ``i-1``) carrying ``Z`` in ``u(xi) = prod_i Z_i^{(t^i xi)^X_1}``."""
    sch = _schedule(k, schedule)
    word, bits = xi, 0
    for i in range(1, n + 1):
        word = _schrodinger(k, sch, i, word)
        bits |= (word.x & 1) << (i - 1)
    return bits


def symmetry_check(n: int, k: int, schedule: LambdaSchedule | None = None,
                   atol: float = 1e-10) -> bool:
    """Periodic resource state fixed by ``u(xi)`` for all unit ``xi``; faithful on the span."""
    sch = _schedule(k, schedule)
    p = spacetime(k, sch).period
    if n % p:
        raise DomainError(f"N must be a multiple of the period {p}")
    state = prepare_resource(n, k, sch, "periodic")
    patterns = []
    for g in range(2 * k):
        xi = PauliWord.from_key(1 << g, k)
        bits = symmetry_pattern(n, k, sch, xi)
        patterns.append(bits)
        if abs(state.expectation(PauliWord(n, z=bits)) - 1) > atol:
            return False
    return gf2_rank(patterns) == 2 * k


def cocycle_sign(xi: PauliWord, zeta: PauliWord) -> int:
    """``c`` with ``V(xi) V(zeta) = c V(xi + zeta)`` for ``V = prod X^x Z^z``."""
    return -1 if bin(xi.z & zeta.x).count("1") & 1 else 1


def _v_matrix(w: PauliWord) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    z = np.diag([1.0, -1.0]).astype(complex)
    for j in range(w.n_qubits, 0, -1):
        xb, zb = (w.x >> (j - 1)) & 1, (w.z >> (j - 1)) & 1
        local = np.linalg.matrix_power(_X, xb) @ np.linalg.matrix_power(z, zb)
        out = np.kron(out, local)
    return out


def projective_rep_check(k: int, trials: int = 500, seed: int = 0, exhaustive: bool | None = None) -> bool:
    """Virtual representation is projective with commutation sign ``(-1)^{xi^T Lambda zeta}``
    and is maximally non-commutative (only ``xi = 0`` is central)."""
    n_vec = 1 << (2 * k)
    exhaustive = n_vec <= 256 if exhaustive is None else exhaustive
    rng = np.random.default_rng(seed)
    if exhaustive:
        pairs = [(a, b) for a in range(n_vec) for b in range(n_vec)]
    else:
        pairs = [tuple(int(v) for v in rng.integers(0, n_vec, 2)) for _ in range(trials)]
    dense = k <= 5
    for a, b in pairs:
        xi, zeta = PauliWord.from_key(a, k), PauliWord.from_key(b, k)
        lam = bin((xi.x & zeta.z) ^ (xi.z & zeta.x)).count("1") & 1
        if cocycle_sign(xi, zeta) * cocycle_sign(zeta, xi) != (-1) ** lam:
            return False
        if dense:
            lhs = _v_matrix(xi) @ _v_matrix(zeta)
            if not np.allclose(lhs, cocycle_sign(xi, zeta) * _v_matrix(PauliWord.from_key(a ^ b, k))):
                return False
            if not np.allclose(lhs, (-1) ** lam * _v_matrix(zeta) @ _v_matrix(xi)):
                return False
    # maximal non-commutativity: central elements of the symplectic form
    gens = [PauliWord.from_key(1 << g, k) for g in range(2 * k)]
    central = [
        a for a in (range(n_vec) if exhaustive else [int(v) for v in rng.integers(1, n_vec, trials)])
        if all(
            not bin((PauliWord.from_key(a, k).x & g.z) ^ (PauliWord.from_key(a, k).z & g.x)).count("1") & 1
            for g in gens
        )
    ]
    return central == ([0] if exhaustive else [])


def literal_cocycle_failures(k: int) -> list[tuple[int, int]]:
    """Pairs violating ``V(xi) V(zeta) == (-1)^{xi^T Lambda zeta} V(xi + zeta)`` read literally.

    The sign is symmetric in ``xi, zeta`` while ``V`` does not commute, so no
    choice of phases for ``V`` can make the list empty for ``k >= 1``.
    """
    if k > 4:
        raise ResourceGuardError("exhaustive dense cocycle check is limited to k <= 4")
    n_vec = 1 << (2 * k)
    mats = [_v_matrix(PauliWord.from_key(a, k)) for a in range(n_vec)]
    bad = []
    for a in range(n_vec):
        for b in range(n_vec):
            xi, zeta = PauliWord.from_key(a, k), PauliWord.from_key(b, k)
            lam = bin((xi.x & zeta.z) ^ (xi.z & zeta.x)).count("1") & 1
            if not np.allclose(mats[a] @ mats[b], (-1) ** lam * mats[a ^ b]):
                bad.append((a, b))
    return bad


def injectivity_span(k: int, schedule: LambdaSchedule | None = None, length: int | None = None) -> int:
    """Dimension of the span of ``A_L(s_L) ... A_1(s_1)`` with ``A_i(s) = T^(i) Z_1^s``."""
    if k > 4:
        raise ResourceGuardError("dense injectivity check is limited to k <= 4")
    sch = _schedule(k, schedule)
    length = spacetime(k, sch).period if length is None else length
    dim = 1 << k
    layers = []
    for i in range(1, length + 1):
        t = np.zeros((dim, dim), dtype=complex)
        for col in range(dim):
            v = StateVector(k)
            v.amplitudes[:] = 0
            v.amplitudes[col] = 1
            v.apply_layer(sch.row(i))
            t[:, col] = v.amplitudes
        layers.append(t)
    zsign = np.array([1 - 2 * (b & 1) for b in range(dim)], dtype=complex)
    products = [np.eye(dim, dtype=complex)]
    for t in layers:
        products = [t @ m for m in products] + [t @ (zsign[:, None] * m) for m in products]
    stack = np.array([m.reshape(-1) for m in products])
    return int(np.linalg.matrix_rank(stack, tol=1e-8))


def injectivity_check(k: int, schedule: LambdaSchedule | None = None) -> bool:
    return injectivity_span(k, schedule) == 4**k


def multiplicative_generation(k: int, schedule: LambdaSchedule | None = None) -> bool:
    d = spacetime(k, _schedule(k, schedule))
    return gf2_rank(d.keys()) == 2 * k


def half_chain_entropy(state: StateVector, cut: int | None = None) -> float:
    """Von Neumann entropy of sites ``1..cut`` in units of ``log 2``."""
    n = state.n_qubits
    cut = n // 2 if cut is None else cut
    if not 0 < cut < n:
        raise DomainError("cut must split the chain")
    m = state.amplitudes.reshape(1 << (n - cut), 1 << cut)
    sv = np.linalg.svd(m, compute_uv=False)
    p = sv**2
    p = p[p > 1e-15]
    return float(-np.sum(p * np.log2(p)))


# non-universal (all-zeros) family -------------------------------------------------
MATCHGATE_CLASSES = {
    "left": r"^Y*[XZ]I*$",  # Y_1 ... Y_{i-1} U_i
    "right": r"^I*[XZ]Y*$",  # U_i Y_{i+1} ... Y_k
    "pair": r"^I*[XZ]Y*[XZ]I*$",  # U_i Y ... Y V_j
    # degenerate endpoints: i = j gives U_i V_i = Y_i; an endpoint on the
    # ghost site outside the chain leaves the bare string Y_1 ... Y_k
    "pair-degenerate": r"^I*YI*$",
    "string": r"^Y+$",
}


def matchgate_classes(word: str, degenerate: bool = True) -> list[str]:
    names = list(MATCHGATE_CLASSES) if degenerate else ["left", "right", "pair"]
    return [c for c in names if re.match(MATCHGATE_CLASSES[c], word)]


def matchgate_class_check(k: int, degenerate: bool = True) -> bool:
    """Every element of the all-zeros algebra is a glider word; dim ``(k+1)(2k+1)``."""
    d = spacetime(k, preset("b", k))
    members = close_keys(d.keys(), k)
    if len(members) != (k + 1) * (2 * k + 1):
        return False
    return all(matchgate_classes(PauliWord.from_key(int(m), k).letters(), degenerate) for m in members)
