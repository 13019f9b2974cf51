"""Mechanized checks of the universality argument for the all-ones circuit.

Qubits at positions ``4, 8, ...`` are frozen in ``|+>``.  A column ``O(l)`` of
the spacetime diagram survives as a generator on the remaining register only
if every frozen cell is ``I`` or ``X``; it is then restricted to the unfrozen
positions.  Otherwise it becomes a zero marker.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .clifford import SpacetimeDiagram, spacetime
from .errors import DomainError
from .lie import close_keys
from .pauli import PauliWord, gf2_rank
from .schedules import LambdaSchedule, preset

DIRECT_LIMIT = 12  # largest unfrozen register closed directly (4^12 keys ~ 130 MiB)


@dataclass(frozen=True)
class ModifiedGenerator:
    source_column: int
    word: PauliWord | None  # None is the zero marker

    @property
    def is_zero(self) -> bool:
        return self.word is None


@dataclass(frozen=True)
class CheckResult:
    name: str
    k: int
    passed: bool
    params: dict = field(default_factory=dict)

    def line(self) -> str:
        extra = "".join(f" {key}={val}" for key, val in self.params.items())
        return f"CHECK {self.name} k={self.k}{extra} {'PASS' if self.passed else 'FAIL'}"

    def __bool__(self) -> bool:
        return self.passed


def frozen_positions(k: int) -> list[int]:
    return list(range(4, k + 1, 4))


def unfrozen_positions(k: int) -> list[int]:
    return [i for i in range(1, k + 1) if i % 4]


@lru_cache(maxsize=64)
def all_ones_diagram(k: int) -> SpacetimeDiagram:
    return spacetime(k, preset("a", k))


def tilde(diagram: SpacetimeDiagram, ell: int) -> ModifiedGenerator:
    """Modified generator of column ``ell``; negative ``ell`` wraps by the period."""
    return ModifiedGenerator(ell, modify(diagram.column(ell)))


def modify(word: PauliWord) -> PauliWord | None:
    """Drop frozen positions; ``None`` if a frozen position carries Y or Z."""
    k = word.n_qubits
    if any(word.letter(i) in "YZ" for i in frozen_positions(k)):
        return None
    return word.restrict(unfrozen_positions(k)).phaseless()


def tilde_generators(k: int, schedule: LambdaSchedule | None = None) -> list[ModifiedGenerator]:
    diagram = all_ones_diagram(k) if schedule is None else spacetime(k, schedule)
    return [tilde(diagram, ell) for ell in range(diagram.period)]


def frozen_pattern_check(k: int) -> bool:
    """Frozen rows carry I/X, I, I, I/Z for columns 0, 1, 2, 3 mod 4."""
    d = all_ones_diagram(k)
    allowed = {0: "IX", 1: "I", 2: "I", 3: "IZ"}
    return all(
        d.cell(ell, i) in allowed[ell % 4]
        for i in frozen_positions(k)
        for ell in range(d.period)
    )


def _check_form(k: int) -> int:
    if k < 3 or (k + 1) % 4:
        raise DomainError("k must be of the form 4m - 1 with m > 0")
    return (k + 1) // 4


def lemma2_index_set(k: int) -> list[int]:
    """Signed column indices; resolve negatives with ``ell % period``."""
    m = _check_form(k)
    out = [-1]
    for j in range(m):
        out += [4 * j, 4 * j + 1, 4 * j + 2, -4 * j - 2, -4 * j - 3, -4 * j - 4]
    return out


@dataclass(frozen=True)
class LemmaOneInstance:
    k1: int
    k2: int
    set_s1: tuple[ModifiedGenerator, ...]
    set_s2: tuple[ModifiedGenerator, ...]

    def __post_init__(self):
        if self.k1 < 1 or self.k2 < 1:
            raise DomainError("register sizes must be positive")


def lemma2_instance(k: int) -> LemmaOneInstance:
    """Split of the index set: the last group forms S2, the rest S1."""
    m = _check_form(k)
    if m < 2:
        raise DomainError("the split needs m >= 2 (k >= 7)")
    d = all_ones_diagram(k)
    idx = lemma2_index_set(k)
    s1 = tuple(tilde(d, ell) for ell in idx[:-6])
    s2 = tuple(tilde(d, ell) for ell in idx[-6:])
    return LemmaOneInstance(3 * (m - 1), 3, s1, s2)


def _split(word: PauliWord, k1: int) -> tuple[int, int]:
    """Phaseless keys of the parts on the first ``k1`` and the remaining qubits."""
    n = word.n_qubits
    lo = (1 << k1) - 1
    k2 = n - k1
    a = (word.x & lo) | ((word.z & lo) << k1)
    b = (word.x >> k1) | ((word.z >> k1) << k2)
    return a, b


def check_condition_one(instance: LemmaOneInstance, direct: bool = True) -> bool:
    """S1 lives on the first ``k1`` qubits and closes to every Pauli there."""
    k1 = instance.k1
    keys = []
    for g in instance.set_s1:
        if g.is_zero:
            return False
        a, b = _split(g.word, k1)
        if b:
            return False
        keys.append(a)
    if not direct:
        return True
    return len(close_keys(keys, k1)) == 4**k1 - 1


def check_condition_two(instance: LemmaOneInstance) -> bool:
    """Every S2 element has a nontrivial head and the tails span all Paulis."""
    tails = []
    for g in instance.set_s2:
        if g.is_zero or g.word.n_qubits != instance.k1 + instance.k2:
            return False
        a, b = _split(g.word, instance.k1)
        if a == 0:
            return False
        tails.append(b)
    return gf2_rank(tails) == 2 * instance.k2


def check_lemma1(instance: LemmaOneInstance) -> bool:
    return check_condition_one(instance) and check_condition_two(instance)


def block_repetition_check(k: int, strict: bool = False) -> bool:
    """``O(+-(l+4), i+4) == O(+-l, i)`` for ``l = 0..k-4``, ``i = l..l+3`` inside the chain.

    The backward branch at ``l = 0`` compares against the seed column ``Z_1``
    itself and fails at ``(l, i) = (0, 1)``; it is skipped unless ``strict``.
    """
    d = all_ones_diagram(k)
    for ell in range(k - 3):
        for i in range(max(ell, 1), ell + 4):
            if i + 4 > k:
                continue
            for sign in (1, -1):
                if sign < 0 and ell == 0 and not strict:
                    continue
                if d.cell(sign * (ell + 4), i + 4) != d.cell(sign * ell, i):
                    return False
    return True


def reflected_a(d: SpacetimeDiagram, ell: int, i: int) -> int:
    """Z-bit with mirror images: ``a(-i) = a(i)``, ``a(0) = a(k+1) = 0``, period ``2(k+1)`` in ``i``."""
    ring = 2 * (d.k + 1)
    i %= ring
    if i > d.k + 1:
        i = ring - i
    return d.a(ell, i)  # zero at 0 and k+1


def literal_a(d: SpacetimeDiagram, ell: int, i: int) -> int:
    """Z-bit with ``a(-i) = a(i-2)`` and ``a(k+i) = a(k+2-i)`` (``a(-1) = a(0) = a(k+1) = 0``)."""
    k = d.k
    while True:
        if i in (-1, 0, k + 1):
            return 0
        if i < -1:
            i = -i - 2
        elif i > k + 1:
            i = 2 * k + 2 - i
        else:
            return d.a(ell, i)


def check_recurrence(k: int, r: int, boundary: str = "mirror") -> bool:
    """Scale-``2^r`` recurrence on the Z-bits at every cell, periodic in ``l``."""
    if r < 0 or 2**r >= k:
        raise DomainError("need 0 <= r with 2^r < k")
    d = all_ones_diagram(k)
    get = {"mirror": reflected_a, "literal": literal_a}[boundary]
    s = 2**r
    for ell in range(d.period):
        for i in range(1, k + 1):
            rhs = get(d, ell, i - s) ^ d.a(ell, i) ^ get(d, ell, i + s) ^ d.a(ell - s, i)
            if d.a(ell + s, i) != rhs:
                return False
    return True


def check_bit_shift(k: int, shift: int) -> bool:
    """``b(l, i) == a(l + shift, i)`` at every cell of the all-ones diagram."""
    d = all_ones_diagram(k)
    return all(
        d.b(ell, i) == d.a(ell + shift, i) for ell in range(d.period) for i in range(1, k + 1)
    )


def padding_check(k: int, q: int) -> bool:
    """Each ``O~_k(l)``, ``l`` in the index set of ``q``, is ``O~_q(l)`` padded by identities."""
    dk, dq = all_ones_diagram(k), all_ones_diagram(q)
    nq = len(unfrozen_positions(q))
    for ell in lemma2_index_set(q):
        a, b = tilde(dk, ell), tilde(dq, ell)
        if a.is_zero or b.is_zero:
            return False
        if (a.word.x >> nq) or (a.word.z >> nq):
            return False
        if a.word.restrict(range(1, nq + 1)).key != b.word.key:
            return False
    return True


def induction_step(q: int) -> list[CheckResult]:
    """Checks that carry the universality statement from ``q - 4`` to ``q``."""
    inst = lemma2_instance(q)
    return [
        CheckResult("padding", q, padding_check(q, q - 4), {"from": q - 4}),
        CheckResult("lemma1-support", q, check_condition_one(inst, direct=False)),
        CheckResult("lemma1-condition2", q, check_condition_two(inst)),
        CheckResult("block-repetition", q, block_repetition_check(q)),
    ]


def verify_theorem1(k: int, direct_limit: int = DIRECT_LIMIT) -> tuple[int, bool, list[CheckResult]]:
    """Universality on ``3m`` unfrozen qubits, ``m = (k+1) // 4``.

    With ``q = 4m - 1``: the generators ``O~_k(l)`` for ``l`` in the index set
    of ``q`` must be padded copies of ``O~_q(l)``.  Their closure is computed
    directly when ``3m <= direct_limit``; beyond that the induction from the
    largest directly verified ``q`` is mechanized step by step.
    """
    if k < 3:
        raise DomainError("need k >= 3")
    m = (k + 1) // 4
    q = 4 * m - 1
    checks = []
    if k != q:
        checks.append(CheckResult("padding", k, padding_check(k, q), {"from": q}))
    base_q = q if 3 * m <= direct_limit else 4 * (direct_limit // 3) - 1
    d = all_ones_diagram(base_q)
    keys = [tilde(d, ell).word.key for ell in lemma2_index_set(base_q)
            if not tilde(d, ell).is_zero]
    n = 3 * (base_q + 1) // 4
    full = len(close_keys(keys, n)) == 4**n - 1
    checks.append(CheckResult("closure", base_q, full, {"qubits": n}))
    for step in range(base_q + 4, q + 1, 4):
        checks += induction_step(step)
    return m, all(c.passed for c in checks), checks
