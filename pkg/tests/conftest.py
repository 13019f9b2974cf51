"""Dense-matrix oracles shared by the test modules.

These use their own conventions (qubit 1 is the *first* Kronecker factor) so
that they do not share bit-packing code with the package under test.
"""
from __future__ import annotations

from functools import reduce

import numpy as np
import pytest

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1, -1]).astype(complex)
H = (X + Z) / np.sqrt(2)
S = np.diag([1, 1j])
LETTER = {"I": I2, "X": X, "Y": Y, "Z": Z}


def kron_all(ops):
    return reduce(np.kron, ops)


def dense_word(word) -> np.ndarray:
    """Matrix of a PauliWord including its phase (qubit 1 first factor)."""
    return (1j) ** word.phase * kron_all([LETTER[c] for c in word.letters()])


def dense_letters(text: str) -> np.ndarray:
    return kron_all([LETTER[c] for c in text])


def dense_layer(n: int, lam, periodic: bool = False) -> np.ndarray:
    """``(prod H S^lam)(prod CZ)`` on ``n`` qubits."""
    dim = 2**n
    bits = [(np.arange(dim) >> (n - 1 - j)) & 1 for j in range(n)]  # qubit j+1
    phase = np.zeros(dim, dtype=int)
    for j in range(n - 1):
        phase += bits[j] * bits[j + 1]
    if periodic and n > 2:
        phase += bits[0] * bits[n - 1]
    cz = np.diag((-1.0) ** phase)
    single = kron_all([H @ np.linalg.matrix_power(S, int(lam[j])) for j in range(n)])
    return single @ cz


def lie_span_dimension(mats) -> int:
    """Real dimension of the Lie algebra generated by ``i * mats`` (brute force)."""
    basis: list[np.ndarray] = []

    def add(m) -> bool:
        v = m.reshape(-1)
        for b in basis:
            v = v - np.vdot(b, v) * b
        nrm = np.linalg.norm(v)
        if nrm > 1e-9:
            basis.append(v / nrm)
            return True
        return False

    elems = []
    for m in mats:
        if add(1j * m):
            elems.append(1j * m)
    changed = True
    while changed:
        changed = False
        current = list(elems)
        for a in current:
            for b in current:
                c = a @ b - b @ a
                if np.linalg.norm(c) > 1e-9 and add(c):
                    elems.append(c)
                    changed = True
    return len(basis)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# acceptance report ---------------------------------------------------------------
_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line per acceptance criterion and print it."""
    def _report(number: int, title: str, passed: bool, detail: str) -> str:
        line = f"{'PASS' if passed else 'FAIL'} criterion {number:2d} {title}: {detail}"
        print(line)
        request.config.stash[_ACCEPTANCE_KEY].append((number, line))
        return line

    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
