import numpy as np
import pytest

from duclab.errors import DimensionError, DomainError, ResourceGuardError
from duclab.mbqc import (
    StateVector, adaptive_run, cocycle_sign, format_bits, half_chain_entropy, injectivity_span,
    literal_cocycle_failures, matchgate_class_check, matchgate_classes, multiplicative_generation,
    pauli_action, physical_amplitude, prepare_resource, projective_rep_check, sideways_amplitude,
    stabilizer_check, stabilizers, symmetry_check, symmetry_pattern, trajectory_check,
)
from duclab.clifford import spacetime, symmetry_row
from duclab.pauli import PauliWord
from duclab.schedules import preset

from conftest import dense_layer, dense_letters, dense_word, kron_all, H, S


def _dense_resource(n, k, sch, periodic=False):
    state = np.full(2**n, 2 ** (-n / 2), dtype=complex)
    lam = sch.physical(n) if k else []
    for t in range(k):
        # state index is little-endian in the package; convert through a reversal
        row = [lam[i][t] for i in range(n)]
        state = dense_layer(n, row, periodic) @ state
    return state


def _to_big_endian(amps, n):
    idx = np.arange(2**n)
    rev = np.zeros_like(idx)
    for j in range(n):
        rev |= ((idx >> j) & 1) << (n - 1 - j)
    out = np.empty_like(amps)
    out[rev] = amps
    return out


@pytest.mark.parametrize("n,k,name", [(4, 1, "a"), (5, 2, "a"), (6, 3, "h"), (5, 2, "f")])
def test_resource_state_against_dense(n, k, name):
    sch = preset(name, k)
    ours = _to_big_endian(prepare_resource(n, k, sch).amplitudes, n)
    assert np.allclose(ours, _dense_resource(n, k, sch))
    per = _to_big_endian(prepare_resource(n, k, sch, "periodic").amplitudes, n)
    assert np.allclose(per, _dense_resource(n, k, sch, periodic=True))


def test_pauli_action_matches_dense(rng):
    n = 4
    for _ in range(30):
        w = PauliWord(n, int(rng.integers(16)), int(rng.integers(16)), int(rng.integers(4)))
        v = rng.normal(size=16) + 1j * rng.normal(size=16)
        ours = _to_big_endian(pauli_action(w, v), n)
        assert np.allclose(ours, dense_word(w) @ _to_big_endian(v, n))


def test_k1_interior_stabilizer_sign():
    # with S = diag(1, i) the interior stabilizer of the one-layer state is -X Y X
    for n in range(5, 9):
        st = prepare_resource(n, 1)
        for i in range(2, n):
            xyx = PauliWord.single(n, i - 1, "X") * PauliWord.single(n, i, "Y") * PauliWord.single(n, i + 1, "X")
            assert abs(st.expectation(xyx) + 1) < 1e-10
    # independent dense construction agrees
    v = kron_all([H @ S] * 3) @ np.diag([1, 1, 1, -1, 1, 1, -1, 1]).astype(complex) @ np.full(8, 8**-0.5)
    assert np.isclose(np.vdot(v, dense_letters("XYX") @ v).real, -1)


@pytest.mark.parametrize("n,k", [(n, k) for k in (1, 2, 3) for n in range(max(k, 2), 13, 3)])
def test_stabilizers_dense(n, k):
    st = prepare_resource(n, k)
    assert stabilizer_check(st, n, k)
    assert len({s.key for s in stabilizers(n, k)}) == n


def test_periodic_stabilizers():
    st = prepare_resource(8, 2, None, "periodic")
    assert stabilizer_check(st, 8, 2, boundary="periodic")


@pytest.mark.parametrize("n,k", [(4, 4), (6, 2), (8, 3), (9, 3)])
def test_sideways_reading(n, k, rng):
    sch = preset("a", k)
    for _ in range(20):
        th = rng.uniform(0, 2 * np.pi, n)
        s = rng.integers(0, 2, n)
        assert abs(sideways_amplitude(n, k, sch, th, s) - physical_amplitude(n, k, sch, th, s)) < 1e-10


@pytest.mark.parametrize("name", ["c", "f", "h"])
def test_sideways_reading_other_presets(name, rng):
    sch = preset(name, 3)
    th = rng.uniform(0, 2 * np.pi, 7)
    s = rng.integers(0, 2, 7)
    assert abs(sideways_amplitude(7, 3, sch, th, s) - physical_amplitude(7, 3, sch, th, s)) < 1e-10


def test_born_rule_sums_to_one(rng):
    n, k = 6, 2
    th = rng.uniform(0, 2 * np.pi, n)
    total = 0.0
    for b in range(2**n):
        s = [(b >> j) & 1 for j in range(n)]
        total += abs(sideways_amplitude(n, k, None, th, s)) ** 2
    assert abs(total - 1) < 1e-12


def test_adaptive_trajectories():
    n, k = 9, 3
    for seed in range(25):
        th = np.random.default_rng(100 + seed).uniform(0, 2 * np.pi, n)
        rec, dist = adaptive_run(n, k, None, th, seed)
        fid, perr = trajectory_check(n, k, None, rec)
        assert fid >= 1 - 1e-8 and perr < 1e-10
        assert abs(sum(dist.values()) - 1) < 1e-12
        assert len(rec.log_lines()) == n


def test_forced_all_zero_outcomes_need_no_correction():
    th = np.linspace(0.1, 0.9, 6)
    rec, _ = adaptive_run(6, 2, None, th, forced=[0] * 6)
    assert rec.boundary_word.is_identity()
    assert rec.corrected_angles == list(th)


def test_adaptive_guards():
    with pytest.raises(DimensionError):
        adaptive_run(5, 2, None, [0.0] * 4)
    with pytest.raises(ResourceGuardError):
        prepare_resource(40, 2)


def test_k1_symmetry_pattern_and_translations():
    st = prepare_resource(6, 1, None, "periodic")
    for text in ("ZZIZZI", "IZZIZZ", "ZIZZIZ"):
        assert np.isclose(st.expectation(PauliWord.from_string(text)), 1)
    bits = symmetry_pattern(6, 1, None, PauliWord.single(1, 1, "Z"))
    assert format_bits(bits, 6) == "110110"


def test_symmetry_pattern_follows_first_row():
    # site i carries Z exactly when O(i) acts as X or Y on qubit 1
    for k in (1, 2, 7):
        d = spacetime(k, preset("a", k))
        n = d.period
        bits = symmetry_pattern(n, k, None, PauliWord.single(k, 1, "Z"))
        row = symmetry_row(d)
        assert "".join("Z" if (bits >> (i - 1)) & 1 else "I" for i in range(1, n)) == row[1:n]


def test_symmetry_group_k2():
    assert symmetry_check(8, 2)
    with pytest.raises(DomainError):
        symmetry_check(6, 2)


def test_projective_representation():
    assert cocycle_sign(PauliWord.single(1, 1, "X"), PauliWord.single(1, 1, "Z")) == 1
    assert cocycle_sign(PauliWord.single(1, 1, "Z"), PauliWord.single(1, 1, "X")) == -1
    for k in (1, 2, 3):
        assert projective_rep_check(k)


def test_literal_cocycle_cannot_hold():
    assert len(literal_cocycle_failures(1)) == 4
    assert len(literal_cocycle_failures(2)) == 96


@pytest.mark.parametrize("k,span", [(1, 4), (2, 16), (3, 64)])
def test_injectivity(k, span):
    assert injectivity_span(k) == span
    assert multiplicative_generation(k)


def test_injectivity_short_words_do_not_span():
    assert injectivity_span(3, length=2) < 64


@pytest.mark.parametrize("n,k", [(8, 1), (10, 2), (12, 3)])
def test_entropy(n, k):
    s = half_chain_entropy(prepare_resource(n, k))
    assert abs(s * np.log(2) - k * np.log(2)) < 1e-8


def test_entropy_of_product_state():
    assert half_chain_entropy(StateVector.plus(6)) < 1e-12


def test_matchgate_classes():
    assert matchgate_classes("YYXII", degenerate=False) == ["left"]
    assert "pair" in matchgate_classes("IXYZ")
    assert matchgate_classes("IYI", degenerate=False) == []
    assert matchgate_classes("IYI") == ["pair-degenerate"]
    assert matchgate_classes("YYY") == ["string"]
    assert matchgate_classes("XIX") == []


@pytest.mark.parametrize("k", range(2, 8))
def test_matchgate_algebra(k):
    assert matchgate_class_check(k)
    assert not matchgate_class_check(k, degenerate=False)
