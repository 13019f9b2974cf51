import numpy as np
import pytest

from duclab import kernels
from duclab.clifford import spacetime
from duclab.errors import CapExhausted
from duclab.lie import PauliSet, classify, close, close_keys, closure_dim
from duclab.pauli import PauliWord
from duclab.schedules import preset

from conftest import dense_word, lie_span_dimension
from reference import TABLES


def _set(*texts):
    words = [PauliWord.from_string(t) for t in texts]
    return PauliSet.of(words, words[0].n_qubits)


def test_single_qubit_su2():
    assert len(close(_set("Z", "Y"))) == 3


def test_commuting_generator_is_alone():
    out = close(_set("XX"))
    assert len(out) == 1 and PauliWord.from_string("XX") in out


def test_commuting_pair_stays_abelian():
    assert len(close(_set("XX", "ZZ"))) == 2


def test_classify_examples():
    assert classify(8256, 7).name == "sp(2^k)"
    assert classify(120, 7).name == "so(2(k+1))"
    assert classify(120, 4).name == "so(2^k)"
    assert classify(0, 3).name == "unknown"
    assert classify(77, 3).name == "unknown"
    # k = 3: sp(2^k) and so(2(k+1)) are both 36-dimensional
    assert classify(36, 3).names == ("sp(2^k)",)
    assert classify(10, 2).names == ("sp(2^k)", "sp(2k)")
    assert classify(10, 2).name == "sp(2^k)/sp(2k)"


def test_idempotent_and_order_independent(rng):
    for _ in range(20):
        keys = [int(v) for v in rng.integers(1, 4**4, size=4)]
        first = close_keys(keys, 4)
        again = close_keys([int(v) for v in first], 4)
        shuffled = close_keys(list(reversed(keys)), 4)
        assert np.array_equal(first, again)
        assert np.array_equal(first, shuffled)


def test_dimension_against_dense_span(rng):
    for trial in range(50):
        n = 2 if trial < 25 else 3
        size = int(rng.integers(1, 4))
        keys = sorted({int(v) for v in rng.integers(1, 4**n, size=size)})
        members = close_keys(keys, n)
        mats = [dense_word(PauliWord.from_key(k, n)) for k in keys]
        assert len(members) == lie_span_dimension(mats)


@pytest.mark.parametrize("n,keys", [(3, [1, 8, 2 | 16]), (5, [1, 1 << 5, 3, 6 | (6 << 5)]),
                                    (7, [1 << 7, 3, 6, 12, 24, 48, 96, 1, 3 << 7])])
def test_backends_agree(n, keys):
    mods = kernels.backend_modules()
    results = []
    for mod in mods.values():
        members, complete = mod.closure(keys, n, 4**n)
        assert complete
        results.append(np.sort(np.asarray(members, dtype=np.uint64)))
    for r in results[1:]:
        assert np.array_equal(r, results[0])


def test_cython_backend_is_built():
    assert "cython" in kernels.backend_modules()


def test_member_cap():
    with pytest.raises(CapExhausted) as err:
        close_keys(spacetime(4, preset("a", 4)).keys(), 4, member_cap=10)
    assert err.value.cap == 10


def test_memory_guard(monkeypatch):
    monkeypatch.setenv("DUCLAB_MEM_GUARD_MB", "0")
    with pytest.raises(CapExhausted):
        close_keys([1, 1 << 3, 3], 3)


def test_closure_dim_small_tables():
    for name in ("a", "b", "j"):
        periods, dims, labels = TABLES[name]
        for k in (2, 3, 4):
            res = closure_dim(k, preset(name, k))
            assert (res.period, res.dimension) == (periods[k - 2], dims[k - 2])
            assert labels[k - 2] in res.label.names
            assert res.tsv() == f"{k}\t{res.period}\t{res.dimension}\t{res.label.name}"


def test_k1_all_ones_is_su2():
    res = closure_dim(1, preset("a", 1))
    assert (res.period, res.dimension) == (3, 3)
    assert res.label.names == ("su(2^k)", "sp(2^k)", "sp(2k)")
