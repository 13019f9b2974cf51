"""Numpy implementations of the compiled kernels, used when the extension is absent."""
from __future__ import annotations

import numpy as np

BITMAP_MAX_QUBITS = 14


def anticommuting(key: int, keys: np.ndarray, n: int) -> np.ndarray:
    mask = np.uint64((1 << n) - 1)
    a = np.uint64(key)
    shift = np.uint64(n)
    sym = ((a & mask) & (keys >> shift)) ^ ((a >> shift) & (keys & mask))
    return (np.bitwise_count(sym) & 1).astype(bool)


def closure(generators, n: int, member_cap: int):
    """Closure under ``ad_g`` for the generators, processed frontier by frontier."""
    full = (1 << (2 * n)) - 1
    use_bitmap = n <= BITMAP_MAX_QUBITS
    seen_map = np.zeros(1 << (2 * n), dtype=bool) if use_bitmap else None
    seen_set: set[int] = set()

    gens: list[int] = []
    for g in generators:
        g = int(g)
        if g == 0 or g in gens:
            continue
        gens.append(g)
    members = [np.array(gens, dtype=np.uint64)]
    if use_bitmap:
        seen_map[members[0]] = True
    else:
        seen_set.update(gens)
    size = len(gens)
    frontier = members[0]
    complete = True
    while len(frontier) and size != full:
        found = []
        for g in gens:
            hits = frontier[anticommuting(g, frontier, n)]
            if not len(hits):
                continue
            cand = np.unique(hits ^ np.uint64(g))
            if use_bitmap:
                cand = cand[~seen_map[cand]]
                seen_map[cand] = True
            else:
                fresh = [c for c in cand.tolist() if c not in seen_set]
                seen_set.update(fresh)
                cand = np.array(fresh, dtype=np.uint64)
            if len(cand):
                found.append(cand)
                size += len(cand)
            if size > member_cap:
                complete = False
                break
        if not complete:
            members.extend(found)
            break
        frontier = np.concatenate(found) if found else np.empty(0, dtype=np.uint64)
        members.append(frontier)
    return np.concatenate(members), complete
