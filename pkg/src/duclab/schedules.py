"""Binary S-gate schedules for the H / HS dual-unitary Clifford family.

A :class:`LambdaSchedule` describes the *virtual* circuit read sideways from
the resource-state preparation: ``entries[t][i]`` says whether the layer
applied at virtual step ``t + 1`` puts an ``S`` on virtual qubit ``i + 1``.
Rows repeat with period ``period_t``.

The named presets are written in terms of the physical brickwork, where
``lam(i, t)`` is indexed by chain site ``i`` and preparation layer ``t``.
Reading the circuit sideways sends site ``i`` to virtual step ``i`` and layer
``t`` to virtual qubit ``k - t + 1`` (the qubit the measurements couple to is
the last preparation layer).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import DomainError


@dataclass(frozen=True)
class LambdaSchedule:
    k: int
    period_t: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("k must be positive")
        if self.period_t < 1 or len(self.entries) != self.period_t:
            raise ValueError("need exactly period_t rows")
        for row in self.entries:
            if len(row) != self.k or any(v not in (0, 1) for v in row):
                raise ValueError("rows must hold k entries from {0, 1}")

    @classmethod
    def uniform(cls, k: int, value: int) -> "LambdaSchedule":
        return cls(k, 1, ((value,) * k,))

    def row(self, step: int) -> tuple[int, ...]:
        """S pattern of virtual step ``step`` (1-based, applied cyclically)."""
        return self.entries[(step - 1) % self.period_t]

    def is_uniform(self) -> bool:
        return len(set(self.entries)) == 1

    def physical(self, n_sites: int) -> list[list[int]]:
        """Physical ``lam[i][t]`` (0-based site, 0-based layer) for ``n_sites``."""
        k = self.k
        return [[self.row(i + 1)[k - t - 1] for t in range(k)] for i in range(n_sites)]

    # file format -----------------------------------------------------------
    def dumps(self) -> str:
        lines = [f"{self.k} {self.period_t}"]
        lines += ["".join(str(v) for v in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "LambdaSchedule":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty schedule file")
        try:
            k, period_t = (int(v) for v in lines[0].split())
        except ValueError:
            raise ValueError("first line must be 'k period_t'") from None
        rows = lines[1:]
        if len(rows) != period_t:
            raise ValueError(f"expected {period_t} rows, found {len(rows)}")
        entries = []
        for row in rows:
            if len(row) != k or set(row) - {"0", "1"}:
                raise ValueError(f"bad schedule row {row!r}")
            entries.append(tuple(int(c) for c in row))
        return cls(k, period_t, tuple(entries))

    @classmethod
    def load(cls, path: str | Path) -> "LambdaSchedule":
        return cls.loads(Path(path).read_text())


@dataclass(frozen=True)
class Preset:
    name: str
    rule: str
    site_period: int
    lam: Callable[[int, int, int], bool]

    def build(self, k: int) -> LambdaSchedule:
        rows = []
        for step in range(1, self.site_period + 1):
            rows.append(tuple(int(self.lam(step, k - q + 1, k)) for q in range(1, k + 1)))
        return LambdaSchedule(k, self.site_period, tuple(rows))


PRESETS: dict[str, Preset] = {
    p.name: p
    for p in [
        Preset("a", "lam(i,t) = 1", 1, lambda i, t, k: True),
        Preset("b", "lam(i,t) = 0", 1, lambda i, t, k: False),
        Preset("c", "lam(i,t) = [k - t = 1 mod 2]", 1, lambda i, t, k: (k - t) % 2 == 1),
        Preset("d", "lam(i,t) = [k - t = 1 mod 4]", 1, lambda i, t, k: (k - t) % 4 == 1),
        Preset("e", "lam(i,t) = [i = 1 mod 2]", 2, lambda i, t, k: i % 2 == 1),
        Preset("f", "lam(i,t) = [i = 1 mod 4]", 4, lambda i, t, k: i % 4 == 1),
        Preset("g", "lam(i,t) = [i = 1 mod 16]", 16, lambda i, t, k: i % 16 == 1),
        Preset(
            "h",
            "lam(i,t) = [i = 1 mod 2 and k - t = 0 mod 2]",
            2,
            lambda i, t, k: i % 2 == 1 and (k - t) % 2 == 0,
        ),
        Preset("i", "lam(i,t) = [t = 2]", 1, lambda i, t, k: t == 2),
        Preset("j", "lam(i,t) = [t = 1]", 1, lambda i, t, k: t == 1),
    ]
}
ALIASES = {"all-ones": "a", "all-zeros": "b"}


def preset(name: str, k: int) -> LambdaSchedule:
    key = ALIASES.get(name, name)
    if key not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS) + sorted(ALIASES)}")
    return PRESETS[key].build(k)


def explain(name: str) -> str:
    p = PRESETS[ALIASES.get(name, name)]
    return (
        f"preset {p.name}: {p.rule} (site i, preparation layer t); "
        f"virtual qubit q = k - t + 1, virtual step = site, row period {p.site_period}"
    )
