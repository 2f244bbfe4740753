"""Check reports: per-condition pass/fail with a basis-tuple witness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linfield import BasedSpace, Field

__all__ = ["Witness", "Check", "CheckReport", "residual_check", "compare", "compare_all"]


@dataclass(frozen=True)
class Witness:
    inputs: tuple            # basis labels, one per input leg
    residual: tuple          # full residual vector (field elements as strings)

    def to_dict(self):
        return {"inputs": list(self.inputs), "residual": list(self.residual)}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Witness | None = None
    note: str = ""

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    title: str = ""
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    @property
    def names(self) -> list:
        return [c.name for c in self.checks]

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, check: Check) -> "CheckReport":
        self.checks.append(check)
        return self

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.note))
        return self

    def summary(self, name: str, note: str = "") -> Check:
        """Collapse into a single check carrying the first failure's witness."""
        fails = self.failures
        if not fails:
            return Check(name, True, note=note)
        first = fails[0]
        return Check(name, False, first.witness, note or f"first failure: {first.name}")

    def to_dict(self):
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def render(self) -> str:
        lines = [f"== {self.title}" if self.title else "=="]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.witness is not None:
                w = c.witness
                line += f"  witness=({', '.join(w.inputs)}) residual=[{' '.join(w.residual)}]"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'} "
                     f"({len(self.checks) - len(self.failures)}/{len(self.checks)})")
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def residual_check(name: str, field_: Field, residual: np.ndarray, n_out: int,
                   inputs: Sequence[BasedSpace]) -> Check:
    """Pass iff ``residual`` vanishes; ``residual`` has ``n_out`` output legs then
    one leg per space in ``inputs``.  The witness is the first failing input
    tuple in lexicographic order together with its full residual vector."""
    residual = np.asarray(residual, dtype=object)
    in_dims = [s.dim for s in inputs]
    n_in = int(np.prod(in_dims)) if in_dims else 1
    cols = residual.reshape(-1, n_in)
    nz = np.nonzero(np.any(cols != 0, axis=0))[0]
    if len(nz) == 0:
        return Check(name, True)
    j = int(nz[0])
    idx = np.unravel_index(j, in_dims) if in_dims else ()
    labels = tuple(s.labels[i] for s, i in zip(inputs, idx))
    vec = tuple(field_.format(v) for v in cols[:, j])
    return Check(name, False, Witness(labels, vec))


def compare(name: str, field_: Field, lhs, rhs, n_out: int,
            inputs: Sequence[BasedSpace]) -> Check:
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    if lhs.shape != rhs.shape:
        raise ValueError(f"{name}: shape mismatch {lhs.shape} vs {rhs.shape}")
    return residual_check(name, field_, field_.reduce(lhs - rhs), n_out, inputs)


def compare_all(name: str, field_: Field, pairs) -> Check:
    """Several laws under one name; reports the first one that fails."""
    for lhs, rhs, n_out, inputs in pairs:
        c = compare(name, field_, lhs, rhs, n_out, inputs)
        if not c.passed:
            return c
    return Check(name, True)

