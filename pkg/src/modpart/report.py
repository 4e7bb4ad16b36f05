"""Verification report records and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CellResult:
    m: int
    n: int
    type: tuple[int, ...]
    p_count: int
    q_count: int
    witnesses: dict[str, list[str]] | None = None

    @property
    def status(self) -> str:
        return "verified" if self.p_count == self.q_count else "mismatch"

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "m": self.m,
            "n": self.n,
            "type": list(self.type),
            "p_count": self.p_count,
            "q_count": self.q_count,
            "status": self.status,
        }
        if self.witnesses is not None:
            d["witnesses"] = self.witnesses
        return d


@dataclass
class VerificationReport:
    name: str
    m: int
    n_range: tuple[int, int]
    cells: list[CellResult] = field(default_factory=list)
    flags: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def verified(self) -> bool:
        return all(c.status == "verified" for c in self.cells)

    @property
    def mismatches(self) -> list[CellResult]:
        return [c for c in self.cells if c.status == "mismatch"]

    def cell(self, type_: tuple[int, ...], n: int) -> CellResult | None:
        for c in self.cells:
            if c.n == n and tuple(c.type) == tuple(type_):
                return c
        return None

    def summary(self) -> str:
        state = "verified" if self.verified else f"{len(self.mismatches)} mismatch(es)"
        lo, hi = self.n_range
        return f"{self.name} m={self.m} n={lo}..{hi}: {len(self.cells)} cells, {state}"

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d: dict[str, Any] = {
            "name": self.name,
            "m": self.m,
            "n_range": list(self.n_range),
            "status": "verified" if self.verified else "mismatch",
            "flags": self.flags,
            "cells": [c.to_dict() for c in self.cells],
        }
        if timing:
            d["seconds"] = round(self.seconds, 6)
        return d
