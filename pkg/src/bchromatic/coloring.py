"""Colouring value types shared by the solvers and the certificate checkers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Sequence


@dataclass(frozen=True)
class Coloring:
    """Vertex -> colour map using every colour in ``0..b-1``."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(int(c) for c in self.assignment))
        if any(c < 0 for c in self.assignment):
            raise ValueError("colours must be non-negative")
        used = set(self.assignment)
        if used != set(range(len(used))):
            raise ValueError(f"colours must be exactly 0..b-1, got {sorted(used)}")

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> "Coloring":
        """Relabel colours in order of first appearance."""
        relabel: dict[int, int] = {}
        return cls(tuple(relabel.setdefault(c, len(relabel)) for c in colors))

    @property
    def b(self) -> int:
        return len(set(self.assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.b)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    @property
    def class_sizes(self) -> dict[int, int]:
        """Histogram ``j -> number of colour classes with exactly j vertices``."""
        return dict(sorted(Counter(len(cls) for cls in self.classes()).items()))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class BColoringCertificate:
    """A colouring plus one representative vertex per colour."""

    coloring: Coloring
    reps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "reps", tuple(int(r) for r in self.reps))

    @property
    def b(self) -> int:
        return self.coloring.b

    def to_json(self) -> dict[str, Any]:
        return {
            "b": self.b,
            "colors": list(self.coloring.assignment),
            "representatives": list(self.reps),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "BColoringCertificate":
        cert = cls(Coloring(tuple(data["colors"])), tuple(data["representatives"]))
        if cert.b != data["b"]:
            raise ValueError(f"certificate declares b={data['b']} but uses {cert.b} colours")
        return cert
