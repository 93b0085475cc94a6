"""Run configuration shared by the CLI and the reproduction report."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class RunConfig:
    sieve_limit: int = 1_000_000
    kappas: tuple[int, ...] = (2, 3)
    zs: tuple[complex, ...] = (-1, 1, 2)
    checkpoints: tuple[int, ...] = (10**2, 10**3, 10**4, 10**5, 10**6)
    out_dir: str | None = None
    fmt: str = "json"
    seed: int = 12345
    parity_limit: int = 100_000  # largest n for the per-k f_k tables

    def __post_init__(self):
        if self.sieve_limit < 2:
            raise ValueError(f"sieve_limit must be >= 2, got {self.sieve_limit}")
        if list(self.checkpoints) != sorted(self.checkpoints):
            raise ValueError(f"checkpoints must be ascending: {self.checkpoints}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"format must be json or csv, got {self.fmt!r}")
        if any(k < 2 for k in self.kappas):
            raise ValueError(f"all kappas must be >= 2: {self.kappas}")
