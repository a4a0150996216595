"""Batch sweeps: generate seeded instances near a bound, decompose, verify.

A sweep is a grid of (k, n) cells. Every trial seed derives from
(seed, k, n, trial), so any row can be reproduced in isolation. Generator
exhaustion and decomposition exhaustion are counted per cell, never fatal.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .decompose import REMAINDER_KINDS, decompose_forests_bounded, decompose_forests_matching, verify_decomposition
from .generate import GenSpec, GenerationError, derive_seed, generate
from .rationals import format_value

SELECTORS = ("theorem5", "theorem2i", "theorem2ii", "conjecture", "custom")


@dataclass(frozen=True)
class ExperimentConfig:
    """Sweep description. The selector fixes the bound and remainder shape:

    theorem5    k forests + matching at bound k + 1/(3k+2)
    theorem2i   one forest + matching at bound 4/3 (k must be 1)
    theorem2ii  one forest + max-degree-2 forest at bound 3/2 (k must be 1)
    conjecture  k forests + max-degree-d forest at bound k + d/(k+d+1)
    custom      explicit bound with an explicit remainder kind
    """

    selector: str
    k_values: tuple[int, ...]
    n_values: tuple[int, ...]
    trials: int
    seed: int
    d: int | None = None
    custom_bound: Fraction | None = None
    remainder: str = "matching"
    allow_parallel: bool = False
    max_rejections: int = 10000

    def __post_init__(self):
        if self.selector not in SELECTORS:
            raise ValueError(f"unknown selector {self.selector!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if any(k < 1 for k in self.k_values):
            raise ValueError("k values must be positive")
        if any(n < 0 for n in self.n_values):
            raise ValueError("n values must be nonnegative")
        if self.selector in ("theorem2i", "theorem2ii") and any(k != 1 for k in self.k_values):
            raise ValueError(f"selector {self.selector} is defined for k=1 only")
        if self.selector == "conjecture" and (self.d is None or self.d < 1):
            raise ValueError("selector conjecture needs a positive d")
        if self.selector == "custom":
            if self.custom_bound is None:
                raise ValueError("selector custom needs an explicit bound")
            if self.remainder not in REMAINDER_KINDS:
                raise ValueError(f"remainder must be one of {REMAINDER_KINDS}")
            if self.remainder != "matching" and (self.d is None or self.d < 1):
                raise ValueError(f"remainder {self.remainder!r} needs a positive d")

    def cell_bound(self, k: int) -> Fraction:
        if self.selector == "theorem5":
            return k + Fraction(1, 3 * k + 2)
        if self.selector == "theorem2i":
            return Fraction(4, 3)
        if self.selector == "theorem2ii":
            return Fraction(3, 2)
        if self.selector == "conjecture":
            return k + Fraction(self.d, k + self.d + 1)
        return self.custom_bound

    def cell_remainder(self) -> tuple[str, int | None]:
        if self.selector in ("theorem5", "theorem2i"):
            return "matching", None
        if self.selector == "theorem2ii":
            return "forest", 2
        if self.selector == "conjecture":
            return "forest", self.d
        if self.remainder == "matching":
            return "matching", None
        return self.remainder, self.d

    def to_json(self) -> dict:
        return {
            "selector": self.selector,
            "k_values": list(self.k_values),
            "n_values": list(self.n_values),
            "trials": self.trials,
            "seed": self.seed,
            "d": self.d,
            "custom_bound": None if self.custom_bound is None else format_value(self.custom_bound),
            "remainder": self.remainder,
            "allow_parallel": self.allow_parallel,
            "max_rejections": self.max_rejections,
        }


@dataclass(frozen=True)
class CellResult:
    k: int
    n: int
    bound: Fraction
    remainder: str
    d: int | None
    attempted: int
    generated: int
    decomposed: int
    verified: int
    exhausted: int
    gen_failed: int
    seconds: float

    @property
    def clean(self) -> bool:
        return self.exhausted == 0 and self.gen_failed == 0 and self.verified == self.attempted

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "bound": format_value(self.bound),
            "remainder": self.remainder,
            "d": self.d,
            "attempted": self.attempted,
            "generated": self.generated,
            "decomposed": self.decomposed,
            "verified": self.verified,
            "exhausted": self.exhausted,
            "gen_failed": self.gen_failed,
            "success": f"{self.verified}/{self.attempted}",
            "seconds": round(self.seconds, 3),
        }


def _run_cell(args: tuple[ExperimentConfig, int, int]) -> CellResult:
    config, k, n = args
    bound = config.cell_bound(k)
    kind, d = config.cell_remainder()
    generated = decomposed = verified = exhausted = gen_failed = 0
    start = time.perf_counter()
    for trial in range(config.trials):
        seed = derive_seed(config.seed, k, n, trial)
        spec = GenSpec(
            n=n,
            target_bound=bound,
            allow_parallel=config.allow_parallel,
            seed=seed,
            max_rejections=config.max_rejections,
        )
        try:
            graph = generate(spec)
        except GenerationError:
            gen_failed += 1
            continue
        generated += 1
        if kind == "matching":
            dec = decompose_forests_matching(graph, k)
        else:
            dec = decompose_forests_bounded(graph, k, d, kind)
        if dec is None:
            exhausted += 1
            continue
        decomposed += 1
        ok, _ = verify_decomposition(graph, dec, k, d)
        if ok:
            verified += 1
    return CellResult(
        k=k,
        n=n,
        bound=bound,
        remainder=kind,
        d=d,
        attempted=config.trials,
        generated=generated,
        decomposed=decomposed,
        verified=verified,
        exhausted=exhausted,
        gen_failed=gen_failed,
        seconds=time.perf_counter() - start,
    )


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> list[CellResult]:
    cells = [(config, k, n) for k in config.k_values for n in config.n_values]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_cell, cells))
    else:
        rows = [_run_cell(cell) for cell in cells]
    rows.sort(key=lambda r: (r.k, r.n))
    return rows


_COLUMNS = (
    ("k", lambda r: str(r.k)),
    ("n", lambda r: str(r.n)),
    ("bound", lambda r: format_value(r.bound)),
    ("remainder", lambda r: r.remainder),
    ("d", lambda r: "-" if r.d is None else str(r.d)),
    ("generated", lambda r: str(r.generated)),
    ("decomposed", lambda r: str(r.decomposed)),
    ("verified", lambda r: str(r.verified)),
    ("exhausted", lambda r: str(r.exhausted)),
    ("gen_failed", lambda r: str(r.gen_failed)),
    ("success", lambda r: f"{r.verified}/{r.attempted}"),
    ("seconds", lambda r: f"{r.seconds:.2f}"),
)


def emit_report(config: ExperimentConfig, rows: list[CellResult]) -> tuple[str, dict]:
    """Aligned text table plus the versioned JSON payload."""
    cells = [[fn(r) for _, fn in _COLUMNS] for r in rows]
    widths = [
        max(len(name), *(len(row[i]) for row in cells)) if cells else len(name)
        for i, (name, _) in enumerate(_COLUMNS)
    ]
    lines = ["  ".join(name.ljust(w) for (name, _), w in zip(_COLUMNS, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(val.ljust(w) for val, w in zip(row, widths)).rstrip())
    payload = {
        "schema": 1,
        "config": config.to_json(),
        "rows": [r.to_json() for r in rows],
    }
    return "\n".join(lines) + "\n", payload
