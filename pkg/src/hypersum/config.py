"""Run configuration: defaults, validation, environment overrides.

Every output artifact embeds the exact configuration it was produced
with, so any run can be reproduced from its own output file. Flag values
resolve in order: command line > --config file > HYPERSUM_* environment
variable > built-in default.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, replace
from typing import Any

from .cluster import MEDOID_UPDATES
from .codebook import DEFAULT_LEVELS, SCHEMES
from .tokenize import TOKENIZERS

__all__ = ["ENV_PREFIX", "MEDOID_ALGORITHMS", "RunConfig"]

ENV_PREFIX = "HYPERSUM_"

MEDOID_ALGORITHMS = ("alternating", "fastpam", "fasterpam", "lead")

DEFAULT_SEEDS = (0, 1, 2, 3, 4)


@dataclass
class RunConfig:
    dim: int = 10_000
    scheme: str = "thermometer"
    tokenizer: str = "word"
    medoid: str = "alternating"
    medoid_update: str = "member-argmin"
    seeds: tuple[int, ...] = DEFAULT_SEEDS
    k: str | int = "oracle"
    max_iters: int = 100
    restarts: int = 8
    threads: int = 1
    levels: int = DEFAULT_LEVELS
    repeats: int = 3
    figures: bool = True
    format: str = "jsonl"
    input: tuple[str, ...] = ()
    output: str | None = None

    def validate(self) -> "RunConfig":
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.tokenizer not in TOKENIZERS:
            raise ValueError(f"tokenizer must be one of {tuple(TOKENIZERS)}")
        if self.medoid not in MEDOID_ALGORITHMS:
            raise ValueError(f"medoid must be one of {MEDOID_ALGORITHMS}")
        if self.medoid_update not in MEDOID_UPDATES:
            raise ValueError(f"medoid-update must be one of {MEDOID_UPDATES}")
        if not self.seeds:
            raise ValueError("need at least one seed")
        if any(s < 0 or s >= 2**64 for s in self.seeds):
            raise ValueError("seeds must be unsigned 64-bit integers")
        if self.k != "oracle":
            if not isinstance(self.k, int) or self.k < 1:
                raise ValueError(f"k must be 'oracle' or a positive integer, got {self.k!r}")
        if self.max_iters < 1:
            raise ValueError("max-iters must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.levels < 2:
            raise ValueError("levels must be >= 2")
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if self.format != "jsonl":
            raise ValueError(f"only the jsonl format is supported, got {self.format!r}")
        return self

    def validate_axes(self) -> "RunConfig":
        """Like validate(), but scheme/medoid/tokenizer may be comma lists
        (the ablation grid expands them into one run per combination)."""
        axes = {"scheme": SCHEMES, "medoid": MEDOID_ALGORITHMS,
                "tokenizer": tuple(TOKENIZERS)}
        firsts = {}
        for name, allowed in axes.items():
            parts = str(getattr(self, name)).split(",")
            for part in parts:
                if part not in allowed:
                    raise ValueError(f"{name} value {part!r} not in {allowed}")
            firsts[name] = parts[0]
        replace(self, **firsts).validate()
        return self

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["seeds"] = list(self.seeds)
        d["input"] = list(self.input)
        return d

    @classmethod
    def from_dict(cls, raw: dict[str, Any], check: bool = True) -> "RunConfig":
        """Rebuild from a serialized config. ``check=False`` skips field
        validation so replayed ablation configs keep their axis lists."""
        known = {f: raw[f] for f in cls.__dataclass_fields__ if f in raw}
        if "seeds" in known:
            known["seeds"] = tuple(int(s) for s in known["seeds"])
        if "input" in known:
            known["input"] = tuple(known["input"])
        if "k" in known and known["k"] != "oracle":
            known["k"] = int(known["k"])
        cfg = cls(**known)
        return cfg.validate() if check else cfg

    def with_overrides(self, **kwargs: Any) -> "RunConfig":
        return replace(self, **kwargs).validate()


def parse_seeds(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def parse_k(text: str) -> str | int:
    return "oracle" if text == "oracle" else int(text)


def env_default(name: str) -> str | None:
    """Environment override for a flag, e.g. dim -> HYPERSUM_DIM."""
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
