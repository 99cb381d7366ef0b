"""Resource caps, overridable through environment variables."""

from __future__ import annotations

import dataclasses
import os

HECKE_CAP_ENV = "BRAIDFORGE_HECKE_CAP"
SKEIN_CAP_ENV = "BRAIDFORGE_SKEIN_CAP"
HANDLE_BUDGET_ENV = "BRAIDFORGE_HANDLE_BUDGET"


@dataclasses.dataclass(frozen=True)
class Caps:
    hecke_strands: int = 8          # H_n has n! basis elements
    skein_crossings: int = 14       # skein tree is exponential in crossings
    handle_budget: int = 10**7      # handle-reduction steps before giving up

    @classmethod
    def from_env(cls) -> "Caps":
        def read(name: str, default: int) -> int:
            raw = os.environ.get(name)
            if raw is None or raw.strip() == "":
                return default
            value = int(raw)
            if value < 1:
                raise ValueError(f"{name} must be a positive integer, got {raw!r}")
            return value

        return cls(
            hecke_strands=read(HECKE_CAP_ENV, cls.hecke_strands),
            skein_crossings=read(SKEIN_CAP_ENV, cls.skein_crossings),
            handle_budget=read(HANDLE_BUDGET_ENV, cls.handle_budget),
        )


def default_caps() -> Caps:
    return Caps.from_env()
