"""Runtime limits for the enumeration machinery."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .homsets import DEFAULT_CARRIER_CAP, DEFAULT_CLONE_ARITY_CAP

ENV_CARRIER_CAP = "HAIRYCUBE_CARRIER_CAP"
ENV_CLONE_ARITY_CAP = "HAIRYCUBE_CLONE_ARITY_CAP"


@dataclass(frozen=True)
class Config:
    carrier_cap: int = DEFAULT_CARRIER_CAP
    clone_arity_cap: int = DEFAULT_CLONE_ARITY_CAP

    def __post_init__(self) -> None:
        if self.carrier_cap < 1 or self.clone_arity_cap < 1:
            raise ValueError("caps must be positive")

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "Config":
        env = os.environ if environ is None else environ
        kwargs = {}
        if ENV_CARRIER_CAP in env:
            kwargs["carrier_cap"] = _positive_int(env[ENV_CARRIER_CAP], ENV_CARRIER_CAP)
        if ENV_CLONE_ARITY_CAP in env:
            kwargs["clone_arity_cap"] = _positive_int(
                env[ENV_CLONE_ARITY_CAP], ENV_CLONE_ARITY_CAP
            )
        return cls(**kwargs)


def _positive_int(raw: str, name: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value
