"""Run configuration, validated before anything is enumerated."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from sympy import isprime

from .matgroup import gl_order

FORMATS = ("jsonl", "csv", "table")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int = 2
    f: int = 1
    n: int = 2
    theta: tuple[int, ...] | None = None
    z: int | None = None
    tol: float = 1e-8
    budget: int = 10**7
    seed: int = 0
    format: str = "jsonl"
    out: str | None = field(default=None, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.f

    def validate(self) -> "RunConfig":
        if not isprime(self.p):
            raise ConfigError(f"--p {self.p} is not prime")
        if self.f < 1:
            raise ConfigError("--f must be >= 1")
        if self.n not in (2, 3):
            raise ConfigError("--n must be 2 or 3")
        if not self.tol > 0:
            raise ConfigError("--tol must be positive")
        if self.format not in FORMATS:
            raise ConfigError(f"--format must be one of {FORMATS}")
        if self.budget < 1:
            raise ConfigError("--budget must be positive")
        size = gl_order(self.n, self.q**2)
        if size > self.budget:
            raise ConfigError(f"|GL_{self.n}(F_{self.q**2})| = {size} exceeds --budget {self.budget}")
        if self.z is not None:
            order = self.q ** (2 * self.n) - 1
            step = order // (self.q**2 - 1)
            # z must be a generator power lying in E but not in F
            if self.z % step or self.z % (order // (self.q - 1)) == 0:
                raise ConfigError(f"--z {self.z} is not the log of an element of E outside F")
        return self

    def echo(self) -> dict:
        """Config as written into output files; the output path is left out."""
        d = asdict(self)
        d.pop("out")
        d["theta"] = list(self.theta) if self.theta is not None else None
        return d
