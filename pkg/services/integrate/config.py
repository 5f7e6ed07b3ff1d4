"""
Monte-Carlo configuration and counter-based random streams.
"""

import hashlib
from dataclasses import dataclass, field, replace

import numpy as np
from django.conf import settings

from apps.core.exceptions import ConfigurationError

MIN_REPORTABLE_SAMPLES = 1_000


def _lab(key: str, default):
    return getattr(settings, "LAB", {}).get(key, default)


def label_key(label: str) -> int:
    """Stable 32-bit key for a stream label."""
    digest = hashlib.blake2b(label.encode("utf-8"), digest_size=4).digest()
    return int.from_bytes(digest, "little")


@dataclass(frozen=True)
class MCConfig:
    """
    Configuration shared by every integrator.

    Each (label, shard) pair owns an independent Philox stream derived
    from ``seed``, so results do not depend on how shards are scheduled.

    Example:
        >>> config = MCConfig(seed=1, samples_per_shell=2000, shells=4)
        >>> float(config.stream("demo", 0).random()) == float(config.stream("demo", 0).random())
        True
    """

    seed: int = field(default_factory=lambda: _lab("SEED", 42))
    samples_per_shell: int = field(default_factory=lambda: _lab("SAMPLES_PER_SHELL", 200_000))
    shells: int = field(default_factory=lambda: _lab("MC_SHELLS", 24))
    shell_ratio: float = field(default_factory=lambda: _lab("SHELL_RATIO", 1.2))
    radial_inner_fraction: float = field(
        default_factory=lambda: _lab("RADIAL_INNER_FRACTION", 1e-7)
    )
    chunk_size: int = field(default_factory=lambda: _lab("CHUNK_SIZE", 20_000))
    workers: int = field(default_factory=lambda: _lab("WORKERS", 1))
    prefer_radial: bool = True
    rng_scheme: str = "philox"

    def __post_init__(self) -> None:
        if self.samples_per_shell < 2:
            raise ConfigurationError(
                f"samples_per_shell must be at least 2, got {self.samples_per_shell}"
            )
        if self.shells < 1:
            raise ConfigurationError(f"shells must be positive, got {self.shells}")
        if not self.shell_ratio > 1.0:
            raise ConfigurationError(f"shell_ratio must exceed 1, got {self.shell_ratio}")
        if not 0.0 < self.radial_inner_fraction < 1.0:
            raise ConfigurationError(
                f"radial_inner_fraction must lie in (0, 1), got {self.radial_inner_fraction}"
            )
        if self.chunk_size < 2 or self.workers < 1:
            raise ConfigurationError("chunk_size must be >= 2 and workers >= 1")
        if self.rng_scheme != "philox":
            raise ConfigurationError(f"Unknown rng scheme '{self.rng_scheme}'")

    @property
    def reportable(self) -> bool:
        return self.samples_per_shell >= MIN_REPORTABLE_SAMPLES

    @property
    def pairs_per_shell(self) -> int:
        """Antithetic pairs drawn per shell."""
        return max(1, self.samples_per_shell // 2)

    def stream(self, label: str, *shard: int) -> np.random.Generator:
        """Independent generator for (seed, label, shard...)."""
        sequence = np.random.SeedSequence(
            entropy=self.seed & 0xFFFFFFFFFFFFFFFF,
            spawn_key=(label_key(label), *(int(index) for index in shard)),
        )
        return np.random.Generator(np.random.Philox(sequence))

    def with_overrides(self, **changes) -> "MCConfig":
        return replace(self, **changes)
