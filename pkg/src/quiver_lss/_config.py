"""Configuration parsing from environment variables.

Environment Variables:
    QUIVER_LSS_PRIME: Field modulus for oracle sampling (default: 2147483647)
    QUIVER_LSS_TRIALS: Number of sampled pairs per oracle query (default: 5)
    QUIVER_LSS_SEED: RNG seed for oracle sampling (default: 0)
    QUIVER_LSS_VERBOSE: 1 to report progress on stderr (default: 0)
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, replace

from sympy import isprime

from quiver_lss._errors import ConfigError

DEFAULT_PRIME = 2_147_483_647
DEFAULT_TRIALS = 5
DEFAULT_SEED = 0

# Residues stay below 2^31, so a product of two fits a signed 64-bit integer.
_MIN_PRIME = 10**6
_MAX_PRIME = 2**31


@dataclass(frozen=True, slots=True)
class OracleConfig:
    """Oracle sampling configuration."""

    prime: int = DEFAULT_PRIME
    """Field modulus; sampled matrices have entries in [0, prime)."""

    trials: int = DEFAULT_TRIALS
    """Number of independent samples; generic values are minima over them."""

    seed: int = DEFAULT_SEED
    """Base seed; trial k uses seed XOR k."""

    def __post_init__(self) -> None:
        if not _MIN_PRIME < self.prime < _MAX_PRIME:
            raise ConfigError(
                f"prime: {self.prime} is outside the range ({_MIN_PRIME}, {_MAX_PRIME})"
            )
        if not isprime(self.prime):
            raise ConfigError(f"prime: {self.prime} is not prime")
        if self.trials < 1:
            raise ConfigError(f"trials: value {self.trials} is below minimum 1")
        if self.seed < 0:
            raise ConfigError(f"seed: value {self.seed} is below minimum 0")

    def with_overrides(
        self, *, prime: int | None = None, trials: int | None = None, seed: int | None = None
    ) -> OracleConfig:
        """Return a copy with the given fields replaced; None keeps the current value."""
        changes = {
            k: v for k, v in (("prime", prime), ("trials", trials), ("seed", seed)) if v is not None
        }
        return replace(self, **changes) if changes else self


def _parse_int(name: str, default: int, min_value: int = 0) -> int:
    """Parse an integer environment variable.

    Args:
        name: Environment variable name.
        default: Default value if not set.
        min_value: Minimum allowed value.

    Returns:
        The parsed integer.

    Raises:
        ConfigError: If the value is invalid.
    """
    value_str = os.environ.get(name)
    if value_str is None or value_str == "":
        return default

    try:
        value = int(value_str)
    except ValueError:
        raise ConfigError(f"{name}: invalid integer '{value_str}'") from None

    if value < min_value:
        raise ConfigError(f"{name}: value {value} is below minimum {min_value}")

    return value


def load_config() -> OracleConfig:
    """Load the oracle configuration from environment variables.

    Raises:
        ConfigError: If a variable is malformed or the result is invalid.
    """
    prime = _parse_int("QUIVER_LSS_PRIME", default=DEFAULT_PRIME, min_value=2)
    trials = _parse_int("QUIVER_LSS_TRIALS", default=DEFAULT_TRIALS, min_value=1)
    seed = _parse_int("QUIVER_LSS_SEED", default=DEFAULT_SEED, min_value=0)

    try:
        config = OracleConfig(prime=prime, trials=trials, seed=seed)
    except ConfigError as e:
        # trials and seed are range-checked above, so only the prime can fail here
        raise ConfigError(f"QUIVER_LSS_PRIME: {e}") from None

    _report_config(config)
    return config


def is_verbose() -> bool:
    """Whether QUIVER_LSS_VERBOSE asks for progress reports."""
    try:
        return _parse_int("QUIVER_LSS_VERBOSE", default=0, min_value=0) > 0
    except ConfigError:
        return False


def _warn(message: str) -> None:
    """Print a warning to stderr."""
    print(f"quiver_lss: WARNING: {message}", file=sys.stderr)


def _report(message: str) -> None:
    """Print a progress line to stderr when verbose."""
    if is_verbose():
        print(f"quiver_lss: {message}", file=sys.stderr)


def _report_config(config: OracleConfig) -> None:
    """Print configuration summary to stderr when verbose."""
    _report(f"oracle prime: {config.prime}")
    _report(f"oracle trials: {config.trials}, seed: {config.seed}")
