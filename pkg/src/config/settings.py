# src/config/settings.py
# Centralized configuration for the polynomial engine, the sweep runner and the CLI.
# Every knob has a default and can be overridden through an environment variable,
# so long verification runs can be tuned without touching code.
#
# Sections:
# - EngineConfig: arithmetic guards and memo table sizes
# - SweepConfig: worker pool and long-run switches for theorem sweeps
# - AppConfig: environment, log level and default output format

import os
from typing import Optional
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


def _env_optional_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    return int(raw)


def _env_bool(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).lower() == "true"


@dataclass
class EngineConfig:
    """
    Polynomial engine settings.

    The engine is exact, so these settings never change results. They only
    control guards (how long the basis-expansion peeling may run, whether
    divided differences are double-checked) and memory used by memo tables.
    """
    # Hard cap on peeling steps in the Grothendieck basis expansion.
    # None means "use the size-derived budget" computed per polynomial.
    step_budget: Optional[int] = field(default_factory=lambda: _env_optional_int("GROTH_STEP_BUDGET"))

    # Re-multiply every divided-difference quotient by (x_i - x_{i+1})
    # and compare with f - s_i f. Slow; meant for debugging arithmetic.
    verify_division: bool = field(default_factory=lambda: _env_bool("GROTH_VERIFY_DIVISION"))

    # Maximum number of entries kept per memo table
    # (Grothendieck, involution Grothendieck and orthogonal polynomials)
    cache_size: int = field(default_factory=lambda: _env_int("GROTH_CACHE_SIZE", 65536))


@dataclass
class SweepConfig:
    """
    Settings for exhaustive verification sweeps and censuses.
    """
    # Number of worker processes; 1 runs the sweep in-process
    jobs: int = field(default_factory=lambda: _env_int("GROTH_JOBS", 1))

    # Number of cases handed to a worker at a time
    chunk_size: int = field(default_factory=lambda: _env_int("GROTH_CHUNK_SIZE", 8))

    # Unlocks the heavy census rows (n=7,8) and the S_8 equality census
    long_run: bool = field(default_factory=lambda: _env_bool("GROTH_LONG_RUN"))

    # Log a progress line every N completed cases
    progress_every: int = field(default_factory=lambda: _env_int("GROTH_PROGRESS_EVERY", 50))


@dataclass
class AppConfig:
    """
    Application-level configuration.
    """
    # Environment: development, staging, production
    environment: str = field(default_factory=lambda: os.getenv("ENVIRONMENT", "development"))

    # Log level: DEBUG, INFO, WARNING, ERROR, CRITICAL
    log_level: str = field(default_factory=lambda: os.getenv("LOG_LEVEL", "INFO"))

    # Default rendering for CLI output: text, json or dot
    output_format: str = field(default_factory=lambda: os.getenv("GROTH_OUTPUT_FORMAT", "text"))


@dataclass
class Settings:
    """
    Main settings object.

    Other modules import the module-level instance and read e.g.
    settings.engine.step_budget or settings.sweep.jobs.
    Constructing a new Settings() re-reads the environment.
    """
    engine: EngineConfig = field(default_factory=EngineConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    app: AppConfig = field(default_factory=AppConfig)

    def validate(self):
        """
        Validate configuration values. Raises ValueError on the first problem.
        """
        if self.engine.step_budget is not None and self.engine.step_budget <= 0:
            raise ValueError(f"GROTH_STEP_BUDGET must be positive, got {self.engine.step_budget}")
        if self.engine.cache_size <= 0:
            raise ValueError(f"GROTH_CACHE_SIZE must be positive, got {self.engine.cache_size}")

        if self.sweep.jobs < 1:
            raise ValueError(f"GROTH_JOBS must be at least 1, got {self.sweep.jobs}")
        if self.sweep.chunk_size < 1:
            raise ValueError(f"GROTH_CHUNK_SIZE must be at least 1, got {self.sweep.chunk_size}")
        if self.sweep.progress_every < 1:
            raise ValueError(f"GROTH_PROGRESS_EVERY must be at least 1, got {self.sweep.progress_every}")

        if self.app.environment not in ["development", "staging", "production"]:
            raise ValueError(f"ENVIRONMENT must be development, staging, or production, got {self.app.environment}")

        if self.app.log_level not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            raise ValueError(f"LOG_LEVEL must be DEBUG, INFO, WARNING, ERROR, or CRITICAL, got {self.app.log_level}")

        if self.app.output_format not in ["text", "json", "dot"]:
            raise ValueError(f"GROTH_OUTPUT_FORMAT must be text, json, or dot, got {self.app.output_format}")


# Global settings instance shared by every module
settings = Settings()

# Validate at import so a bad environment fails before any computation starts
try:
    settings.validate()
except ValueError as e:
    raise RuntimeError(f"Invalid configuration: {e}") from e
