"""Toolkit configuration loaded from environment variables."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical tolerances and run defaults with env var overrides."""

    # Residual checks
    residual_tolerance: float = 1e-9
    determining_tolerance: float = 1e-9

    # Separation of variables
    separation_tolerance: float = 1e-6
    separation_min_points: int = 33
    zero_separation_tolerance: float = 1e-10
    profile_match_tolerance: float = 1e-8

    # Quadrature and sampling
    quadrature_tolerance: float = 1e-10
    positivity_samples: int = 64
    certify_samples: int = 100
    certify_t_max: float = 1.0
    sample_seed: int = 0

    # Method-of-lines defaults (acceptance run)
    fd_interior_points: int = 200
    fd_time_step: float = 1e-3
    fd_t_end: float = 2.0

    # Output
    csv_significant_digits: int = 17
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="BEAMSYM_", env_file=".env", env_file_encoding="utf-8"
    )


settings = Settings()
