"""
Configuration module for loading settings from the OS environment
"""
import os
from typing import Optional


class Config:
    """Configuration class to load environment variables from OS environment"""

    @staticmethod
    def get_env_var(key: str, default: Optional[str] = None) -> str:
        """Get environment variable from OS environment with fallback"""
        value = os.environ.get(key, default)
        if value is None:
            raise ValueError(f"Environment variable {key} is required but not set")
        return value

    @staticmethod
    def get_env_var_optional(key: str, default: Optional[str] = None) -> Optional[str]:
        """Get optional environment variable from OS environment"""
        return os.environ.get(key, default)

    @staticmethod
    def get_int_env_var(key: str, default: int) -> int:
        """Get a positive integer setting; malformed values are a configuration error"""
        raw = os.environ.get(key)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"Environment variable {key} must be an integer, got {raw!r}")
        if value <= 0:
            raise ValueError(f"Environment variable {key} must be positive, got {value}")
        return value

    @staticmethod
    def get_float_env_var(key: str, default: float) -> float:
        """Get a positive float setting (seconds, ratios)"""
        raw = os.environ.get(key)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = float(raw)
        except ValueError:
            raise ValueError(f"Environment variable {key} must be a number, got {raw!r}")
        if value <= 0:
            raise ValueError(f"Environment variable {key} must be positive, got {value}")
        return value


# Create a global config instance
config = Config()

# Compute budgets
TIME_BUDGET = config.get_float_env_var("HSC_TIME_BUDGET", 600.0)
MAX_CLASSES = config.get_int_env_var("HSC_MAX_CLASSES", 200_000)

# Hard caps for exhaustive searches
MAX_CANONICAL_VERTICES = config.get_int_env_var("HSC_MAX_CANONICAL_VERTICES", 16)
MAX_BRUTE_ARCS = config.get_int_env_var("HSC_MAX_BRUTE_ARCS", 12)
MAX_PARTITION_EDGES = config.get_int_env_var("HSC_MAX_PARTITION_EDGES", 8)
MAX_DIRECT_SIMPLEX_K = config.get_int_env_var("HSC_MAX_DIRECT_SIMPLEX_K", 7)

# Memoized associated coefficients, one per connected isomorphism class
COEFFICIENT_CACHE_SIZE = config.get_int_env_var("HSC_COEFFICIENT_CACHE_SIZE", 1 << 14)

# Logging
LOG_LEVEL = config.get_env_var("HSC_LOG_LEVEL", "INFO").upper()

ENVIRONMENT = config.get_env_var_optional("ENVIRONMENT")
