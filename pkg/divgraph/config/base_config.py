"""
divgraph Configuration
Size guards, certification parameters and runtime settings shared by every module.

This configuration system supports multiple initialization methods:
1. Environment variables with the DIVGRAPH_ prefix (most flexible)
2. Custom env files (optional)
3. Direct parameters (programmatic)
4. Configuration builder pattern
"""

from pathlib import Path
from typing import Optional, Dict, Any, List, Union

import structlog
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = structlog.get_logger("divgraph.config")


class DivGraphConfig(BaseSettings):
    """
    Runtime configuration for graph construction, exact linear algebra and verification.

    This configuration can be loaded from:
    1. Environment variables (highest priority), e.g. DIVGRAPH_MAX_VERTICES=4096
    2. Custom .env files (if specified)
    3. Direct parameters (programmatic configuration)
    """

    model_config = SettingsConfigDict(
        env_prefix="DIVGRAPH_",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    def __init__(self,
                 env_files: Optional[List[Union[str, Path]]] = None,
                 **kwargs):
        """
        Initialize configuration with flexible loading options.

        Args:
            env_files: List of specific .env files to load (optional)
            **kwargs: Direct configuration parameters
        """
        if env_files:
            self._load_env_files(env_files)

        super().__init__(**kwargs)

        logger.debug("🔧 Configuration initialized",
                     environment=self.environment,
                     max_vertices=self.max_vertices,
                     seed=self.seed,
                     jobs=self.jobs)

    @staticmethod
    def _load_env_files(env_files: List[Union[str, Path]]) -> None:
        """Load specified environment files"""
        for env_file in env_files:
            env_path = Path(env_file)
            if env_path.exists():
                load_dotenv(env_path, override=False)
                logger.info("📂 Loaded env file", path=str(env_path))
            else:
                logger.warning("⚠️ Env file not found", path=str(env_path))

    # ==============================================
    # APPLICATION SETTINGS
    # ==============================================
    environment: str = "development"
    debug: bool = False
    log_level: str = "INFO"

    # ==============================================
    # SIZE GUARDS
    # ==============================================
    # Global vertex guard for spectral work and CLI requests
    max_vertices: int = 8192

    # Graph construction
    build_max_vertices: int = 2 ** 20
    build_max_parts: int = 16
    lucas_max_k: int = 16
    brute_force_max_vertices: int = 24
    planarity_max_vertices: int = 256

    # Exact linear algebra
    charpoly_max_dim: int = 320
    # sympy Berkowitz up to this dimension, multimodular Hessenberg above
    berkowitz_max_dim: int = 48
    determinant_max_dim: int = 4096
    # sympy Bareiss up to this dimension, multimodular elimination above
    bareiss_max_dim: int = 160
    rational_nullity_max_dim: int = 512
    modular_nullity_max_dim: int = 8192
    # auto mode uses rational-exact elimination up to this dimension
    exact_nullity_threshold: int = 96

    # Theorem verifiers
    poset_lift_max_size: int = 10
    vm_max_points_log2: int = 12
    det_sequence_max_a: int = 60
    mod6_max_a: int = 40
    six_case_max_v: int = 127

    # ==============================================
    # CERTIFICATION
    # ==============================================
    modular_prime_retries: int = 4
    modular_max_primes: int = 8
    seed: int = 0
    jobs: int = 1

    @property
    def is_development(self) -> bool:
        """Check if running in development environment"""
        return self.environment.lower() in ["development", "dev", "local"]

    @property
    def is_testing(self) -> bool:
        """Check if running with the reduced testing guards"""
        return self.environment.lower() in ["testing", "test"]

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return self.model_dump()

    @classmethod
    def from_env_file(cls, env_file: Union[str, Path], **kwargs) -> "DivGraphConfig":
        """
        Create configuration from a single environment file.

        Args:
            env_file: Path to the .env file
            **kwargs: Additional configuration parameters
        """
        return cls(env_files=[env_file], **kwargs)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any], **kwargs) -> "DivGraphConfig":
        """
        Create configuration from a dictionary.

        Args:
            config_dict: Configuration values as dictionary
            **kwargs: Additional configuration parameters
        """
        return cls(**{**config_dict, **kwargs})

    @classmethod
    def for_development(cls, **kwargs) -> "DivGraphConfig":
        """Create development configuration with verbose logging"""
        dev_config = {
            "environment": "development",
            "debug": True,
            "log_level": "DEBUG",
        }
        return cls(**{**dev_config, **kwargs})

    @classmethod
    def for_testing(cls, **kwargs) -> "DivGraphConfig":
        """
        Create testing configuration with small guards so suites stay fast.

        Args:
            **kwargs: Additional configuration parameters
        """
        test_config = {
            "environment": "testing",
            "debug": True,
            "log_level": "WARNING",
            "max_vertices": 1024,
            "charpoly_max_dim": 160,
            "exact_nullity_threshold": 64,
            "seed": 12345,
            "jobs": 1,
        }
        return cls(**{**test_config, **kwargs})


class ConfigurationBuilder:
    """
    Builder pattern for creating configurations in a fluent way.

    Example:
        config = (ConfigurationBuilder()
                 .for_environment("testing")
                 .with_guards(max_vertices=512)
                 .with_seed(7)
                 .build())
    """

    def __init__(self):
        self._config_params: Dict[str, Any] = {}
        self._env_files: List[Union[str, Path]] = []

    def for_environment(self, env: str) -> "ConfigurationBuilder":
        """Set the environment type"""
        self._config_params["environment"] = env
        if env.lower() in ["development", "dev", "local"]:
            self._config_params.update({"debug": True, "log_level": "DEBUG"})
        elif env.lower() in ["testing", "test"]:
            self._config_params.update({"debug": True, "log_level": "WARNING"})
        return self

    def with_guards(self, **guards: int) -> "ConfigurationBuilder":
        """Override size guards, e.g. with_guards(max_vertices=512, charpoly_max_dim=64)"""
        unknown = [name for name in guards if name not in DivGraphConfig.model_fields]
        if unknown:
            raise ValueError(f"Unknown configuration fields: {', '.join(sorted(unknown))}")
        self._config_params.update(guards)
        return self

    def with_seed(self, seed: int) -> "ConfigurationBuilder":
        """Set the RNG seed used for modular prime selection"""
        self._config_params["seed"] = seed
        return self

    def with_jobs(self, jobs: int) -> "ConfigurationBuilder":
        """Set the number of worker processes for table generation"""
        self._config_params["jobs"] = jobs
        return self

    def with_log_level(self, level: str) -> "ConfigurationBuilder":
        """Set the log level"""
        self._config_params["log_level"] = level.upper()
        return self

    def with_env_file(self, env_file: Union[str, Path]) -> "ConfigurationBuilder":
        """Add an environment file to load"""
        self._env_files.append(env_file)
        return self

    def build(self) -> DivGraphConfig:
        """Build the final configuration"""
        if self._env_files:
            return DivGraphConfig(env_files=self._env_files, **self._config_params)
        return DivGraphConfig(**self._config_params)


# Global configuration management
_global_config: Optional[DivGraphConfig] = None


def set_global_config(config: DivGraphConfig) -> None:
    """Set the global configuration instance"""
    global _global_config
    _global_config = config
    logger.debug("🌍 Global configuration updated")


def get_config() -> DivGraphConfig:
    """
    Get the global configuration instance.

    If no global config has been set, creates a default instance
    using environment variables only.
    """
    global _global_config
    if _global_config is None:
        _global_config = DivGraphConfig()
        logger.debug("🌍 Created default global configuration")
    return _global_config


def reset_global_config() -> None:
    """Reset the global configuration (useful for testing)"""
    global _global_config
    _global_config = None
    logger.debug("🔄 Global configuration reset")


def resolve_config(config: Optional[DivGraphConfig]) -> DivGraphConfig:
    """Return the explicit config when given, else the global one"""
    return config if config is not None else get_config()
