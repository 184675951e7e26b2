"""
Tests for Configuration module
"""
import os
from unittest.mock import patch

import pytest

from divgraph.config import (
    ConfigurationBuilder,
    DivGraphConfig,
    get_config,
    reset_global_config,
    resolve_config,
    set_global_config,
)


class TestDivGraphConfig:
    """Test the DivGraphConfig class"""

    def test_config_initialization_with_defaults(self, clean_environment):
        """Test configuration initialization with default values"""
        config = DivGraphConfig()

        assert config.environment == "development"
        assert config.debug is False
        assert config.log_level == "INFO"
        assert config.max_vertices == 8192
        assert config.charpoly_max_dim == 320
        assert config.determinant_max_dim == 4096
        assert config.rational_nullity_max_dim == 512
        assert config.exact_nullity_threshold == 96
        assert config.modular_prime_retries == 4
        assert config.poset_lift_max_size == 10
        assert config.vm_max_points_log2 == 12
        assert config.det_sequence_max_a == 60
        assert config.mod6_max_a == 40
        assert config.six_case_max_v == 127
        assert config.seed == 0
        assert config.jobs == 1

    def test_config_from_environment_variables(self, test_environment):
        """Test configuration loading from DIVGRAPH_ environment variables"""
        config = DivGraphConfig()

        assert config.environment == "test"
        assert config.max_vertices == 512
        assert config.seed == 99
        assert config.jobs == 2
        assert config.log_level == "ERROR"

    def test_environment_variables_are_case_insensitive(self):
        """Test lowercase variable names are accepted"""
        with patch.dict(os.environ, {"divgraph_max_vertices": "77"}):
            assert DivGraphConfig().max_vertices == 77

    def test_direct_parameters_override_defaults(self, clean_environment):
        """Test keyword arguments set fields directly"""
        config = DivGraphConfig(max_vertices=100, seed=5)
        assert config.max_vertices == 100
        assert config.seed == 5

    @patch("pathlib.Path.exists")
    @patch("divgraph.config.base_config.load_dotenv")
    def test_env_file_loading(self, mock_load_dotenv, mock_exists):
        """Test that env files are loaded only when requested"""
        mock_exists.return_value = True

        DivGraphConfig()
        assert mock_load_dotenv.call_count == 0

        DivGraphConfig.from_env_file(".env.divgraph")
        assert mock_load_dotenv.call_count == 1
        assert str(mock_load_dotenv.call_args[0][0]).endswith(".env.divgraph")

    @patch("pathlib.Path.exists")
    @patch("divgraph.config.base_config.load_dotenv")
    def test_env_file_not_exists(self, mock_load_dotenv, mock_exists):
        """Test behavior when the env file does not exist"""
        mock_exists.return_value = False

        DivGraphConfig(env_files=["missing.env"])

        mock_load_dotenv.assert_not_called()

    def test_env_file_values_are_read(self, tmp_path, clean_environment):
        """Test a real env file feeds the settings"""
        env_file = tmp_path / "divgraph.env"
        env_file.write_text("DIVGRAPH_CHARPOLY_MAX_DIM=64\n")

        config = DivGraphConfig.from_env_file(env_file)

        assert config.charpoly_max_dim == 64

    def test_is_development_property(self):
        """Test is_development property"""
        test_cases = [
            ("development", True),
            ("dev", True),
            ("local", True),
            ("DEVELOPMENT", True),
            ("testing", False),
            ("production", False),
        ]

        for env_value, expected in test_cases:
            config = DivGraphConfig(environment=env_value)
            assert config.is_development == expected, f"Failed for environment: {env_value}"

    def test_is_testing_property(self):
        """Test is_testing property"""
        assert DivGraphConfig(environment="test").is_testing is True
        assert DivGraphConfig(environment="TESTING").is_testing is True
        assert DivGraphConfig(environment="development").is_testing is False

    def test_to_dict_method(self, clean_environment):
        """Test to_dict returns every field"""
        config_dict = DivGraphConfig(seed=3).to_dict()

        for key in ["max_vertices", "charpoly_max_dim", "exact_nullity_threshold", "seed", "jobs"]:
            assert key in config_dict, f"Missing key: {key}"
        assert config_dict["seed"] == 3

    def test_from_dict_round_trip(self, clean_environment):
        """Test from_dict rebuilds an equal configuration"""
        original = DivGraphConfig.for_testing(seed=8)
        rebuilt = DivGraphConfig.from_dict(original.to_dict())
        assert rebuilt.to_dict() == original.to_dict()

    def test_for_testing_uses_small_guards(self, clean_environment):
        """Test the testing factory lowers guards and fixes the seed"""
        config = DivGraphConfig.for_testing()
        assert config.is_testing
        assert config.max_vertices == 1024
        assert config.charpoly_max_dim == 160
        assert config.seed == 12345

    def test_for_development_is_verbose(self, clean_environment):
        """Test the development factory enables debug logging"""
        config = DivGraphConfig.for_development(jobs=4)
        assert config.debug is True
        assert config.log_level == "DEBUG"
        assert config.jobs == 4


class TestConfigurationBuilder:
    """Test the fluent configuration builder"""

    def test_builder_chain(self, clean_environment):
        """Test every builder step lands in the built config"""
        config = (ConfigurationBuilder()
                  .for_environment("testing")
                  .with_guards(max_vertices=256, charpoly_max_dim=32)
                  .with_seed(7)
                  .with_jobs(3)
                  .with_log_level("error")
                  .build())

        assert config.environment == "testing"
        assert config.max_vertices == 256
        assert config.charpoly_max_dim == 32
        assert config.seed == 7
        assert config.jobs == 3
        assert config.log_level == "ERROR"

    def test_unknown_guard_rejected(self):
        """Test misspelled guard names fail fast"""
        with pytest.raises(ValueError, match="max_vertexes"):
            ConfigurationBuilder().with_guards(max_vertexes=10)

    def test_builder_with_env_file(self, tmp_path, clean_environment):
        """Test the builder forwards env files"""
        env_file = tmp_path / ".env"
        env_file.write_text("DIVGRAPH_MOD6_MAX_A=12\n")
        config = ConfigurationBuilder().with_env_file(env_file).build()
        assert config.mod6_max_a == 12


class TestGlobalConfig:
    """Test the global configuration accessors"""

    def test_get_config_creates_default(self, clean_environment):
        """Test get_config builds a default instance after a reset"""
        reset_global_config()
        config = get_config()
        assert isinstance(config, DivGraphConfig)
        assert get_config() is config

    def test_set_global_config(self):
        """Test set_global_config replaces the instance"""
        custom = DivGraphConfig(seed=42)
        set_global_config(custom)
        assert get_config() is custom

    def test_resolve_config_prefers_explicit(self, testing_config):
        """Test resolve_config falls back to the global instance"""
        explicit = DivGraphConfig(seed=1)
        assert resolve_config(explicit) is explicit
        assert resolve_config(None) is testing_config
