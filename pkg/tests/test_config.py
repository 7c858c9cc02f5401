#!/usr/bin/env python3
"""
Configuration Tests
===================

Tests for ppart_config.yaml loading, discovery and the config singleton.

Run with: pytest tests/test_config.py -v
"""

from pathlib import Path

import pytest
import yaml

from config import (
    CONFIG_ENV_VAR,
    CONFIG_FILENAME,
    OracleBudget,
    PpartConfig,
    SizeLimits,
    VerifySettings,
    get_config,
    reset_config,
    set_config,
    use_config,
)


class TestDefaults:
    """Defaults without any file."""

    def test_budget_and_limits(self):
        config = PpartConfig()
        assert config.budget.max_candidate_maps == 10**7
        assert config.limits.kreweras_cells == 12
        assert config.verify.m_max == 4
        assert not config.verbose_logging

    def test_all_checks_enabled_by_default(self):
        assert VerifySettings().is_enabled("reciprocity")

    def test_enabled_checks_restrict(self):
        settings = VerifySettings(enabled_checks=["gamma_decomposition"])
        assert settings.is_enabled("gamma_decomposition")
        assert not settings.is_enabled("reciprocity")


class TestLoading:
    """YAML files and partial dictionaries."""

    def test_partial_dict_keeps_defaults(self):
        config = PpartConfig.from_dict({'limits': {'stirling_k': 3}, 'verify': {'n_vars': 2}})
        assert config.limits.stirling_k == 3
        assert config.limits.lambda_p == SizeLimits().lambda_p
        assert config.verify.n_vars == 2
        assert config.verify.t_max == 10

    def test_missing_file_gives_defaults(self, tmp_path):
        assert PpartConfig.load(tmp_path / "absent.yaml") == PpartConfig()

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / CONFIG_FILENAME
        path.write_text("", encoding="utf-8")
        assert PpartConfig.load(path) == PpartConfig()

    def test_invalid_yaml_raises(self, tmp_path):
        path = tmp_path / CONFIG_FILENAME
        path.write_text("budget: [1, 2\n", encoding="utf-8")
        with pytest.raises(yaml.YAMLError):
            PpartConfig.load(path)

    def test_save_and_load(self, tmp_path):
        config = PpartConfig(
            budget=OracleBudget(max_candidate_maps=500),
            verify=VerifySettings(m_max=2, enabled_checks=["alpha_beta"]),
            verbose_logging=True,
        )
        path = tmp_path / CONFIG_FILENAME
        config.save(path)
        assert PpartConfig.load(path) == config

    def test_shipped_file_matches_defaults(self):
        shipped = Path(__file__).resolve().parent.parent / CONFIG_FILENAME
        assert PpartConfig.load(shipped) == PpartConfig()


class TestSingleton:
    """get_config discovery and reset."""

    def test_discovers_from_directory(self, tmp_path):
        (tmp_path / CONFIG_FILENAME).write_text("verify:\n  t_max: 3\n", encoding="utf-8")
        reset_config()
        assert get_config(tmp_path).verify.t_max == 3

    def test_environment_variable(self, tmp_path, monkeypatch):
        path = tmp_path / "custom.yaml"
        path.write_text("limits:\n  macmahon_total: 4\n", encoding="utf-8")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
        reset_config()
        assert get_config().limits.macmahon_total == 4

    def test_defaults_without_environment(self, monkeypatch):
        monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
        reset_config()
        assert get_config() == PpartConfig()

    def test_instance_is_cached(self):
        assert get_config() is get_config()

    def test_use_config_scopes_instance(self):
        outer = PpartConfig()
        set_config(outer)
        inner = PpartConfig(limits=SizeLimits(stirling_k=2))
        with use_config(inner):
            assert get_config() is inner
        assert get_config() is outer

    def test_use_config_restores_after_error(self, monkeypatch):
        monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
        reset_config()
        with pytest.raises(RuntimeError):
            with use_config(PpartConfig(verbose_logging=True)):
                raise RuntimeError("inside")
        assert get_config() == PpartConfig()
