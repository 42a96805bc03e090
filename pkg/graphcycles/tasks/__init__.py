"""Experiment runners built on top of the services package."""

from .simulation import load_experiment_config, permuter_table, run_simulation  # noqa: F401
