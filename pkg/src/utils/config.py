"""
Engine configuration loader.
Reads tunables from config/config.yaml, with a built-in fallback and
environment overrides (a .env file is honoured through python-dotenv).
"""

import copy
import os
import sys
from typing import Any, Dict, Tuple

from dotenv import load_dotenv

from src.logger import logging
from src.exception import CustomException
from src.utils.common import load_yaml

DEFAULT_CONFIG_PATH = os.path.join("config", "config.yaml")

DEFAULTS: Dict[str, Any] = {
    "connectivity": {
        "brute_force_max_n": 10,
        "witness_search_limit": 20000,
    },
    "enumeration": {
        "maximal_outerplanar": {"min_n": 3, "max_n": 14},
        "maximal_planar": {"min_n": 4, "max_n": 10},
        "quadrangulation": {"min_n": 4, "max_n": 9},
        "checkpoint_every": 200,
        "recount_max_n": {"maximal_outerplanar": 12, "maximal_planar": 6},
    },
    "sweep": {
        "random_connected": {"count": 10000, "seed": 20240917, "min_n": 2, "max_n": 16},
        "certificates_per_bound": 5,
        "workers": 1,
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class EngineConfig:
    """
    Tunables for connectivity oracles, enumeration ranges and sweeps.
    """

    def __init__(self, config_path: str = None):
        """
        Initialize the configuration.

        Args:
            config_path: YAML file to read (PLANAR_DIST_CONFIG or config/config.yaml if None)
        """
        load_dotenv()
        self.config_path = config_path or os.environ.get("PLANAR_DIST_CONFIG", DEFAULT_CONFIG_PATH)

        # Storage
        self._data: Dict[str, Any] = {}

        self._load_data()

        logging.info("EngineConfig initialized successfully")

    def _load_data(self):
        """Load YAML from disk, falling back to the built-in defaults"""
        try:
            if os.path.exists(self.config_path):
                self._data = _merge(DEFAULTS, load_yaml(self.config_path))
            else:
                logging.warning(f"Config file not found: {self.config_path}. Using built-in defaults.")
                self._data = copy.deepcopy(DEFAULTS)

            workers = os.environ.get("PLANAR_DIST_WORKERS")
            if workers:
                self._data["sweep"]["workers"] = int(workers)
                logging.info(f"Worker count overridden from environment: {workers}")

        except Exception as e:
            raise CustomException(e, sys)

    def brute_force_max_n(self) -> int:
        return int(self._data["connectivity"]["brute_force_max_n"])

    def witness_search_limit(self) -> int:
        return int(self._data["connectivity"]["witness_search_limit"])

    def enumeration_range(self, graph_class: str) -> Tuple[int, int]:
        """
        Admissible order range of a catalog.

        Args:
            graph_class: 'maximal_outerplanar', 'maximal_planar' or 'quadrangulation'

        Returns:
            tuple: (min_n, max_n)
        """
        try:
            entry = self._data["enumeration"][graph_class]
            return int(entry["min_n"]), int(entry["max_n"])
        except Exception as e:
            raise CustomException(e, sys)

    def checkpoint_every(self) -> int:
        return int(self._data["enumeration"]["checkpoint_every"])

    def recount_max_n(self, graph_class: str) -> int:
        """Largest order recounted by an independent oracle (0 when none exists)."""
        return int(self._data["enumeration"].get("recount_max_n", {}).get(graph_class, 0))

    def random_sweep(self) -> Dict[str, int]:
        return {k: int(v) for k, v in self._data["sweep"]["random_connected"].items()}

    def certificates_per_bound(self) -> int:
        return int(self._data["sweep"]["certificates_per_bound"])

    def workers(self) -> int:
        return max(1, int(self._data["sweep"]["workers"]))

    def as_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._data)


_CONFIG = None


def get_config() -> EngineConfig:
    """Process-wide configuration, loaded on first use."""
    global _CONFIG
    if _CONFIG is None:
        _CONFIG = EngineConfig()
    return _CONFIG
