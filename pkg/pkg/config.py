"""
dpwheel - Configuration Management

This module handles the tool's settings:
- Loading the user configuration file (~/.dpwheel/config.yaml) when present
- Built-in defaults for enumeration, closure, rank search and verification
- The DPW_ELEMENT_CAP environment override for the closure element cap
- Loading verify-suite definitions shipped in config/verify-suites.yaml

Nothing is written to disk unless set() or save() is called.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from pkg.closure import DEFAULT_ELEMENT_CAP, ELEMENT_CAP_ENV
from pkg.errors import ConfigError

DEFAULT_CONFIG_PATH = "~/.dpwheel/config.yaml"
SUITES_PATH = Path(__file__).resolve().parent.parent / "config" / "verify-suites.yaml"

DEFAULTS: Dict[str, Any] = {
    "enumeration": {
        "vertex_cap": 10,
        "workers": 0,  # 0 = all available cores
    },
    "closure": {
        "element_cap": DEFAULT_ELEMENT_CAP,
    },
    "rank": {
        "search_budget": 20_000,
    },
    "verify": {
        "seed": 20240601,
        "char_exhaustive_max_n": 7,
        "char_sample_size": 1_000_000,
        "factor_exhaustive_max_n": 6,
        "factor_sample_size": 100_000,
        "psi_exhaustive_max_n": 6,
        "n_cap": 9,
    },
}

# Used when config/verify-suites.yaml is not shipped alongside the package
FALLBACK_SUITES: Dict[str, Dict[str, Any]] = {
    "distances": {
        "description": "closed-form wheel distance against BFS",
        "n_min": 4,
        "n_max": 9,
        "checks": ["wheel-distance"],
    },
    "characterization": {
        "description": "maximal-arc test, small-n collapse, units and DP of other graphs",
        "n_min": 4,
        "n_max": 7,
        "checks": [
            "char-minus",
            "small-n-collapse",
            "units",
            "dp-path",
            "dp-cycle",
            "dp-complete",
            "psi-isomorphism",
        ],
    },
    "split": {
        "description": "hub placement in DPW_n",
        "n_min": 4,
        "n_max": 7,
        "checks": ["split-lemma"],
    },
    "generation": {
        "description": "closures of the named generating sets",
        "n_min": 4,
        "n_max": 8,
        "checks": ["gen-minus", "gen-plus", "gen-union", "gen-full"],
    },
    "green": {
        "description": "D-classes against the structure theorems",
        "n_min": 4,
        "n_max": 7,
        "checks": [
            "modes-agree",
            "theorem-J-minus",
            "theorem-J-plus",
            "theorem-J-union",
            "theorem-J",
        ],
    },
    "factorization": {
        "description": "constructive words evaluate back to their element",
        "n_min": 4,
        "n_max": 6,
        "checks": ["factor-full", "e0-identity"],
    },
    "rank": {
        "description": "upper and lower rank bounds, exact search for small monoids",
        "n_min": 4,
        "n_max": 8,
        "checks": ["rank-minus", "rank-full", "rank-exact"],
    },
}


class DPWConfig:
    """Handles configuration loading and management for the CLI"""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = Path(config_path or DEFAULT_CONFIG_PATH).expanduser()
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, falling back to defaults"""
        config = copy.deepcopy(DEFAULTS)
        if not self.config_path.exists():
            return config
        try:
            with open(self.config_path, "r") as f:
                loaded = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Failed to load config from {self.config_path}: {e}") from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"{self.config_path} must hold a mapping at the top level")
        _merge(config, loaded)
        return config

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value using dot notation (e.g., 'closure.element_cap')"""
        value: Any = self.config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set configuration value using dot notation and persist it"""
        keys = key.split(".")
        if _lookup(DEFAULTS, keys) is None:
            raise ConfigError(f"unknown setting {key!r}")
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value
        self.save()

    def save(self) -> None:
        """Save current configuration to file"""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_path, "w") as f:
            yaml.dump(self.config, f, default_flow_style=False, indent=2)

    def flat(self) -> Dict[str, Any]:
        """Effective settings keyed by dotted name"""
        out: Dict[str, Any] = {}
        for section, values in DEFAULTS.items():
            for name in values:
                key = f"{section}.{name}"
                out[key] = self.element_cap if key == "closure.element_cap" else self.get(key)
        return out

    def _int(self, key: str) -> int:
        value = self.get(key)
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None

    @property
    def vertex_cap(self) -> int:
        return self._int("enumeration.vertex_cap")

    @property
    def workers(self) -> int:
        """Worker processes for enumeration; 0 means all available cores"""
        workers = self._int("enumeration.workers")
        return workers if workers > 0 else (os.cpu_count() or 1)

    @property
    def element_cap(self) -> int:
        env = os.environ.get(ELEMENT_CAP_ENV)
        if env:
            try:
                return int(env)
            except ValueError:
                raise ConfigError(f"{ELEMENT_CAP_ENV} must be an integer, got {env!r}") from None
        return self._int("closure.element_cap")

    @property
    def search_budget(self) -> int:
        return self._int("rank.search_budget")

    @property
    def seed(self) -> int:
        return self._int("verify.seed")

    @property
    def n_cap(self) -> int:
        return self._int("verify.n_cap")

    def verify_setting(self, name: str) -> int:
        return self._int(f"verify.{name}")


def _merge(base: Dict[str, Any], overlay: Dict[str, Any]) -> None:
    for key, value in overlay.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value


def _lookup(tree: Dict[str, Any], keys: List[str]) -> Any:
    value: Any = tree
    for k in keys:
        if not isinstance(value, dict) or k not in value:
            return None
        value = value[k]
    return value


def parse_value(text: str) -> Any:
    """YAML scalar parsing for `config set`"""
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse {text!r}: {e}") from e


class SuiteDefinitions:
    """Verify-suite definitions from the shipped YAML file"""

    def __init__(self, path: Path = SUITES_PATH):
        self.path = path
        self.suites = self._load_suites()

    def _load_suites(self) -> Dict[str, Dict[str, Any]]:
        if not self.path.exists():
            return copy.deepcopy(FALLBACK_SUITES)
        try:
            with open(self.path, "r") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Failed to load verify suites from {self.path}: {e}") from e
        suites = data.get("suites")
        if not isinstance(suites, dict) or not suites:
            raise ConfigError(f"{self.path} has no 'suites' mapping")
        return suites

    def names(self) -> List[str]:
        return list(self.suites)

    def get_suite(self, name: str) -> Dict[str, Any]:
        if name not in self.suites:
            raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(self.suites)}")
        return self.suites[name]

    def checks(self, name: str) -> List[str]:
        return list(self.get_suite(name).get("checks", []))
