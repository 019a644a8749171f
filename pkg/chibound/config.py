# ---------------------------------------------------------------------------------------
# CHIBOUND CONFIGURATION ENGINE - config.py
# ---------------------------------------------------------------------------------------
# Defaults below, overridden by chibound.json (known keys only), then by environment:
#   CHIBOUND_CONFIG        alternative path to the JSON file
#   CHIBOUND_ORACLE_LIMIT  vertex cap for the exact chromatic number search
# ---------------------------------------------------------------------------------------
import json
import os

from .errors import ConfigError
from .notifier import notify

CONFIG_FILE = "chibound.json"

DEFAULT_SETTINGS = {
    "ORACLE_LIMIT": 32,          # exact chi refuses larger graphs
    "BRUTE_CLIQUE_LIMIT": 16,    # subset-enumeration clique number
    "ENUMERATION_LIMIT": 12,     # exhaustive forbidden-subgraph scan
    "ORACLE_TIMEOUT_S": 300,
    "FUZZ_N": 14,
    "FUZZ_P": None,              # None: drawn per instance
    "FUZZ_COUNT": 500,
    "FUZZ_SEED": 7,
    "FUZZ_JOBS": 1,
    "FUZZ_ORACLE_MAX_N": 16,
    "FIXTURES_DIR": "fixtures",
    "REPORTS_DIR": "reports",
    "VERBOSE": False,
}


def _env_int(environ, name):
    raw = environ.get(name)
    if raw is None:
        return None
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def load_settings(path=None, environ=None):
    """Returns a fresh settings dict: defaults <- JSON file <- environment."""
    env = os.environ if environ is None else environ
    settings = dict(DEFAULT_SETTINGS)
    path = path or env.get("CHIBOUND_CONFIG") or CONFIG_FILE

    if os.path.exists(path):
        notify('CONFIG', f"Loading local settings from {path}")
        try:
            with open(path, 'r') as f:
                local_data = json.load(f)
            if not isinstance(local_data, dict):
                raise ValueError("top level must be an object")
            for key, value in local_data.items():
                if key not in settings:
                    notify('WARN', f"Ignoring unknown setting {key}")
                    continue
                settings[key] = value
                notify('DEBUG', f"   - {key}: {value}")
        except (OSError, ValueError) as e:
            notify('WARN', f"Could not read {path} ({e}). Using defaults.")

    limit = _env_int(env, "CHIBOUND_ORACLE_LIMIT")
    if limit is not None:
        settings["ORACLE_LIMIT"] = limit
    return settings


_active = None


def active_settings():
    """Settings in force for library callers; loaded on first use."""
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def use_settings(settings):
    """Installs settings for library callers (None reloads on next use)."""
    global _active
    _active = settings
