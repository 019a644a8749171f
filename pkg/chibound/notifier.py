# ---------------------------------------------------------------------------------------
# CHIBOUND NOTIFIER - notifier.py
# ---------------------------------------------------------------------------------------
# Unified console feedback. Everything goes to stderr so stdout stays clean for JSON.
# Line format: [HH:MM:SS] <icon> [STATE] message
# ---------------------------------------------------------------------------------------
import logging
import sys

LOGGER_NAME = "chibound"

# State code -> (icon, level)
STATE_MAP = {
    'BOOT':   ('🚀', logging.INFO),
    'CONFIG': ('⚙️', logging.INFO),
    'CHECK':  ('🔎', logging.INFO),
    'COLOR':  ('🎨', logging.INFO),
    'ORACLE': ('🧮', logging.INFO),
    'FUZZ':   ('🎲', logging.INFO),
    'REPORT': ('📄', logging.INFO),
    'OK':     ('✅', logging.INFO),
    'DEBUG':  ('·', logging.DEBUG),
    'WARN':   ('⚠️', logging.WARNING),
    'ERROR':  ('❌', logging.ERROR),
    'THEORY': ('🛑', logging.ERROR),
}

_logger = logging.getLogger(LOGGER_NAME)


class _StderrHandler(logging.StreamHandler):
    """Resolves sys.stderr at emit time so redirected streams are honoured."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def _ensure_handler():
    if any(isinstance(h, _StderrHandler) for h in _logger.handlers):
        return
    handler = _StderrHandler()
    handler.setFormatter(logging.Formatter("[%(asctime)s] %(message)s", datefmt="%H:%M:%S"))
    _logger.addHandler(handler)
    if _logger.level == logging.NOTSET:
        _logger.setLevel(logging.INFO)


def set_verbose(flag):
    _ensure_handler()
    _logger.setLevel(logging.DEBUG if flag else logging.INFO)


def notify(code, message):
    _ensure_handler()
    icon, level = STATE_MAP.get(code, ('', logging.INFO))
    _logger.log(level, f"{icon} [{code}] {message}")
