"""Logging setup driven by application settings."""

import logging

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s - %(message)s"


def configure_logging(settings) -> None:
    """Install a single stream handler on the ``src`` logger tree."""
    level = getattr(logging, str(settings.log_level).upper(), logging.INFO)
    if settings.debug_mode:
        level = logging.DEBUG

    root = logging.getLogger("src")
    root.setLevel(level)
    if not any(getattr(h, "_genesis_handler", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._genesis_handler = True
        root.addHandler(handler)
    for handler in root.handlers:
        handler.setLevel(level)
