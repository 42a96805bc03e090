"""Cycle-length statistics for turbo-decoding and LDPC graphs."""

from __future__ import annotations

from logging.config import dictConfig

__version__ = "1.0.0"


def configure_logging(level: str = "INFO", stream: str = "ext://sys.stdout") -> None:
    dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "json": {
                    "format": "{\"time\":\"%(asctime)s\",\"level\":\"%(levelname)s\",\"name\":\"%(name)s\",\"message\":\"%(message)s\"}",
                }
            },
            "handlers": {
                "stdout": {
                    "class": "logging.StreamHandler",
                    "stream": stream,
                    "formatter": "json",
                }
            },
            "root": {
                "level": level,
                "handlers": ["stdout"],
            },
        }
    )


__all__ = ["__version__", "configure_logging"]
