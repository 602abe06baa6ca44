"""Runtime options, declared once and overridable from the environment."""
import os
from typing import Any, Dict, Tuple

from seqrsp.util.exceptions import ConfigurationError

# Options in the (name, settings) layout pylint uses for checker options.
OPTIONS: Tuple[Tuple[str, Dict[str, Any]], ...] = (
    (
        "quad_nodes",
        {
            "default": 64,
            "type": "int",
            "metavar": "<nodes>",
            "env": "RSP_QUAD_NODES",
            "minimum": 16,
            "help": "Number of uniform quadrature nodes used for every azimuthal average.",
        },
    ),
    (
        "max_chain",
        {
            "default": 12,
            "type": "int",
            "metavar": "<length>",
            "env": "RSP_MAX_CHAIN",
            "minimum": 1,
            "help": "Longest sharpness chain the protocol accepts.",
        },
    ),
    (
        "trials",
        {
            "default": 100000,
            "type": "int",
            "metavar": "<count>",
            "env": "RSP_TRIALS",
            "minimum": 1000,
            "help": "Default number of Monte-Carlo trials per configuration.",
        },
    ),
    (
        "batch_size",
        {
            "default": 25000,
            "type": "int",
            "metavar": "<count>",
            "env": "RSP_BATCH_SIZE",
            "minimum": 1,
            "help": "Monte-Carlo trials simulated per vectorised batch.",
        },
    ),
    (
        "log_level",
        {
            "default": "WARNING",
            "type": "choice",
            "choices": ("DEBUG", "INFO", "WARNING", "ERROR"),
            "metavar": "<level>",
            "env": "RSP_LOG_LEVEL",
            "help": "Logging level used when no verbosity flag is given.",
        },
    ),
)


class Config:
    """Utility class for reading options."""

    __OPTIONS = dict(OPTIONS)

    @staticmethod
    def get(name: str) -> Any:
        """
        Get the value of an option, preferring its environment variable over the default.

        :param name: Name of the option.
        :return: Parsed value of the option.
        """
        try:
            settings = Config.__OPTIONS[name]
        except KeyError:
            raise ConfigurationError("Unknown option '{}'.".format(name)) from None

        raw = os.environ.get(settings["env"])
        if raw is None or raw.strip() == "":
            return settings["default"]
        return Config.parse(name, raw)

    @staticmethod
    def parse(name: str, raw: str) -> Any:
        """
        Parse and check a textual option value.

        :param name: Name of the option.
        :param raw: Value as given on the command line or in the environment.
        :return: Parsed value.
        """
        settings = Config.__OPTIONS[name]
        if settings["type"] == "int":
            try:
                value = int(raw)
            except ValueError:
                raise ConfigurationError(
                    "{} must be an integer, got '{}'.".format(settings["env"], raw)
                ) from None
            if value < settings["minimum"]:
                raise ConfigurationError(
                    "{} must be at least {}, got {}.".format(settings["env"], settings["minimum"], value)
                )
            return value

        value = raw.strip().upper()
        if value not in settings["choices"]:
            raise ConfigurationError(
                "{} must be one of {}, got '{}'.".format(settings["env"], ", ".join(settings["choices"]), raw)
            )
        return value

    @staticmethod
    def quad_nodes() -> int:
        """Quadrature node count for azimuthal averages."""
        return Config.get("quad_nodes")

    @staticmethod
    def max_chain() -> int:
        """Longest accepted sharpness chain."""
        return Config.get("max_chain")
