"""Configuration handling class."""

import dataclasses
import logging
import os
import sys
from typing import Any, Dict, Optional

import yaml


class Error(Exception):
    """Base Exception handling class."""


class ConfigFileNotFoundError(Error):
    """File could not be found on disk."""


WZ_CONFIG_OS_ENV = "WZCHECK_CONFIG_FILE"

# Exit code shared with the command line for usage/config errors.
CONFIG_ERROR_EXIT_CODE = 3

OUTPUT_FORMATS = ("text", "json", "csv")


@dataclasses.dataclass
class Defaults:
    """A representation of the 'defaults' key in the configuration file.

    Attributes:
        pmin: Smallest prime of a verification sweep.
        pmax: Largest prime of a verification sweep.
        oracle_max: Primes up to this bound run both the fast and the exact path.
        nmax: Upper end of the n range for exact identities.
        grid: Side length of the telescoping grid.
        threads: Number of worker processes.
        format: Output format, one of OUTPUT_FORMATS.
        precision: Default unit precision of the fast path.
    """

    pmin: int = 5
    pmax: int = 199
    oracle_max: int = 97
    nmax: int = 300
    grid: int = 120
    threads: int = 1
    format: str = "text"
    precision: int = 6

    @classmethod
    def from_dict(cls, defaults_cfg: Dict[str, Any]) -> "Defaults":
        fmt = str(defaults_cfg.get("format", cls.format))
        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format {fmt!r}")
        return cls(
            pmin=int(defaults_cfg.get("pmin", cls.pmin)),
            pmax=int(defaults_cfg.get("pmax", cls.pmax)),
            oracle_max=int(defaults_cfg.get("oracle_max", cls.oracle_max)),
            nmax=int(defaults_cfg.get("nmax", cls.nmax)),
            grid=int(defaults_cfg.get("grid", cls.grid)),
            threads=int(defaults_cfg.get("threads", cls.threads)),
            format=fmt,
            precision=int(defaults_cfg.get("precision", cls.precision)),
        )


@dataclasses.dataclass
class Config:
    """A representation of the configuration file.

    Attributes:
        defaults: Defaults for the command line flags.
        logging_config: A logging.config.dictConfig dictionary, if configured.
    """

    defaults: Defaults
    logging_config: Optional[Dict[str, Any]]

    @classmethod
    def from_dict(cls, cfg: Dict[str, Any]) -> "Config":
        """Creates a Config object from a configuration file.
        Arguments:
            cfg: The configuration file as a dict.
        Returns:
            A Config object.
        """
        return cls(
            defaults=Defaults.from_dict(cfg.get("defaults") or {}),
            logging_config=cfg.get("logging_config"),
        )


_parsed_config: Optional[Config] = None


def get_config() -> Config:
    """Returns a parsed Config object.

    Without a configuration file the built-in defaults are returned.

    Returns:
        The Config representation of the config file
    """
    global _parsed_config
    if _parsed_config is None:
        try:
            cfg_contents = fetch_config_from_disk()
        except ConfigFileNotFoundError as e:
            print("Failed to read configuration: %s" % e, file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT_CODE)
        try:
            config = yaml.safe_load(cfg_contents) if cfg_contents else {}
        except yaml.YAMLError as e:
            print("Failed to load YAML file: %s" % e, file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT_CODE)
        try:
            config = Config.from_dict(config)
        except (KeyError, TypeError, AttributeError, ValueError) as e:
            print("Failed to lint file: %s" % e, file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT_CODE)
        _parsed_config = config
    return _parsed_config


def fetch_config_from_disk() -> str:
    """Fetches config file from disk and returns as string.

    Raises:
        ConfigFileNotFoundError: If the configured file could not be found on disk.
    Returns:
        The file contents as string, empty when no file is configured.
    """
    config_file = os.environ.get(WZ_CONFIG_OS_ENV)
    if not config_file:
        return ""
    logging.debug("getting config_file: %s", repr(config_file))
    try:
        with open(config_file, "r") as stream:
            return stream.read()
    except FileNotFoundError as e:
        raise ConfigFileNotFoundError(
            f"Could not locate configuration file in {config_file}"
        ) from e
