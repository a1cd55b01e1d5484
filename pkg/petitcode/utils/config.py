from typing import Any, Mapping, Union

import os

from omegaconf import DictConfig, ListConfig, OmegaConf
from packaging import version

from petitcode.errors import ConfigError


SUPPORTED_CONFIG_VERSION = "1.0"


def omegaconf_to_dict(config: Any) -> Any:
    """Convert OmegaConf config to plain dicts and lists

    :param config: The OmegaConf config (or any nested value)
    :type config: OmegaConf.Config

    :return: The config as dict
    :rtype: dict
    """
    if isinstance(config, DictConfig):
        return {k: omegaconf_to_dict(v) for k, v in config.items()}
    if isinstance(config, ListConfig):
        return [omegaconf_to_dict(v) for v in config]
    return config


def print_cfg(d: Mapping, indent: int = 0) -> str:
    """Render a configuration dictionary as an indented tree

    :param d: The dictionary to render
    :type d: dict
    :param indent: The indentation level (default: 0)
    :type indent: int, optional
    """
    lines = []
    for key, value in d.items():
        if isinstance(value, dict):
            lines.append('  |   ' * indent + "  |-- {}".format(key))
            lines.append(print_cfg(value, indent + 1))
        else:
            lines.append('  |   ' * indent + "  |-- {}: {}".format(key, value))
    return "\n".join(line for line in lines if line)


def load_config(source: Union[str, Mapping, DictConfig]) -> dict:
    """Load a YAML config from a path, YAML text, a mapping or an OmegaConf object

    :raises ConfigError: If the YAML cannot be parsed
    """
    try:
        if isinstance(source, (DictConfig, ListConfig)):
            config = source
        elif isinstance(source, Mapping):
            config = OmegaConf.create(dict(source))
        elif os.path.isfile(source):
            config = OmegaConf.load(source)
        else:
            config = OmegaConf.create(source)
    except Exception as e:
        raise ConfigError("Cannot parse config ({})".format(e)) from e
    if not isinstance(config, DictConfig):
        raise ConfigError("Config must be a mapping")
    return omegaconf_to_dict(config)


def merge_configs(*configs: Mapping) -> dict:
    """Merge plain dicts with OmegaConf semantics (later configs win)"""
    return omegaconf_to_dict(OmegaConf.merge(*[OmegaConf.create(dict(c)) for c in configs]))


def check_version(config: Mapping, field: str = "version") -> None:
    """Reject configs written for an unsupported format version

    :raises ConfigError: If the major version differs from the supported one
    """
    value = str(config.get("version", SUPPORTED_CONFIG_VERSION))
    try:
        parsed = version.parse(value)
    except version.InvalidVersion as e:
        raise ConfigError("Invalid version {!r}".format(value), field=field) from e
    if parsed.major != version.parse(SUPPORTED_CONFIG_VERSION).major:
        raise ConfigError("Unsupported config version {} (supported: {}.x)" \
            .format(value, version.parse(SUPPORTED_CONFIG_VERSION).major), field=field)
