from typing import Dict, List

import os

from petitcode.errors import ConfigError


PRESETS_DIRECTORY = os.path.dirname(os.path.abspath(__file__))
KINDS = ("fields", "jobs")


def list_presets() -> Dict[str, List[str]]:
    """Names of the shipped presets, per kind

    :return: ``{"fields": [...], "jobs": [...]}`` in alphabetical order
    :rtype: dict
    """
    presets = {}
    for kind in KINDS:
        directory = os.path.join(PRESETS_DIRECTORY, kind)
        presets[kind] = sorted(os.path.splitext(name)[0] for name in os.listdir(directory) if name.endswith(".yaml"))
    return presets


def is_preset(kind: str, name: str) -> bool:
    return isinstance(name, str) and name in list_presets().get(kind, [])


def preset_path(kind: str, name: str) -> str:
    """Path of a shipped preset

    :param kind: ``"fields"`` or ``"jobs"``
    :type kind: str
    :param name: Preset name
    :type name: str

    :raises ConfigError: If no such preset exists

    :return: Absolute path of the YAML file
    :rtype: str
    """
    if not is_preset(kind, name):
        raise ConfigError("Unknown {} preset {!r} (available: {})" \
            .format(kind[:-1], name, ", ".join(list_presets().get(kind, []))), field=kind[:-1])
    return os.path.join(PRESETS_DIRECTORY, kind, name + ".yaml")
