from typing import Any, List, Mapping, Optional, TextIO, Tuple

import os
import json
from dataclasses import dataclass

import numpy as np

from petitcode import logger

from ..algebras import PetitAlgebra, cyclic_modulus, make_iterated, make_petit
from ..errors import ConfigError
from ..fields import FieldElement, IntegralIdeal, NumberField, Subfield, load_field
from ..orders import NaturalOrder, QuotientAlgebra, natural_order, reduce_mod
from ..presets import is_preset, preset_path
from ..rings import IntegralRing
from ..skew import SkewPolyRing
from ..utils import set_seed
from ..utils.config import check_version, load_config, merge_configs, print_cfg


JOB_DEFAULT_CONFIG = {
    "budgets": {
        "enumeration": 1000000,     # largest exhaustive scan (elements, candidates, codewords)
        "ideals": 4096,             # largest algebra whose two-sided ideals are enumerated
        "samples": 500,             # random pairs of the homomorphism and kernel checks
    },
    "threads": 1,                   # worker threads of partitioned scans
    "seed": 42,                     # seed of every sampled check
    "progress": False,              # whether to show progress bars
    "table_limit": 1024,            # largest coefficient quotient with precomputed tables
    "experiment": {
        "directory": "",            # output directory (default: ./runs)
        "experiment_name": "",      # experiment name (default: <preset>_<command>)
        "format": "text",           # report format: text or records
    },
}


def resolve_job_config(source: Any) -> Tuple[dict, str]:
    """Load a job config given as a preset name, a path, YAML text or a mapping

    :return: Plain config dict and its name (preset name, file stem or ``"job"``)
    :rtype: tuple
    """
    if isinstance(source, str) and is_preset("jobs", source):
        return load_config(preset_path("jobs", source)), source
    name = os.path.splitext(os.path.basename(source))[0] if isinstance(source, str) and os.path.isfile(source) else "job"
    return load_config(source), name


def parse_element(field: NumberField, coordinates: Any, path: str) -> FieldElement:
    if isinstance(coordinates, (int, str)):
        coordinates = [coordinates] + [0] * (field.degree - 1)
    try:
        return FieldElement(field, list(coordinates))
    except (TypeError, ValueError) as e:
        raise ConfigError("Invalid element {!r} ({})".format(coordinates, e), field=path) from e


def _lookup(table: Mapping, name: Any, path: str, what: str) -> Any:
    if name not in table:
        raise ConfigError("Unknown {} {!r} (available: {})".format(what, name, ", ".join(map(str, table)) or "none"),
                          field=path)
    return table[name]


@dataclass
class Instance:
    field: NumberField
    algebra: PetitAlgebra
    order: NaturalOrder
    ideal: Optional[IntegralIdeal] = None
    exponent: int = 1
    division: Optional[dict] = None
    expect: Optional[dict] = None

    @property
    def center(self) -> Subfield:
        return self.order.center


def build_algebra(field: NumberField, cfg: Mapping) -> PetitAlgebra:
    """Petit algebra over ``O_K`` described by the ``algebra`` block

    :raises ConfigError: If a name does not resolve or the modulus is malformed
    """
    if not cfg:
        raise ConfigError("Missing algebra block", field="algebra")
    ring = IntegralRing(field)
    sigma = _lookup(field.automorphisms, cfg.get("sigma"), "algebra.sigma", "automorphism")
    iterated = cfg.get("iterated")
    if iterated:
        rho = _lookup(field.automorphisms, iterated.get("rho"), "algebra.iterated.rho", "automorphism")
        c = parse_element(field, iterated.get("c"), "algebra.iterated.c")
        d = parse_element(field, iterated.get("d"), "algebra.iterated.d")
        return make_iterated(ring, rho, c, rho.order, sigma, d, sigma.order, name=cfg.get("name", ""))

    delta = None
    if cfg.get("delta"):
        delta = _lookup(field.derivations, cfg["delta"], "algebra.delta", "derivation")
    skew_ring = SkewPolyRing(ring, sigma, delta)
    modulus = cfg.get("modulus") or {}
    if "d" in modulus:
        f = cyclic_modulus(skew_ring, parse_element(field, modulus["d"], "algebra.modulus.d"), sigma.order)
    elif "coefficients" in modulus:
        f = skew_ring.poly([parse_element(field, c, "algebra.modulus.coefficients[{}]".format(k))
                            for k, c in enumerate(modulus["coefficients"])])
    else:
        raise ConfigError("The modulus needs 'd' or 'coefficients'", field="algebra.modulus")
    return make_petit(skew_ring, f, name=cfg.get("name", ""))


def build_ideal(field: NumberField, cfg: Mapping) -> Tuple[IntegralIdeal, int]:
    """Ideal and exponent described by the ``ideal`` block"""
    subring = _lookup(field.subfields, cfg.get("subring", "Q"), "ideal.subring", "subfield")
    generators = [parse_element(field, g, "ideal.generators[{}]".format(k)) for k, g in enumerate(cfg.get("generators") or [])]
    if not generators:
        raise ConfigError("The ideal needs at least one generator", field="ideal.generators")
    factorization = []
    for k, entry in enumerate(cfg.get("factorization") or []):
        path = "ideal.factorization[{}]".format(k)
        prime = [parse_element(field, g, path + ".generators") for g in entry.get("generators") or []]
        try:
            factorization.append((IntegralIdeal(subring, prime), int(entry.get("exponent", 1))))
        except ValueError as e:
            raise ConfigError(str(e), field=path) from e
    try:
        ideal = IntegralIdeal(subring, generators, factorization or None)
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(str(e), field="ideal.generators") from e
    exponent = int(cfg.get("exponent", 1))
    if exponent < 1:
        raise ConfigError("The exponent must be positive", field="ideal.exponent")
    return ideal, exponent


def build_instance(cfg: Mapping) -> Instance:
    """Field, algebra, natural order and ideal of a job config

    :raises ConfigError: If the config is malformed
    """
    check_version(cfg)
    if "field" not in cfg:
        raise ConfigError("Missing field", field="field")
    field = load_field(cfg["field"])
    algebra_cfg = cfg.get("algebra") or {}
    algebra = build_algebra(field, algebra_cfg)
    center = None
    if algebra_cfg.get("center"):
        center = _lookup(field.subfields, algebra_cfg["center"], "algebra.center", "subfield")
    elif algebra.spec is not None:
        center = field.subfields.get("Q")
    try:
        order = natural_order(algebra, center)
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(str(e), field="algebra") from e
    ideal, exponent = None, 1
    if cfg.get("ideal"):
        ideal, exponent = build_ideal(field, cfg["ideal"])
    return Instance(field=field, algebra=algebra, order=order, ideal=ideal, exponent=exponent,
                    division=algebra_cfg.get("division"), expect=cfg.get("expect"))


class Report():
    def __init__(self, title: str) -> None:
        """Ordered report of a job, rendered as a text tree or as one JSON line"""
        self.title = title
        self.entries = {}

    def __getitem__(self, key: str) -> Any:
        return self.entries[key]

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def add(self, key: str, value: Any) -> None:
        self.entries[key] = value

    def render(self, format: str = "text") -> str:
        """Deterministic rendering

        :raises ValueError: If the format is unknown
        """
        if format == "records":
            return json.dumps({"report": self.title, **self.entries}, sort_keys=True, separators=(",", ":"),
                              default=str)
        if format == "text":
            return "{}\n{}".format(self.title, print_cfg(self.entries))
        raise ValueError("Unsupported format: {}. Available formats: text, records".format(format))


class Job():
    def __init__(self, cfg: Mapping, name: str = "job", default: Optional[Mapping] = None) -> None:
        """Base class of the command jobs

        :param cfg: Job configuration (merged over the job's default configuration)
        :type cfg: dict
        :param name: Name of the config (preset name or file stem) (default: ``"job"``)
        :type name: str, optional
        :param default: Default configuration of the concrete job (default: ``None``)
        :type default: dict, optional
        """
        self.cfg = merge_configs(JOB_DEFAULT_CONFIG, default or {}, cfg)
        self.name = name
        self.command = "job"

        budgets = self.cfg["budgets"]
        for key, value in budgets.items():
            if not isinstance(value, int) or value <= 0:
                raise ConfigError("Budgets must be positive integers", field="budgets.{}".format(key))
        self.budget = budgets["enumeration"]
        self.threads = int(self.cfg["threads"])
        self.progress = bool(self.cfg["progress"])
        self.seed = set_seed(self.cfg["seed"])
        self.rng = np.random.default_rng(self.seed)
        self.instance = None
        self.quotient = None

    def __str__(self) -> str:
        """Generate a representation of the job as string

        :return: Representation of the job as string
        :rtype: str
        """
        string = "Job: {} ({})".format(self.command, self.name)
        for k, v in self.cfg.items():
            if type(v) is dict:
                string += "\n  |-- {}".format(k)
                for k1, v1 in v.items():
                    string += "\n  |     |-- {}: {}".format(k1, v1)
            else:
                string += "\n  |-- {}: {}".format(k, v)
        return string

    @property
    def experiment_dir(self) -> str:
        directory = self.cfg["experiment"].get("directory", "") or os.path.join(os.getcwd(), "runs")
        experiment_name = self.cfg["experiment"].get("experiment_name", "") or "{}_{}".format(self.name, self.command)
        return os.path.join(directory, experiment_name)

    def init(self) -> None:
        """Build the instance described by the config"""
        self.instance = build_instance(self.cfg)

    def reduce(self) -> QuotientAlgebra:
        """Quotient of the natural order by the configured ideal

        :raises ConfigError: If the config has no ideal
        """
        if self.quotient is None:
            if self.instance.ideal is None:
                raise ConfigError("This command needs an ideal block", field="ideal")
            self.quotient = reduce_mod(self.instance.order, self.instance.ideal, self.instance.exponent,
                                       samples=self.cfg["budgets"]["samples"], seed=self.seed,
                                       table_limit=self.cfg["table_limit"])
        return self.quotient

    def run(self) -> Report:
        """Run the job

        :raises NotImplementedError: Not implemented
        """
        raise NotImplementedError

    def write(self, report: Report, stream: TextIO) -> None:
        stream.write(report.render(self.cfg["experiment"]["format"]) + "\n")


def log_claims(report: Report, checks: List[Any]) -> None:
    if checks:
        report.add("claims", {"{}".format(k): str(check) for k, check in enumerate(checks)})
        for check in checks:
            logger.info("Claim check: {}".format(check))
