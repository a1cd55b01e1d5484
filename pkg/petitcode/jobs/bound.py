from typing import Mapping

import copy
import numbers

from ..algebras import check_claim
from ..coding import alpha_magnitudes, bound_check, key_bound, principal_generator, resolve_embedding
from ..errors import ConfigError
from .base import Job, Report, log_claims, parse_element
from .codebook import CODEBOOK_DEFAULT_CONFIG, build_outer_code


BOUND_DEFAULT_CONFIG = {
    "code": copy.deepcopy(CODEBOOK_DEFAULT_CONFIG["code"]),
    "bound": {
        "mode": "enumerate",        # enumerate: compare with a coset code, formula: evaluate the given values
        "min_det": None,            # formula mode: minimum determinant of the inner code
        "hamming": None,            # formula mode: Hamming distance of the outer code
        "alpha": None,              # formula mode: |alpha| or coordinates of alpha (default: ideal generator)
        "n": None,                  # formula mode: matrix size (default: rank of the natural order)
        "tolerance": 1e-6,          # relative tolerance of the enumerated comparison
    },
}


class BoundJob(Job):
    def __init__(self, cfg: Mapping, name: str = "job") -> None:
        """Minimum determinant bound of a coset code

        :param cfg: Job configuration
        :type cfg: dict
        :param name: Name of the config (default: ``"job"``)
        :type name: str, optional
        """
        _cfg = copy.deepcopy(BOUND_DEFAULT_CONFIG)
        super().__init__(cfg, name, _cfg)
        self.command = "bound"

    def _formula(self, report: Report) -> None:
        options = self.cfg["bound"]
        if options["min_det"] is None or options["hamming"] is None:
            raise ConfigError("Formula mode needs min_det and hamming", field="bound")
        field = self.instance.field
        embeddings = list(field.embeddings.values())
        alpha = options["alpha"]
        if alpha is None:
            alpha = principal_generator(self.instance.ideal) if self.instance.ideal is not None else None
            if alpha is None:
                raise ConfigError("Formula mode needs alpha or a principal ideal", field="bound.alpha")
        elif not isinstance(alpha, numbers.Number):
            alpha = parse_element(field, alpha, "bound.alpha")
        if not isinstance(alpha, numbers.Number) and self.cfg["code"].get("embedding"):
            embeddings = [resolve_embedding(field, self.cfg["code"]["embedding"])]
        n = options["n"] or self.instance.order.rank
        value = key_bound(float(options["min_det"]), int(options["hamming"]), alpha, n, embeddings)
        report.add("bound", {"mode": "formula",
                             "min_det": options["min_det"],
                             "hamming": options["hamming"],
                             "alpha_magnitudes": alpha_magnitudes(alpha, embeddings),
                             "n": n,
                             "value": round(value, 9)})

    def _enumerate(self, report: Report) -> bool:
        quotient = self.reduce()
        code_cfg = self.cfg["code"]
        embedding = resolve_embedding(self.instance.field, code_cfg.get("embedding"))
        code = build_outer_code(quotient.target, code_cfg, self.budget)
        result = bound_check(quotient, code, embedding, support=code_cfg.get("support"), box=code_cfg["box"],
                             budget=self.budget, threads=self.threads, progress=self.progress,
                             tolerance=self.cfg["bound"]["tolerance"])
        report.add("bound", {"mode": "enumerate",
                             "outer": code.name,
                             "length": code.length,
                             "box": code_cfg["box"],
                             "elements": result.elements,
                             "codewords": result.codewords,
                             "hamming": result.hamming,
                             "inner_min_det": round(result.inner_min_det, 9),
                             "alpha_magnitudes": [round(v, 9) for v in result.alpha_magnitudes],
                             "value": round(result.bound, 9),
                             "enumerated_min": round(result.enumerated_min, 9),
                             "valid": result.valid})
        return result.valid

    def run(self) -> Report:
        self.init()
        report = Report("bound: {}".format(self.name))
        mode = self.cfg["bound"]["mode"]
        if mode == "formula":
            self._formula(report)
        elif mode == "enumerate":
            valid = self._enumerate(report)
            log_claims(report, [check_claim("enumerated minimum >= bound", True, valid)])
        else:
            raise ConfigError("Unknown bound mode {!r} (available: enumerate, formula)".format(mode), field="bound.mode")
        return report
