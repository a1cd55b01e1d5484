from typing import Mapping

import os
import copy

from petitcode import logger

from ..algebras import PetitAlgebra, check_claim
from ..coding import (InnerCodebook, OuterCode, base_code, codeword_record, full_code, full_diversity_check,
                      hamming_distance, lift_codeword, min_det, parity_code, prescribed_distance_code,
                      project_codeword, repetition_code, resolve_embedding, write_records)
from ..errors import ConfigError, InvariantViolation
from .base import Job, Report, log_claims


CODEBOOK_DEFAULT_CONFIG = {
    "code": {
        "length": 2,                # code length L
        "outer": "parity",          # outer code: parity, repetition, prescribed, full
        "base_code": "repetition",  # base code of the prescribed construction: zero, repetition, parity, full
        "box": 2,                   # coordinate range [-box, box] of the enumerated coset codes
        "support": None,            # order coordinates varying inside the box (default: rational parts)
        "embedding": "",            # complex embedding (default: the first one of the field)
        "form": "regular",          # matrix form of generalized cyclic algebras: regular or scalar
    },
    "codebook": {
        "limit": 0,                 # largest number of exported codewords (0: all)
        "diversity": 100,           # random pairs of the full-diversity check (0 to skip)
        "filename": "codebook",     # file name of the export (extension from the format)
    },
}

OUTER_CODES = ("parity", "repetition", "prescribed", "full")


def build_outer_code(alphabet: PetitAlgebra, cfg: Mapping, budget: int) -> OuterCode:
    """Outer code described by the ``code`` block

    :raises ConfigError: If the kind or the length is invalid
    """
    kind = cfg.get("outer")
    length = cfg.get("length")
    if not isinstance(length, int) or length < 1:
        raise ConfigError("The code length must be a positive integer", field="code.length")
    if kind == "parity":
        if length < 2:
            raise ConfigError("A parity code needs length >= 2", field="code.length")
        return parity_code(alphabet, length, budget)
    if kind == "repetition":
        return repetition_code(alphabet, length, budget)
    if kind == "full":
        return full_code(alphabet, length, budget)
    if kind == "prescribed":
        ring = alphabet.ring.base if alphabet.spec is not None else alphabet.ring
        try:
            base = base_code(ring, cfg.get("base_code", "repetition"), length)
        except ValueError as e:
            raise ConfigError(str(e), field="code.base_code") from e
        return prescribed_distance_code(base, alphabet, length, budget)
    raise ConfigError("Unknown outer code {!r} (available: {})".format(kind, ", ".join(OUTER_CODES)),
                      field="code.outer")


class CodebookJob(Job):
    def __init__(self, cfg: Mapping, name: str = "job") -> None:
        """Coset codebook: outer code over the quotient, lifted codewords and their matrices

        :param cfg: Job configuration
        :type cfg: dict
        :param name: Name of the config (default: ``"job"``)
        :type name: str, optional
        """
        _cfg = copy.deepcopy(CODEBOOK_DEFAULT_CONFIG)
        super().__init__(cfg, name, _cfg)
        self.command = "codebook"

    def run(self) -> Report:
        self.init()
        quotient = self.reduce()
        order = quotient.order
        code_cfg = self.cfg["code"]
        options = self.cfg["codebook"]
        expect = self.instance.expect or {}
        claims = []
        report = Report("codebook: {}".format(self.name))

        embedding = resolve_embedding(order.field, code_cfg.get("embedding"))
        code = build_outer_code(quotient.target, code_cfg, self.budget)
        hamming = hamming_distance(code, threads=self.threads, progress=self.progress)
        codebook = InnerCodebook(order, form=code_cfg.get("form", "regular"))

        limit = options["limit"] or len(code)
        codewords = []
        for index, word in enumerate(code.words[:limit]):
            codeword = lift_codeword(quotient, code, word, codebook)
            if project_codeword(quotient, codeword) != tuple(word):
                raise InvariantViolation("Lifted codeword does not reduce to its outer word", witness=index)
            codewords.append(codeword)
        records = [codeword_record(k, codeword, order, codebook, embedding) for k, codeword in enumerate(codewords)]

        extension = "jsonl" if self.cfg["experiment"]["format"] == "records" else "txt"
        filename = "{}.{}".format(options["filename"], extension)
        os.makedirs(self.experiment_dir, exist_ok=True)
        with open(os.path.join(self.experiment_dir, filename), "w") as file:
            written = write_records(file, records, self.cfg["experiment"]["format"])
        logger.info("Wrote {} codewords to {}".format(written, os.path.join(self.experiment_dir, filename)))

        elements = {x for codeword in codewords for x in codeword.elements if not x.is_zero()}
        report.add("code", {"outer": code.name, "length": code.length, "size": len(code),
                            "hamming_distance": hamming, "additive": code.is_additive()})
        report.add("codebook", {"file": filename, "records": written, "matrix_size": order.rank,
                                "min_det": min_det([codebook.matrix(x) for x in sorted(elements, key=str)], embedding)
                                if elements else None})
        if "hamming_distance" in expect:
            claims.append(check_claim("Hamming distance", expect["hamming_distance"], hamming))

        if options["diversity"]:
            diversity = full_diversity_check(order, embedding, self.rng, samples=options["diversity"],
                                             box=code_cfg["box"])
            report.add("diversity", {"pairs": diversity.pairs, "linear": diversity.linear,
                                     "full_rank": diversity.full_rank,
                                     "smallest": [round(v, 9) for v in diversity.smallest]})
            if "full_diversity" in expect:
                claims.append(check_claim("full diversity", expect["full_diversity"], diversity.full_rank))
        log_claims(report, claims)
        return report
