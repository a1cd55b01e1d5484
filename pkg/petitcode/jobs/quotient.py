from typing import Mapping

import copy
import math

from petitcode import logger

from ..algebras import check_claim, cyclic_quotient_report
from ..rings import crt_decompose, local_ring_report, splitting_report
from .base import Job, Report, log_claims


QUOTIENT_DEFAULT_CONFIG = {
    "report": {
        "splitting": True,          # (e, f, g) of the ideal of the center in the coefficient quotient
        "local": True,              # unit / non-unit classification of non-field local quotients
        "cyclic": True,             # splitness of the reduced coefficient algebra D (iterated algebras)
    },
}


class QuotientJob(Job):
    def __init__(self, cfg: Mapping, name: str = "job") -> None:
        """Reduction of the natural order modulo the configured ideal

        :param cfg: Job configuration
        :type cfg: dict
        :param name: Name of the config (default: ``"job"``)
        :type name: str, optional
        """
        _cfg = copy.deepcopy(QUOTIENT_DEFAULT_CONFIG)
        super().__init__(cfg, name, _cfg)
        self.command = "quotient"

    def run(self) -> Report:
        self.init()
        quotient = self.reduce()
        instance = self.instance
        options = self.cfg["report"]
        expect = instance.expect or {}
        claims = []
        Q = quotient.quotient_ring
        report = Report("quotient: {}".format(self.name))

        report.add("quotient", {"ideal": "{}^{}".format(instance.ideal, instance.exponent)
                                if instance.exponent > 1 else str(instance.ideal),
                                "cardinality": quotient.cardinality(),
                                "rank": quotient.order.rank,
                                "modulus": str(quotient.target.f)})
        report.add("coefficients", {"name": Q.name,
                                    "cardinality": Q.cardinality(),
                                    "elementary_divisors": list(Q.moduli),
                                    "field": Q.is_field(),
                                    "fixed_ring": sum(1 for a in Q.elements() if quotient.sigma_bar(a) == a)})
        if "cardinality" in expect:
            claims.append(check_claim("quotient cardinality", expect["cardinality"], quotient.cardinality()))

        components = crt_decompose(Q, budget=self.budget, threads=self.threads, progress=self.progress)
        report.add("components", [component.cardinality for component in components])

        if options["splitting"]:
            try:
                splitting = splitting_report(Q, instance.center, budget=self.budget, components=components)
                report.add("splitting", {"e": splitting.e, "f": splitting.f, "g": splitting.g,
                                         "kind": splitting.kind, "consistent": splitting.consistent})
                if "splitting" in expect:
                    observed = {"e": splitting.e, "f": splitting.f, "g": splitting.g}
                    claims.append(check_claim("splitting data", dict(expect["splitting"]), observed))
            except ValueError as e:
                logger.info("Splitting data skipped: {}".format(e))
                report.add("splitting", "not a prime power")

        if options["local"] and not Q.is_field() and len(components) == 1:
            local = local_ring_report(Q)
            report.add("local", {"units": local.units, "maximal_ideal": local.maximal_ideal,
                                 "residue_field": local.residue_cardinality, "is_local": local.is_local})
            if instance.exponent > 1:
                claims.append(check_claim("|O_K / q^s| = |O_K / q|^s", Q.cardinality(),
                                          local.residue_cardinality ** instance.exponent))

        ideal = instance.ideal
        if ideal.factorization:
            norms = [prime.power(exponent).norm() for prime, exponent in ideal.factorization]
            report.add("factorization", norms)
            claims.append(check_claim("norm of the ideal equals the product of its prime powers", ideal.norm(),
                                      math.prod(norms)))

        if options["cyclic"] and quotient.order.iterated:
            cyclic = cyclic_quotient_report(quotient.target, budget=self.budget)
            report.add("cyclic", {"cardinality": cyclic.cardinality, "split": cyclic.split,
                                  "zero_divisor": cyclic.zero_divisor,
                                  "fixed_rho": cyclic.fix_rho, "fixed_sigma": cyclic.fix_sigma})
            if "split" in expect:
                claims.append(check_claim("reduced coefficient algebra is split", expect["split"], cyclic.split))

        log_claims(report, claims)
        return report
