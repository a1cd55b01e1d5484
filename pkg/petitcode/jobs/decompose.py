from typing import Mapping

import copy

from petitcode import logger

from ..algebras import check_claim, is_division
from ..errors import InvariantViolation
from ..orders import ComponentAlgebra, QuotientAlgebra, decompose_quotient, project_component, slot_permutation_holds
from .base import Job, Report, log_claims


DECOMPOSE_DEFAULT_CONFIG = {
    "decomposition": {
        "samples": 100,             # random pairs checking that the projections are multiplicative
        "division": True,           # division status of every component algebra
    },
}


class DecomposeJob(Job):
    def __init__(self, cfg: Mapping, name: str = "job") -> None:
        """Product decomposition of the quotient algebra over the local factors of the coefficient quotient

        :param cfg: Job configuration
        :type cfg: dict
        :param name: Name of the config (default: ``"job"``)
        :type name: str, optional
        """
        _cfg = copy.deepcopy(DECOMPOSE_DEFAULT_CONFIG)
        super().__init__(cfg, name, _cfg)
        self.command = "decompose"

    def _verify_projection(self, quotient: QuotientAlgebra, component: ComponentAlgebra, samples: int) -> None:
        """Projection onto a component is multiplicative

        :raises InvariantViolation: With the failing pair
        """
        target = quotient.target
        for _ in range(samples):
            x, y = target.random_element(self.rng), target.random_element(self.rng)
            left = project_component(quotient, component, target.mul(x, y))
            right = component.algebra.mul(project_component(quotient, component, x),
                                          project_component(quotient, component, y))
            if left != right:
                raise InvariantViolation("Projection onto {} is not multiplicative".format(component.algebra.name),
                                         witness=(str(x), str(y)))

    def run(self) -> Report:
        self.init()
        quotient = self.reduce()
        options = self.cfg["decomposition"]
        expect = self.instance.expect or {}
        claims = []
        report = Report("decompose: {}".format(self.name))

        decomposition = decompose_quotient(quotient, budget=self.budget, threads=self.threads, progress=self.progress)
        report.add("quotient", {"cardinality": decomposition.cardinality,
                                "ring_components": len(decomposition.ring_components),
                                "components": len(decomposition.components)})

        slots_hold = True
        for position, component in enumerate(decomposition.components):
            holds = all(slot_permutation_holds(cycle, quotient.sigma_bar) for cycle in component.cycles)
            slots_hold = slots_hold and holds
            section = {"cardinality": component.cardinality,
                       "coefficient_ring": component.algebra.ring.cardinality(),
                       "slots": component.slots,
                       "cycles": [len(cycle) for cycle in component.cycles],
                       "split": component.split,
                       "slot_permutation": holds}
            if options["division"]:
                section["division"] = is_division(component.algebra, budget=self.budget, threads=self.threads).status.value
            if options["samples"]:
                self._verify_projection(quotient, component, options["samples"])
            report.add("component {}".format(position), section)
        if not slots_hold:
            logger.warning("The induced automorphism does not permute the slots cyclically")

        if "ring_components" in expect:
            claims.append(check_claim("number of local factors", expect["ring_components"],
                                      len(decomposition.ring_components)))
        if "components" in expect:
            claims.append(check_claim("component cardinalities", sorted(expect["components"]),
                                      sorted(decomposition.component_cardinalities)))
        log_claims(report, claims)
        return report
