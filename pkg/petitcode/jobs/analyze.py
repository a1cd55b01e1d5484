from typing import Any, Mapping, Optional

import copy

from petitcode import logger

from ..algebras import (ClaimCheck, DivisionStatus, PetitAlgebra, check_claim, cyclic_modulus, division_agreement,
                        find_zero_divisor, forms_agree, gamma_compatibility, is_division, nuclei, orbit_length,
                        two_sided_ideals)
from ..errors import BudgetExceeded
from ..orders import QuotientAlgebra, charpoly_annihilation_check
from ..rings import powers_rank
from .base import Job, Report, log_claims


ANALYZE_DEFAULT_CONFIG = {
    "analysis": {
        "nuclei": True,             # nuclei, commuter and center of the quotient algebra
        "ideals": True,             # two-sided ideals of the quotient algebra (within budgets.ideals)
        "zero_divisors": True,      # zero divisor search and its agreement with irreducibility
        "sweep": False,             # t^m - c for every nonzero c of the coefficient field
        "reductions": 0,            # number of sampled c in O_K \ O_F whose reductions are analysed
        "reduction_box": 3,         # coordinate range [-box, box] of the sampled c
        "representation": 100,      # sampled order elements for the matrix representation checks
        "gamma_pairs": 1000,        # sampled pairs of the matrix representation check on the quotient
    },
}


class AnalyzeJob(Job):
    def __init__(self, cfg: Mapping, name: str = "job") -> None:
        """Algebra flags, division status, nuclei and ideals of a Petit algebra and its quotient

        The analysis of the finite quotient needs an ``ideal`` block; without it only the
        algebra over ``O_K`` is analysed

        :param cfg: Job configuration
        :type cfg: dict
        :param name: Name of the config (default: ``"job"``)
        :type name: str, optional
        """
        _cfg = copy.deepcopy(ANALYZE_DEFAULT_CONFIG)
        super().__init__(cfg, name, _cfg)
        self.command = "analyze"
        self.claims = []

    def run(self) -> Report:
        self.init()
        instance = self.instance
        analysis = self.cfg["analysis"]
        report = Report("analyze: {}".format(self.name))
        expect = instance.expect or {}

        algebra = instance.algebra
        division = is_division(algebra, instance.division, budget=self.budget, threads=self.threads)
        report.add("algebra", {"name": algebra.name,
                               "modulus": str(algebra.f),
                               "rank": instance.order.rank,
                               "center": "O_{}".format(instance.center.name),
                               "associative": algebra.is_associative(),
                               "division": division.status.value,
                               "reason": division.reason})
        if analysis["representation"]:
            report.add("representation", self._representation(analysis["representation"]))

        if instance.ideal is not None:
            quotient = self.reduce()
            report.add("quotient", self._quotient(quotient, analysis, expect))
            if analysis["sweep"]:
                report.add("sweep", self._sweep(quotient, expect))
            if analysis["reductions"]:
                report.add("reductions", self._reductions(quotient, analysis["reductions"],
                                                          analysis["reduction_box"], expect))
        elif "division" in expect:
            self._claim("algebra is division", expect["division"], division.is_division)

        log_claims(report, self.claims)
        return report

    def _claim(self, claim: str, expected: Any, observed: Any, description: Optional[str] = None) -> ClaimCheck:
        check = check_claim(claim, expected, observed, description)
        self.claims.append(check)
        return check

    def _representation(self, samples: int) -> dict:
        order = self.instance.order
        algebra = order.algebra
        elements = [order.random_element(self.rng) for _ in range(samples)]
        if order.iterated:
            agree = sum(1 for x in elements if forms_agree(algebra, x))
            return {"samples": samples, "forms_agree": agree}
        if not algebra.is_cyclic_form():
            return {"samples": 0}
        passed = sum(1 for x in elements if charpoly_annihilation_check(order, x))
        if passed != samples:
            logger.warning("Characteristic polynomial annihilation failed on {} of {} samples".format(
                samples - passed, samples))
        return {"samples": samples, "charpoly_annihilation": passed}

    def _quotient(self, quotient: QuotientAlgebra, analysis: Mapping, expect: Mapping) -> dict:
        target = quotient.target
        Q = quotient.quotient_ring
        section = {"cardinality": quotient.cardinality(),
                   "coefficient_ring": Q.cardinality(),
                   "coefficient_field": Q.is_field(),
                   "fixed_ring": sum(1 for a in Q.elements() if quotient.sigma_bar(a) == a),
                   "associative": target.is_associative()}

        pairs = analysis["gamma_pairs"]
        if pairs:
            passed = gamma_compatibility(target, self.rng, pairs)
            section["gamma"] = {"pairs": pairs, "compatible": passed}
            self._claim("coordinates(x∘y) = γ(y)·coordinates(x)", pairs, passed,
                        "{} of {} pairs".format(passed, pairs))

        division = is_division(target, budget=self.budget, threads=self.threads, progress=self.progress)
        section["division"] = division.status.value
        section["reason"] = division.reason
        if "cardinality" in expect:
            self._claim("quotient cardinality", expect["cardinality"], quotient.cardinality())
        if "division" in expect:
            self._claim("quotient is division", expect["division"], division.is_division)

        if analysis["nuclei"]:
            report = nuclei(target, budget=self.budget, rng=self.rng, progress=self.progress)
            section["nuclei"] = {"mode": report.mode, **{name: value for name, value in report.cardinalities.items()}}

        if analysis["ideals"]:
            budget = self.cfg["budgets"]["ideals"]
            try:
                hint = division if target.cardinality() > budget else None
                ideals = two_sided_ideals(target, budget=budget, division=hint, progress=self.progress)
                section["ideals"] = [ideal.cardinality for ideal in ideals]
                if "ideals" in expect:
                    self._claim("two-sided ideals", expect["ideals"], section["ideals"])
            except BudgetExceeded as e:
                logger.info("Two-sided ideals skipped: {}".format(e))
                section["ideals"] = "skipped ({} > {})".format(e.required, e.budget)

        if analysis["zero_divisors"] and target.ring.is_field():
            found = find_zero_divisor(target, budget=self.budget, threads=self.threads, progress=self.progress)
            section["zero_divisor"] = None if found is None else "({}) ∘ ({}) = 0".format(found[0], found[1])
            if division.status != DivisionStatus.UNKNOWN:
                self.claims.append(division_agreement(target, budget=self.budget, threads=self.threads))
        return section

    def _cyclic_family(self, quotient: QuotientAlgebra) -> Optional[PetitAlgebra]:
        target = quotient.target
        if quotient.order.iterated or not target.is_cyclic_form() or not quotient.quotient_ring.is_field():
            logger.info("Sweeps need an algebra t^m - c over a finite field")
            return None
        return target

    def _irreducible(self, target: PetitAlgebra, c: Any) -> bool:
        skew_ring = target.skew_ring
        f = cyclic_modulus(skew_ring, c, target.m)
        return skew_ring.is_irreducible_finite(f, budget=self.budget, threads=self.threads)

    def _sweep(self, quotient: QuotientAlgebra, expect: Mapping) -> dict:
        """Division of ``t^m - c`` for every nonzero ``c``, against the degree of ``c`` over the fixed field"""
        target = self._cyclic_family(quotient)
        if target is None:
            return {"skipped": True}
        Q = quotient.quotient_ring
        m = target.m
        candidates = sum(Q.cardinality() ** k for k in range(1, m))
        required = (Q.cardinality() - 1) * candidates
        if required > self.budget:
            raise BudgetExceeded("division sweep", required, self.budget)

        division, degree_m, agree = 0, 0, 0
        for c in Q.elements():
            if Q.is_zero(c):
                continue
            irreducible = self._irreducible(target, c)
            full_degree = orbit_length(quotient.sigma_bar, c) == m
            division += irreducible
            degree_m += full_degree
            agree += irreducible == full_degree
        total = Q.cardinality() - 1
        self._claim("t^m - c irreducible <=> c of degree m over Fix(sigma)", total, agree,
                    "{} of {} agree".format(agree, total))
        if "sweep_all_division" in expect:
            self._claim("division for every nonzero c", expect["sweep_all_division"], division == total,
                        "{} of {} division".format(division, total))
        if "sweep_never_division" in expect:
            self._claim("never a division algebra", expect["sweep_never_division"], division == 0,
                        "{} of {} division".format(division, total))
        return {"nonzero": total, "division": division, "degree_m": degree_m, "agree": agree}

    def _reductions(self, quotient: QuotientAlgebra, samples: int, box: int, expect: Mapping) -> dict:
        """Reductions of sampled ``c`` outside the fixed field of ``sigma``"""
        target = self._cyclic_family(quotient)
        if target is None:
            return {"skipped": True}
        order = quotient.order
        field = order.field
        fixed = self.instance.algebra.skew_ring.sigma.fixes
        Q = quotient.quotient_ring
        m = target.m

        seen, tested, division, independent, ranks = set(), 0, 0, 0, {}
        attempts = 0
        while tested < samples and attempts < 100 * samples:
            attempts += 1
            c = field.element([int(v) for v in self.rng.integers(-box, box + 1, size=field.degree)])
            if fixed is not None and fixed.contains(c):
                continue
            c_bar = Q.project(c)
            if Q.is_zero(c_bar):
                continue
            tested += 1
            seen.add(c_bar)
            division += self._irreducible(target, c_bar)
            independent += orbit_length(quotient.sigma_bar, c_bar) == m
            rank = powers_rank(Q, c_bar, m)
            ranks[rank] = ranks.get(rank, 0) + 1
        if tested < samples:
            logger.warning("Only {} of {} reductions were nonzero".format(tested, samples))
        logger.info("1, c, ..., c^{} independent over Fix(sigma) for {} of {} reductions".format(m - 1, independent, tested))
        if "reductions_never_division" in expect:
            self._claim("reductions never give a division algebra", expect["reductions_never_division"], division == 0,
                        "{} of {} division".format(division, tested))
        if "powers_dependent" in expect:
            self._claim("1, c, ..., c^(m-1) always dependent over Fix(sigma)", expect["powers_dependent"],
                        independent == 0, "{} of {} independent".format(independent, tested))
        return {"tested": tested,
                "distinct": len(seen),
                "division": division,
                "independent": independent,
                "prime_field_ranks": {str(k): ranks[k] for k in sorted(ranks)}}
