from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

import functools
import itertools

from omegaconf import DictConfig

from petitcode import logger
from petitcode.errors import AxiomViolation, ConfigError
from petitcode.presets import is_preset, preset_path
from petitcode.utils.config import check_version, load_config

from .base import ComplexEmbedding, FieldAutomorphism, FieldDerivation, FieldElement, NumberField, Subfield


__all__ = ["load_field"]


def load_field(spec: Union[str, Mapping, DictConfig]) -> NumberField:
    """Load and validate a number field

    The field is given either by ``generators`` (monic integer minimal polynomials of
    linearly disjoint monogenic components, the basis being the tensor product of their
    power bases with the first generator varying fastest) or by an explicit ``basis``
    and ``mul_table``.  Every invariant is verified: ring axioms on basis triples,
    automorphism multiplicativity, order and fixed subfield, derivation laws, subfield
    closure and embedding residuals

    Example::

        >>> from petitcode.fields import load_field
        >>> K = load_field("gaussian_sqrt5")
        >>> K.labels
        ['1', 'i', 'phi', 'i*phi']

    :param spec: Preset name, path to a YAML file, YAML text or mapping
    :type spec: str, dict or DictConfig

    :raises ConfigError: If the spec is malformed or names cannot be resolved
    :raises AxiomViolation: With the offending basis triple
    :raises BadAutomorphism: With a witness basis pair

    :return: Validated number field
    :rtype: NumberField
    """
    if isinstance(spec, str) and is_preset("fields", spec):
        return _load_preset(spec)
    return _build_field(load_config(spec))


@functools.lru_cache(maxsize=None)
def _load_preset(name: str) -> NumberField:
    logger.info("Loading field preset: {}".format(name))
    return _build_field(load_config(preset_path("fields", name)))


def _build_field(cfg: Dict[str, Any]) -> NumberField:
    check_version(cfg)
    name = str(cfg.get("name", "K"))
    if "generators" in cfg:
        field, components = _tensor_field(name, cfg["generators"] or [])
    elif "basis" in cfg and "mul_table" in cfg:
        field, components = _explicit_field(name, cfg["basis"], cfg["mul_table"]), None
    else:
        raise ConfigError("Field spec needs either 'generators' or 'basis' and 'mul_table'", field="field")
    field.verify_axioms()
    field.verify_domain()

    # subfields
    field.subfields["Q"] = Subfield(field, "Q", [0])
    for subfield_name, entries in (cfg.get("subfields") or {}).items():
        indices = _subfield_indices(field, components, entries, "subfields.{}".format(subfield_name))
        subfield = Subfield(field, subfield_name, indices)
        subfield.verify_closure()
        field.subfields[subfield_name] = subfield
    field.subfields.setdefault("K", Subfield(field, "K", range(field.degree)))

    # automorphisms
    for automorphism_name, entry in (cfg.get("automorphisms") or {}).items():
        path = "automorphisms.{}".format(automorphism_name)
        fixes = entry.get("fixes")
        if fixes is not None and fixes not in field.subfields:
            raise ConfigError("Unknown subfield {!r}".format(fixes), field=path + ".fixes")
        images = _automorphism_images(field, components, entry, path)
        automorphism = FieldAutomorphism(field, automorphism_name, images, order=entry.get("order"),
                                         fixes=field.subfields.get(fixes) if fixes is not None else None)
        automorphism.validate()
        field.automorphisms[automorphism_name] = automorphism

    # derivations
    for derivation_name, entry in (cfg.get("derivations") or {}).items():
        path = "derivations.{}".format(derivation_name)
        sigma = field.automorphisms.get(entry.get("sigma"))
        if sigma is None:
            raise ConfigError("Unknown automorphism {!r}".format(entry.get("sigma")), field=path + ".sigma")
        if "inner" in entry:
            derivation = FieldDerivation.inner(derivation_name, sigma, FieldElement(field, entry["inner"]))
        elif "basis_images" in entry:
            derivation = FieldDerivation(field, derivation_name, sigma, entry["basis_images"])
        else:
            raise ConfigError("Derivation needs 'inner' or 'basis_images'", field=path)
        derivation.validate()
        field.derivations[derivation_name] = derivation

    # embeddings
    for embedding_name, entry in (cfg.get("embeddings") or {}).items():
        embedding = ComplexEmbedding(field, embedding_name, _embedding_images(field, components, entry,
                                                                              "embeddings.{}".format(embedding_name)))
        embedding.validate()
        field.embeddings[embedding_name] = embedding
    return field


def _tensor_field(name: str, generators: Sequence[Mapping]) -> Tuple[NumberField, List[Dict[str, Any]]]:
    components = []
    for position, generator in enumerate(generators):
        path = "generators[{}]".format(position)
        minpoly = [int(c) for c in generator.get("minpoly", [])]
        if len(minpoly) < 2 or minpoly[-1] != 1:
            raise ConfigError("Minimal polynomial must be monic of degree >= 1", field=path + ".minpoly")
        components.append({"name": str(generator.get("name", "x{}".format(position))),
                           "minpoly": minpoly,
                           "degree": len(minpoly) - 1,
                           "powers": _reduced_powers(minpoly)})

    degrees = [component["degree"] for component in components]
    exponents = [tuple(reversed(e)) for e in itertools.product(*[range(d) for d in reversed(degrees)])]
    index = {e: k for k, e in enumerate(exponents)}

    labels = []
    for e in exponents:
        parts = [c["name"] if k == 1 else "{}^{}".format(c["name"], k) for c, k in zip(components, e) if k]
        labels.append("*".join(parts) if parts else "1")

    n = len(exponents)
    table = [[None] * n for _ in range(n)]
    for a, e in enumerate(exponents):
        for b, f in enumerate(exponents):
            coordinates = [0] * n
            factors = [component["powers"][x + y] for component, x, y in zip(components, e, f)]
            for g in itertools.product(*[range(d) for d in degrees]):
                value = 1
                for factor, k in zip(factors, g):
                    value *= factor[k]
                    if not value:
                        break
                if value:
                    coordinates[index[g]] += value
            table[a][b] = coordinates

    generator_indices = {}
    for position, component in enumerate(components):
        e = tuple(int(k == position) for k in range(len(components)))
        if component["degree"] > 1:
            generator_indices[component["name"]] = index[e]
        component["index"] = index
        component["position"] = position
    for component in components:
        component["exponents"] = exponents
    return NumberField(name, labels, table, generator_indices), components


def _reduced_powers(minpoly: Sequence[int]) -> List[List[int]]:
    """Coordinates of x^k (k < 2 deg - 1) in the power basis modulo a monic polynomial"""
    degree = len(minpoly) - 1
    powers = []
    current = [1] + [0] * (degree - 1)
    for _ in range(max(2 * degree - 1, 1)):
        powers.append(current)
        # multiply by x and reduce x^deg = -(c_0 + ... + c_{deg-1} x^{deg-1})
        carry = current[-1]
        current = [0] + current[:-1]
        current = [value - carry * c for value, c in zip(current, minpoly[:-1])]
    return powers


def _explicit_field(name: str, basis: Sequence[str], mul_table: Sequence) -> NumberField:
    n = len(basis)
    if len(mul_table) != n or any(len(row) != n or any(len(entry) != n for entry in row) for row in mul_table):
        raise ConfigError("mul_table must be {0}x{0} lists of {0} coordinates".format(n), field="mul_table")
    if str(basis[0]) != "1":
        raise AxiomViolation("The first basis element must be 1", field="basis", witness=(0, 0, 0))
    return NumberField(name, [str(label) for label in basis], mul_table)


def _component_element(field: NumberField, component: Dict[str, Any], polynomial: Sequence[Any]) -> FieldElement:
    if len(polynomial) > component["degree"]:
        raise ConfigError("Image of {} must have at most {} coefficients".format(component["name"], component["degree"]))
    coordinates = [0] * field.degree
    for k, c in enumerate(polynomial):
        e = tuple(k if position == component["position"] else 0 for position in range(len(component["exponents"][0])))
        coordinates[component["index"][e]] = c
    return FieldElement(field, coordinates)


def _automorphism_images(field: NumberField, components: Any, entry: Mapping, path: str) -> List[Tuple]:
    if "basis_images" in entry:
        images = entry["basis_images"]
        if len(images) != field.degree:
            raise ConfigError("Expected {} basis images".format(field.degree), field=path + ".basis_images")
        return [tuple(image) for image in images]
    if components is None:
        raise ConfigError("Explicit-basis fields need 'basis_images'", field=path)
    by_name = {component["name"]: component for component in components}
    generator_images = []
    for component in components:
        polynomial = (entry.get("images") or {}).get(component["name"])
        if polynomial is None:
            generator_images.append(_component_element(field, component, [0, 1]))
        elif isinstance(polynomial, Mapping) and "coordinates" in polynomial:
            generator_images.append(FieldElement(field, polynomial["coordinates"]))
        else:
            generator_images.append(_component_element(field, component, polynomial))
    for key in (entry.get("images") or {}):
        if key not in by_name:
            raise ConfigError("Unknown generator {!r}".format(key), field=path + ".images")
    images = []
    for e in components[0]["exponents"] if components else [()]:
        image = field.one()
        for generator_image, k in zip(generator_images, e):
            image = image * generator_image ** k
        images.append(image.coordinates)
    return images


def _subfield_indices(field: NumberField, components: Any, entries: Sequence[Any], path: str) -> List[int]:
    entries = list(entries or [])
    if all(isinstance(entry, int) for entry in entries):
        indices = sorted(set([0] + entries))
        if any(k >= field.degree or k < 0 for k in indices):
            raise ConfigError("Basis index out of range", field=path)
        return indices
    if components is None:
        raise ConfigError("Explicit-basis fields need basis indices", field=path)
    names = {component["name"]: component["position"] for component in components}
    unknown = [entry for entry in entries if entry not in names]
    if unknown:
        raise ConfigError("Unknown generators {}".format(unknown), field=path)
    allowed = {names[entry] for entry in entries}
    exponents = components[0]["exponents"]
    return [k for k, e in enumerate(exponents) if all(not x or position in allowed for position, x in enumerate(e))]


def _embedding_images(field: NumberField, components: Any, entry: Mapping, path: str) -> List[complex]:
    if "basis_images" in entry:
        images = [complex(*value) if isinstance(value, (list, tuple)) else complex(value) for value in entry["basis_images"]]
        if len(images) != field.degree:
            raise ConfigError("Expected {} basis images".format(field.degree), field=path)
        return images
    if components is None:
        raise ConfigError("Explicit-basis fields need 'basis_images'", field=path)
    values = []
    for component in components:
        if component["name"] not in entry:
            raise ConfigError("Missing image of generator {!r}".format(component["name"]), field=path)
        raw = entry[component["name"]]
        z = complex(*raw) if isinstance(raw, (list, tuple)) else complex(raw)
        residual = sum(c * z ** k for k, c in enumerate(component["minpoly"]))
        scale = max(1.0, sum(abs(c) * abs(z) ** k for k, c in enumerate(component["minpoly"])))
        if abs(residual) > 1e-9 * scale:
            raise ConfigError("Image of {} misses its minimal polynomial (residual {:.3e})" \
                .format(component["name"], abs(residual)), field=path)
        values.append(z)
    images = []
    for e in components[0]["exponents"] if components else [()]:
        image = 1 + 0j
        for z, k in zip(values, e):
            image *= z ** k
        images.append(image)
    return images
