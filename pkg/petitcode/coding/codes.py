from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

import itertools

import tqdm

from ..algebras import CyclicAlgebraRing, PetitAlgebra, PetitElement
from ..errors import BudgetExceeded, EmptyCode, NotAField
from ..rings import CoefficientRing
from ..utils import partitioned_search


Word = Tuple[PetitElement, ...]


class OuterCode():
    def __init__(self,
                 alphabet: PetitAlgebra,
                 length: int,
                 words: Sequence[Word],
                 name: str = "",
                 systematic: Optional[int] = None,
                 encoder: Optional[Callable[[Sequence[PetitElement]], Word]] = None,
                 generators: Optional[Sequence[Word]] = None) -> None:
        """Code of length ``L`` over a finite Petit algebra

        :param alphabet: Finite quotient algebra ``Λ / IΛ``
        :type alphabet: PetitAlgebra
        :param length: Code length ``L``
        :type length: int
        :param words: Codewords (``L``-tuples of algebra elements)
        :type words: sequence of tuples
        :param name: Code name (default: ``""``)
        :type name: str, optional
        :param systematic: Number ``k`` of leading positions that determine a codeword (default: ``None``)
        :type systematic: int, optional
        :param encoder: Map from the ``k`` leading entries to the codeword (default: ``None``)
        :type encoder: callable, optional
        :param generators: Additive generators for the closure check (default: ``None``)
        :type generators: sequence of tuples, optional
        """
        self.alphabet = alphabet
        self.length = length
        self.name = name or "outer code"
        self.words = list(dict.fromkeys(tuple(word) for word in words))
        self.systematic = systematic
        self.encoder = encoder
        self.generators = list(generators) if generators is not None else None
        self._members = set(self.words)

    def __str__(self) -> str:
        string = "Outer code: {}".format(self.name)
        string += "\n  |-- length: {}".format(self.length)
        string += "\n  |-- size: {}".format(len(self))
        string += "\n  |-- alphabet: {} ({} elements)".format(self.alphabet.name, self.alphabet.cardinality())
        return string

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word: Sequence[PetitElement]) -> bool:
        return tuple(word) in self._members

    def zero(self) -> Word:
        return (self.alphabet.zero(),) * self.length

    def encode(self, information: Sequence[PetitElement]) -> Word:
        """Codeword with the given leading entries

        :raises ValueError: If the code has no systematic encoder
        """
        if self.encoder is None:
            raise ValueError("{} has no systematic encoder".format(self.name))
        return self.encoder(information)

    def is_additive(self) -> bool:
        """Closure under addition, checked on the additive generators (all words if none are known)"""
        if self.zero() not in self:
            return False
        generators = self.generators if self.generators is not None else self.words
        return all(add_words(a, b) in self for a in generators for b in self.words)


def add_words(a: Sequence[PetitElement], b: Sequence[PetitElement]) -> Word:
    return tuple(x + y for x, y in zip(a, b))


def weight(word: Sequence[PetitElement]) -> int:
    """Number of nonzero positions"""
    return sum(1 for x in word if not x.is_zero())


def distance(a: Sequence[PetitElement], b: Sequence[PetitElement]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def _unit_words(alphabet: PetitAlgebra, positions: int) -> List[Tuple[PetitElement, ...]]:
    zero = alphabet.zero()
    return [tuple(g if k == j else zero for k in range(positions))
            for j in range(positions) for g in alphabet.additive_basis()]


def _check_budget(what: str, size: int, budget: int) -> None:
    if size > budget:
        raise BudgetExceeded(what, size, budget)


def full_code(alphabet: PetitAlgebra, length: int, budget: int = 1000000) -> OuterCode:
    """All ``L``-tuples

    :raises BudgetExceeded: If ``|A|^L`` exceeds the budget
    """
    _check_budget("full code", alphabet.cardinality() ** length, budget)
    elements = list(alphabet.elements())
    return OuterCode(alphabet, length, list(itertools.product(elements, repeat=length)), name="full",
                     systematic=length, encoder=tuple, generators=_unit_words(alphabet, length))


def repetition_code(alphabet: PetitAlgebra, length: int, budget: int = 1000000) -> OuterCode:
    """Words ``(x, x, ..., x)``, Hamming distance ``L``

    :raises BudgetExceeded: If ``|A|`` exceeds the budget
    """
    _check_budget("repetition code", alphabet.cardinality(), budget)

    def encoder(information: Sequence[PetitElement]) -> Word:
        return (information[0],) * length

    generators = [encoder((g,)) for g in alphabet.additive_basis()]
    return OuterCode(alphabet, length, [encoder((x,)) for x in alphabet.elements()], name="repetition",
                     systematic=1, encoder=encoder, generators=generators)


def parity_code(alphabet: PetitAlgebra, length: int, budget: int = 1000000) -> OuterCode:
    """Words ``(x_1, ..., x_(L-1), x_1 + ... + x_(L-1))``, Hamming distance 2

    :raises BudgetExceeded: If ``|A|^(L-1)`` exceeds the budget
    :raises ValueError: If ``L < 2``
    """
    if length < 2:
        raise ValueError("A parity code needs length >= 2")
    _check_budget("parity code", alphabet.cardinality() ** (length - 1), budget)

    def encoder(information: Sequence[PetitElement]) -> Word:
        total = alphabet.zero()
        for x in information:
            total = total + x
        return tuple(information) + (total,)

    elements = list(alphabet.elements())
    words = [encoder(information) for information in itertools.product(elements, repeat=length - 1)]
    generators = [encoder(unit) for unit in _unit_words(alphabet, length - 1)]
    return OuterCode(alphabet, length, words, name="parity", systematic=length - 1, encoder=encoder,
                     generators=generators)


def base_code(ring: CoefficientRing, kind: str, length: int) -> List[Tuple[Any, ...]]:
    """Additive code over the coefficient ring used by the prescribed-distance construction

    Kinds: ``"zero"``, ``"repetition"``, ``"parity"`` (single parity check) and ``"full"``

    :raises ValueError: If the kind is unknown
    """
    elements = list(ring.elements())
    zero = ring.zero()
    if kind == "zero":
        return [(zero,) * length]
    if kind == "repetition":
        return [(a,) * length for a in elements]
    if kind == "parity":
        words = []
        for information in itertools.product(elements, repeat=length - 1):
            total = zero
            for a in information:
                total = ring.add(total, a)
            words.append(tuple(information) + (total,))
        return words
    if kind == "full":
        return list(itertools.product(elements, repeat=length))
    raise ValueError("Unknown base code: {}".format(kind))


def _first_coordinate(alphabet: PetitAlgebra, x: PetitElement) -> Any:
    head = x.coefficients[0]
    return head[0] if isinstance(alphabet.ring, CyclicAlgebraRing) else head


def _free_parts(alphabet: PetitAlgebra) -> List[Callable[[Any], PetitElement]]:
    """Builders ``a -> a + rest`` for every choice of the coordinates after the first one"""
    ring = alphabet.ring
    if isinstance(ring, CyclicAlgebraRing):
        base = ring.base
        elements = list(base.elements())
        rests = itertools.product(elements, repeat=alphabet.m * ring.n - 1)
        n = ring.n

        def builder(rest: Tuple[Any, ...]) -> Callable[[Any], PetitElement]:
            def build(a: Any) -> PetitElement:
                flat = (a,) + rest
                return alphabet.element([tuple(flat[j * n:(j + 1) * n]) for j in range(alphabet.m)])
            return build
    else:
        rests = itertools.product(list(ring.elements()), repeat=alphabet.m - 1)

        def builder(rest: Tuple[Any, ...]) -> Callable[[Any], PetitElement]:
            def build(a: Any) -> PetitElement:
                return alphabet.element((a,) + rest)
            return build
    return [builder(rest) for rest in rests]


def prescribed_distance_code(base: Sequence[Sequence[Any]],
                             alphabet: PetitAlgebra,
                             length: int,
                             budget: int = 1000000) -> OuterCode:
    """Outer code whose first coordinates ``(x_(1,0), ..., x_(L,0))`` range over a base code

    The remaining coordinates of every position range freely, so the realised Hamming
    distance is measured rather than inherited from the base code

    Example::

        >>> B = base_code(Q, "repetition", 2)
        >>> len(prescribed_distance_code(B, A, 2))
        64

    :param base: Additive code of length ``L`` over the coefficient ring
    :type base: sequence of tuples
    :param alphabet: Quotient algebra over a finite field
    :type alphabet: PetitAlgebra
    :param length: Code length ``L``
    :type length: int
    :param budget: Largest number of codewords (default: ``1000000``)
    :type budget: int, optional

    :raises NotAField: If the coefficient ring of the quotient is not a field
    :raises BudgetExceeded: If the code would exceed the budget

    :return: Outer code
    :rtype: OuterCode
    """
    ring = alphabet.ring.base if isinstance(alphabet.ring, CyclicAlgebraRing) else alphabet.ring
    if not ring.is_field():
        raise NotAField("{} is not a field".format(ring.name))
    base = [tuple(b) for b in base]
    if any(len(b) != length for b in base):
        raise ValueError("Base code words must have length {}".format(length))
    builders = _free_parts(alphabet)
    _check_budget("prescribed distance code", len(base) * len(builders) ** length, budget)
    words = []
    for b in base:
        for choice in itertools.product(builders, repeat=length):
            words.append(tuple(build(a) for build, a in zip(choice, b)))
    return OuterCode(alphabet, length, words, name="prescribed")


def first_coordinates(code: OuterCode, word: Sequence[PetitElement]) -> Tuple[Any, ...]:
    return tuple(_first_coordinate(code.alphabet, x) for x in word)


def hamming_distance(code: OuterCode, threads: int = 1, progress: bool = False) -> int:
    """Minimum number of differing positions over distinct codewords

    Additive codes use the minimum weight of the nonzero words, other codes all pairs

    :raises EmptyCode: If the code has fewer than two words
    """
    if len(code) < 2:
        raise EmptyCode("{} has fewer than two codewords".format(code.name))
    words = code.words
    if code.is_additive():
        def search(start: int, stop: int) -> int:
            return min((weight(words[k]) for k in range(start, stop) if weight(words[k])), default=code.length + 1)
    else:
        def search(start: int, stop: int) -> int:
            best = code.length + 1
            for k in tqdm.tqdm(range(start, stop), disable=not progress, desc="distance"):
                for other in words[k + 1:]:
                    best = min(best, distance(words[k], other))
            return best
    return min(partitioned_search(search, len(words), threads))
