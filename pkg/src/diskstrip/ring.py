"""Cup products of degree-one classes on the critical-cell basis.

Classes are GF(2) sums of follower-free critical cells.  Products are
supported only for classes built from degree-one generators ``nu(i j|...)``;
each class remembers its factorization as a GF(2) sum of monomials (sorted
tuples of ``(first, second)`` pairs) so that products can be recomputed
from the generator rules:

* a label that is the second entry of two factors kills the product;
* ``w`` or more factors sharing a first entry kill the product;
* factors sharing a first entry ``i`` with seconds ``j_1..j_k`` give the sum
  of the ``k!`` blocks ``i j_s(1) .. j_s(k)``;
* blocks with disjoint labels merge into a single basis cell, placed in
  the unique follower-free critical arrangement.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import CertificationError, DomainError, UnsupportedProductError
from .morse import DEFAULT_ORDER, CriticalCell, WheelOrder, as_critical, wheel_decompose
from .symbols import StripParams, Symbol, _unchecked, dimension, format_symbol

Pair = tuple[int, int]
Monomial = tuple[Pair, ...]


@dataclass(frozen=True)
class Generator:
    first: int
    second: int
    cell: CriticalCell
    params: StripParams

    @property
    def pair(self) -> Pair:
        return (self.first, self.second)

    def __str__(self) -> str:
        return f"nu({self.cell})"


def _xor(acc: dict, key) -> None:
    if key in acc:
        del acc[key]
    else:
        acc[key] = None


def term_key(s: Symbol) -> tuple:
    # display order: descending by label sequence
    return tuple(tuple(-x for x in b) for b in s.blocks)


@dataclass(frozen=True)
class CohClass:
    """A homogeneous GF(2) class: a set of basis cells of one degree.

    ``monomials`` is the tracked factorization (``None`` when unknown);
    classes without it cannot be multiplied.
    """

    degree: int
    terms: frozenset[Symbol]
    monomials: Optional[frozenset[Monomial]] = field(default=None, compare=False)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "CohClass") -> "CohClass":
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise DomainError(f"cannot add classes of degree {self.degree} and {other.degree}")
        degree = other.degree if self.is_zero() else self.degree
        monos = None
        if self.monomials is not None and other.monomials is not None:
            monos = self.monomials ^ other.monomials
        return CohClass(degree, self.terms ^ other.terms, monos)

    def sorted_terms(self) -> list[Symbol]:
        return sorted(self.terms, key=term_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_symbol(s) for s in self.sorted_terms())


def top_vertex(p: StripParams) -> Symbol:
    """The critical 0-cell ``n|n-1|...|1``."""
    return _unchecked(tuple((x,) for x in range(p.n, 0, -1)))


def unit_class(p: StripParams) -> CohClass:
    return CohClass(0, frozenset([top_vertex(p)]), frozenset([()]))


def zero_class(degree: int = 0) -> CohClass:
    return CohClass(degree, frozenset(), frozenset())


def generator(i: int, j: int, p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> Generator:
    """The follower-free critical 1-cell with doubleton block ``i j``.

    The doubleton is tried at every position among the remaining labels
    written as descending singletons; exactly one position must give a
    follower-free critical cell.
    """
    if not (1 <= j < i <= p.n):
        raise DomainError(f"generator needs n >= i > j >= 1, got ({i}, {j}) with n={p.n}")
    return _generator(i, j, p, order)


@lru_cache(maxsize=4096)
def _generator(i: int, j: int, p: StripParams, order: WheelOrder) -> Generator:
    rest = [(x,) for x in range(p.n, 0, -1) if x not in (i, j)]
    found = []
    for pos in range(len(rest) + 1):
        s = _unchecked(tuple(rest[:pos]) + ((i, j),) + tuple(rest[pos:]))
        c = as_critical(s, p.w, order)
        if c is not None and c.follower_free:
            found.append(c)
    if len(found) != 1:
        raise CertificationError(
            f"generator ({i}, {j}) at n={p.n}, w={p.w}: {len(found)} follower-free critical "
            f"placements under wheel order {order.value} (expected exactly 1)"
        )
    return Generator(i, j, found[0], p)


def canonical_cell(blocks: Iterable[tuple[int, ...]], p: StripParams, order: WheelOrder) -> Symbol:
    """Arrange unicycle blocks (plus missing singletons) as a follower-free critical cell.

    Blocks go in decreasing wheel order, which is the only arrangement in
    which no block follows its predecessor.
    """
    blocks = list(blocks)
    used = {x for b in blocks for x in b}
    blocks += [(x,) for x in range(1, p.n + 1) if x not in used]
    keyed = []
    for b in blocks:
        wheels = wheel_decompose(b)
        if len(wheels) != 1:
            raise UnsupportedProductError(f"block {b} is not a unicycle")
        keyed.append((order.key(wheels[0]), b))
    keyed.sort(reverse=True)
    s = _unchecked(tuple(b for _, b in keyed))
    c = as_critical(s, p.w, order)
    if c is None or not c.follower_free:
        raise CertificationError(f"merged cell {format_symbol(s)} is not follower-free critical")
    return s


def _check_pairs(pairs: Sequence[Pair], p: StripParams) -> None:
    for i, j in pairs:
        if not (1 <= j < i <= p.n):
            raise DomainError(f"factor ({i}, {j}) is not a generator for n={p.n}")


@lru_cache(maxsize=1 << 16)
def _evaluate(mono: Monomial, p: StripParams, order: WheelOrder) -> frozenset[Symbol]:
    if not mono:
        return frozenset([top_vertex(p)])
    seconds = Counter(j for _, j in mono)
    if any(c > 1 for c in seconds.values()):
        return frozenset()
    groups: dict[int, list[int]] = defaultdict(list)
    for i, j in mono:
        groups[i].append(j)
    if any(len(js) >= p.w for js in groups.values()):
        return frozenset()
    clash = set(groups) & set(seconds)
    if clash:
        raise UnsupportedProductError(
            f"label {min(clash)} is both a first and a second entry; no product rule covers this"
        )
    if len(mono) > dimension(p):
        return frozenset()
    options = []
    for i in sorted(groups, reverse=True):
        options.append([(i,) + perm for perm in itertools.permutations(groups[i])])
    acc: dict[Symbol, None] = {}
    for choice in itertools.product(*options):
        _xor(acc, canonical_cell(choice, p, order))
    return frozenset(acc)


def _monomial(pairs: Iterable[Pair]) -> Monomial:
    return tuple(sorted(pairs, reverse=True))


def product_of_pairs(pairs: Sequence[Pair], p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> CohClass:
    _check_pairs(pairs, p)
    mono = _monomial(pairs)
    terms = _evaluate(mono, p, order)
    return CohClass(len(mono), terms, frozenset([mono]) if terms else frozenset())


def multiply_generators(
    gens: Sequence[Generator], p: StripParams, order: WheelOrder = DEFAULT_ORDER
) -> CohClass:
    """Cup product of degree-one generators; the empty product is the unit."""
    for g in gens:
        if g.params != p:
            raise DomainError(f"generator {g} belongs to n={g.params.n}, w={g.params.w}")
    return product_of_pairs([g.pair for g in gens], p, order)


def multiply_classes(
    x: CohClass, y: CohClass, p: StripParams, order: WheelOrder = DEFAULT_ORDER
) -> CohClass:
    """Bilinear product of two tracked classes."""
    if x.monomials is None or y.monomials is None:
        raise UnsupportedProductError("product needs classes with a tracked generator factorization")
    terms: dict[Symbol, None] = {}
    monos: dict[Monomial, None] = {}
    for a in x.monomials:
        for b in y.monomials:
            mono = _monomial(a + b)
            value = _evaluate(mono, p, order)
            if value:
                _xor(monos, mono)
                for s in value:
                    _xor(terms, s)
    return CohClass(x.degree + y.degree, frozenset(terms), frozenset(monos))


def evaluate_monomial(mono: Sequence[Pair], p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> frozenset[Symbol]:
    return _evaluate(_monomial(mono), p, order)


def all_generators(p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> list[Generator]:
    return [generator(i, j, p, order) for i in range(p.n, 0, -1) for j in range(i - 1, 0, -1)]


def parse_factors(text: str) -> list[Pair]:
    """Parse ``"4 2;4 1"`` into ``[(4, 2), (4, 1)]``."""
    pairs = []
    for chunk in text.split(";"):
        tokens = chunk.split()
        if not tokens:
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise DomainError(f"malformed factor {chunk.strip()!r}: expected 'i j'")
        i, j = int(tokens[0]), int(tokens[1])
        if i <= j:
            raise DomainError(f"factor {chunk.strip()!r} needs first > second")
        pairs.append((i, j))
    if not pairs:
        raise DomainError("empty factor list")
    return pairs
