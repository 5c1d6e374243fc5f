"""Zero-divisors, the explicit a/b generator families and the TC report.

Elements of ``H*(X) (x) H*(X)`` are stored as GF(2) sets of basis pairs
together with their factorization into pairs of generator monomials.
Over GF(2) the zero-divisor ``1 (x) a - a (x) 1`` becomes ``a (x) 1 + 1 (x) a``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import CertificationError, NotApplicableError, UnsupportedProductError
from .morse import DEFAULT_ORDER, WheelOrder
from .ring import (
    CohClass,
    Generator,
    Monomial,
    _evaluate,
    _monomial,
    _xor,
    all_generators,
    generator,
    term_key,
    top_vertex,
)
from .symbols import StripParams, Symbol, _unchecked, dimension, enumerate_cells, format_symbol

FactorPair = tuple[Monomial, Monomial]


@dataclass(frozen=True)
class TensorElement:
    """GF(2) sum of ``left (x) right`` basis pairs of one total degree."""

    degree: int
    terms: frozenset[tuple[Symbol, Symbol]]
    factors: Optional[frozenset[FactorPair]] = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(a.dimension, b.dimension) for a, b in self.terms}

    def component(self, left: int, right: int) -> "TensorElement":
        if left + right != self.degree:
            return TensorElement(left + right, frozenset(), frozenset())
        terms = frozenset(t for t in self.terms if t[0].dimension == left)
        factors = None
        if self.factors is not None:
            factors = frozenset(f for f in self.factors if len(f[0]) == left)
        return TensorElement(self.degree, terms, factors)

    def sorted_terms(self) -> list[tuple[Symbol, Symbol]]:
        return sorted(self.terms, key=lambda t: (term_key(t[0]), term_key(t[1])))

    def text_pairs(self) -> list[list[str]]:
        return [[format_symbol(a), format_symbol(b)] for a, b in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"nu({a}) x nu({b})" for a, b in self.text_pairs())


def tensor_unit(p: StripParams) -> TensorElement:
    u = top_vertex(p)
    return TensorElement(0, frozenset([(u, u)]), frozenset([((), ())]))


def zero_divisor(x: CohClass) -> TensorElement:
    """``x (x) 1 + 1 (x) x``; the unit maps to zero."""
    if not x.terms:
        return TensorElement(x.degree, frozenset(), frozenset())
    n = next(iter(x.terms)).n
    u = _unchecked(tuple((k,) for k in range(n, 0, -1)))
    terms: dict = {}
    for t in x.terms:
        _xor(terms, (t, u))
        _xor(terms, (u, t))
    factors = None
    if x.monomials is not None:
        acc: dict = {}
        for mono in x.monomials:
            _xor(acc, (mono, ()))
            _xor(acc, ((), mono))
        factors = frozenset(acc)
    return TensorElement(x.degree, frozenset(terms), factors)


def tensor_multiply(
    a: TensorElement,
    b: TensorElement,
    p: StripParams,
    order: WheelOrder = DEFAULT_ORDER,
    bidegree: Optional[tuple[int, int]] = None,
) -> TensorElement:
    """Componentwise cup product ``(x (x) y)(z (x) t) = xz (x) yt``; no signs mod 2."""
    if a.factors is None or b.factors is None:
        raise UnsupportedProductError("tensor product needs tracked factorizations")
    factors: dict[FactorPair, None] = {}
    for la, ra in a.factors:
        for lb, rb in b.factors:
            left = _monomial(la + lb)
            right = _monomial(ra + rb)
            if bidegree is not None and len(left) != bidegree[0]:
                continue
            _xor(factors, (left, right))
    terms: dict[tuple[Symbol, Symbol], None] = {}
    kept = []
    for left, right in factors:
        lv = _evaluate(left, p, order)
        if not lv:
            continue
        rv = _evaluate(right, p, order)
        if not rv:
            continue
        kept.append((left, right))
        for s in lv:
            for t in rv:
                _xor(terms, (s, t))
    return TensorElement(a.degree + b.degree, frozenset(terms), frozenset(kept))


def diagonal(u: TensorElement, p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> CohClass:
    """Restriction to the diagonal, ``x (x) y -> x y``."""
    if u.factors is None:
        raise UnsupportedProductError("diagonal restriction needs a tracked factorization")
    terms: dict[Symbol, None] = {}
    monos: dict[Monomial, None] = {}
    for left, right in u.factors:
        mono = _monomial(left + right)
        value = _evaluate(mono, p, order)
        if value:
            _xor(monos, mono)
            for s in value:
                _xor(terms, s)
    return CohClass(u.degree, frozenset(terms), frozenset(monos))


@dataclass(frozen=True)
class LemmaFamilies:
    a: tuple[Generator, ...]
    b: tuple[Generator, ...]
    m: int
    r: int

    @property
    def a_pairs(self) -> list[tuple[int, int]]:
        return [g.pair for g in self.a]

    @property
    def b_pairs(self) -> list[tuple[int, int]]:
        return [g.pair for g in self.b]


def family_pairs(n: int, w: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Index pairs of the two families of ``n - m`` generators.

    Rows ``i = 0..m-2`` take first entry ``n - i`` with ``w - 1`` consecutive
    seconds each; the last row takes first entry ``n - m + 1`` with the
    remaining ``r - 1`` seconds, ``r = n - w(m-1)``.  The second family has
    the same seconds and first entries rotated by one place within the top
    ``m`` labels.
    """
    m = -(-n // w)
    r = n - w * (m - 1)
    a: list[tuple[int, int]] = []
    b: list[tuple[int, int]] = []
    for i in range(m - 1):
        b_first = n - m + 1 if i == 0 else n - i + 1
        for j in range(w - 1):
            second = n - m - (w - 1) * i - j
            a.append((n - i, second))
            b.append((b_first, second))
    last_b = n - m + 2 if m > 1 else n
    for j in range(r - 1):
        second = n - m - (w - 1) * (m - 1) - j
        a.append((n - m + 1, second))
        b.append((last_b, second))
    return a, b


def lemma_families(p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> LemmaFamilies:
    if p.n <= p.w:
        raise NotApplicableError(
            f"families need n > w (got n={p.n}, w={p.w}); see tc_report for the other branches"
        )
    a, b = family_pairs(p.n, p.w)
    m = p.m
    return LemmaFamilies(
        tuple(generator(i, j, p, order) for i, j in a),
        tuple(generator(i, j, p, order) for i, j in b),
        m,
        p.n - p.w * (m - 1),
    )


def generator_zero_divisor(g: Generator, p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> TensorElement:
    mono = (g.pair,)
    terms = _evaluate(mono, p, order)
    return zero_divisor(CohClass(1, terms, frozenset([mono])))


def product_of_zero_divisors(
    gens: list[Generator], p: StripParams, order: WheelOrder = DEFAULT_ORDER
) -> TensorElement:
    acc = tensor_unit(p)
    for g in gens:
        acc = tensor_multiply(acc, generator_zero_divisor(g, p, order), p, order)
        if acc.is_zero():
            break
    return acc


class Certificate(NamedTuple):
    length: int
    witness: TensorElement


def zdcl_certificate(p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> Certificate:
    """Nonzero product of the ``2(n - m)`` family zero-divisors.

    Raises :class:`CertificationError` if the product vanishes or if a
    longer product of zero-divisors survives.
    """
    fam = lemma_families(p, order)
    top = dimension(p)
    gens = list(fam.a) + list(fam.b)
    full = product_of_zero_divisors(gens, p, order)
    witness = full.component(top, top)
    if witness.is_zero():
        raise CertificationError(
            f"zero-divisor product vanishes at n={p.n}, w={p.w} (wheel order {order.value})"
        )
    if full.bidegrees() != {(top, top)}:
        raise CertificationError(f"product has terms outside bidegree ({top}, {top})")
    # no cells above the top dimension, so every longer product is zero
    if enumerate_cells(p, top + 1):
        raise CertificationError("cells found above the top dimension")
    for g in all_generators(p, order):
        try:
            longer = tensor_multiply(full, generator_zero_divisor(g, p, order), p, order)
        except UnsupportedProductError:
            continue
        if not longer.is_zero():
            raise CertificationError(f"product survives one more zero-divisor {g}")
    return Certificate(2 * top, witness)


class SearchResult(NamedTuple):
    length: int
    incomplete: bool
    factors: tuple[tuple[int, int], ...]


def zdcl_search(p: StripParams, order: WheelOrder = DEFAULT_ORDER, budget: int = 200_000) -> SearchResult:
    """Depth-first search for a long nonzero product of generator zero-divisors.

    Branches die on a zero partial product or on an unsupported product.
    The search stops at the grading cap ``2 * dim``; ``budget`` bounds the
    number of products evaluated.
    """
    if p.n <= p.w:
        raise NotApplicableError(f"search needs n > w (got n={p.n}, w={p.w})")
    cap = 2 * dimension(p)
    gens = all_generators(p, order)
    zds = [generator_zero_divisor(g, p, order) for g in gens]
    best: list[int] = []
    spent = 0
    exhausted = False

    def dfs(start: int, acc: TensorElement, chosen: list[int]) -> bool:
        nonlocal best, spent, exhausted
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= cap:
            return True
        for k in range(start, len(gens)):
            if spent >= budget:
                exhausted = True
                return True
            spent += 1
            try:
                nxt = tensor_multiply(acc, zds[k], p, order)
            except UnsupportedProductError:
                continue
            if nxt.is_zero():
                continue
            chosen.append(k)
            done = dfs(k + 1, nxt, chosen)
            chosen.pop()
            if done:
                return True
        return False

    dfs(0, tensor_unit(p), [])
    return SearchResult(len(best), exhausted and len(best) < cap, tuple(gens[k].pair for k in best))


class Branch(enum.Enum):
    CONTRACTIBLE = "Contractible"
    PLANAR_CONFIG = "PlanarConfig"
    STRIP_THEOREM = "StripTheorem"


@dataclass(frozen=True)
class TCReport:
    n: int
    w: int
    m: int
    dim: int
    lower: int
    upper: int
    value: Optional[int]
    branch: Branch
    certified: bool
    zdcl: Optional[int] = None
    witness: tuple[tuple[str, str], ...] = ()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "w": self.w,
            "m": self.m,
            "dim": self.dim,
            "zdcl": self.zdcl,
            "tc_lower": self.lower,
            "tc_upper": self.upper,
            "tc": self.value,
            "branch": self.branch.value,
            "certified": self.certified,
            "witness": [list(pair) for pair in self.witness],
        }


def tc_report(p: StripParams, order: WheelOrder = DEFAULT_ORDER) -> TCReport:
    n, w, m = p.n, p.w, p.m
    dim = dimension(p)
    if n == 1:
        return TCReport(n, w, m, dim, 1, 1, 1, Branch.CONTRACTIBLE, True, 0)
    if n <= w:
        # cited value for points in the plane; not certified here
        v = 2 * n - 2
        return TCReport(n, w, m, dim, v, v, v, Branch.PLANAR_CONFIG, False)
    cert = zdcl_certificate(p, order)
    lower = cert.length + 1
    upper = 2 * dim + 1
    value = lower if lower == upper else None
    return TCReport(
        n, w, m, dim, lower, upper, value, Branch.STRIP_THEOREM, value is not None,
        cert.length, tuple(tuple(t) for t in cert.witness.text_pairs()),
    )
