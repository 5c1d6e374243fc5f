"""Cells of the strip complex and their face relation.

A cell is labelled by a *symbol*: an ordering of ``1..n`` cut by bars into
nonempty blocks.  The complex for width ``w`` keeps the symbols whose blocks
have at most ``w`` entries.  Text form: ``"3 1|2"``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import DomainError, SymbolParseError

Block = tuple[int, ...]

_LABEL = re.compile(r"[1-9][0-9]*\Z")


@dataclass(frozen=True, slots=True)
class Symbol:
    """An ordered partition of ``{1..n}`` into ordered blocks."""

    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise SymbolParseError("symbol has no blocks")
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise SymbolParseError("empty block")
            for x in b:
                if x < 1:
                    raise SymbolParseError(f"invalid label {x!r}")
                if x in seen:
                    raise SymbolParseError(f"duplicate label {x}")
                seen.add(x)
        n = len(seen)
        missing = sorted(set(range(1, n + 1)) - seen)
        if missing:
            raise SymbolParseError(f"missing label {missing[0]}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def dimension(self) -> int:
        return self.n - len(self.blocks)

    def fits(self, w: int) -> bool:
        return all(len(b) <= w for b in self.blocks)

    def __str__(self) -> str:
        return format_symbol(self)

    def __repr__(self) -> str:
        return f"Symbol({format_symbol(self)!r})"


@dataclass(frozen=True, slots=True)
class StripParams:
    """``n`` disks in a strip of width ``w``."""

    n: int
    w: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.w < 2:
            # width 1: the space is disconnected for n >= 2, no TC formula applies
            raise DomainError(f"w must be >= 2, got {self.w}")

    @property
    def m(self) -> int:
        """Minimum number of blocks, ``ceil(n / w)``."""
        return -(-self.n // self.w)


def _unchecked(blocks: tuple[Block, ...]) -> Symbol:
    # internal fast path: callers guarantee validity
    s = object.__new__(Symbol)
    object.__setattr__(s, "blocks", blocks)
    return s


def parse_symbol(text: str) -> Symbol:
    """Parse ``"14 10 9 8|13 7 6 5|12 4 3 2|11 1"``-style text."""
    blocks = []
    for part in text.split("|"):
        tokens = part.split()
        if not tokens:
            raise SymbolParseError(f"empty block in {text!r}")
        block = []
        for tok in tokens:
            if not _LABEL.match(tok):
                raise SymbolParseError(f"invalid label token {tok!r}")
            block.append(int(tok))
        blocks.append(tuple(block))
    return Symbol(tuple(blocks))


def format_symbol(s: Symbol) -> str:
    return "|".join(" ".join(map(str, b)) for b in s.blocks)


def compositions(n: int, max_part: int, parts: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into parts of size ``1..max_part``."""
    if n == 0:
        if parts in (None, 0):
            yield ()
        return
    if parts == 0:
        return
    for k in range(1, min(n, max_part) + 1):
        rest = None if parts is None else parts - 1
        for tail in compositions(n - k, max_part, rest):
            yield (k,) + tail


def dimension(p: StripParams) -> int:
    """Top cell dimension, ``n - ceil(n/w)``."""
    return p.n - p.m


@lru_cache(maxsize=None)
def _cells_by_dim(n: int, w: int) -> dict[int, tuple[Symbol, ...]]:
    out: dict[int, list[Symbol]] = {}
    comps = list(compositions(n, w))
    for perm in itertools.permutations(range(1, n + 1)):
        for comp in comps:
            blocks = []
            i = 0
            for size in comp:
                blocks.append(perm[i:i + size])
                i += size
            out.setdefault(n - len(comp), []).append(_unchecked(tuple(blocks)))
    return {d: tuple(sorted(cs, key=format_symbol)) for d, cs in sorted(out.items())}


def enumerate_cells(p: StripParams, dim: Optional[int] = None) -> list[Symbol]:
    """All cells of the complex, sorted by their text form.

    With ``dim`` given, only cells of that dimension; an out-of-range
    dimension gives an empty list.
    """
    table = _cells_by_dim(p.n, p.w)
    if dim is None:
        return sorted((s for cs in table.values() for s in cs), key=format_symbol)
    return list(table.get(dim, ()))


def _splits(block: Block) -> Iterator[tuple[Block, Block]]:
    k = len(block)
    for mask in range(1, (1 << k) - 1):
        left = tuple(block[t] for t in range(k) if mask >> t & 1)
        right = tuple(block[t] for t in range(k) if not mask >> t & 1)
        yield left, right


def face_counts(s: Symbol) -> dict[Symbol, int]:
    """Codimension-one faces of ``s`` with multiplicities."""
    out: dict[Symbol, int] = {}
    blocks = s.blocks
    for i, b in enumerate(blocks):
        for left, right in _splits(b):
            f = _unchecked(blocks[:i] + (left, right) + blocks[i + 1:])
            out[f] = out.get(f, 0) + 1
    return out


def faces(s: Symbol) -> list[tuple[Symbol, int]]:
    """Faces obtained by splitting one block into two order-inherited pieces.

    Each block ``B`` contributes ``2**len(B) - 2`` derivations; the
    multiplicity counts how many derivations give the same face.
    """
    return sorted(face_counts(s).items(), key=lambda kv: format_symbol(kv[0]))
