"""Wheels, followers and the critical-cell criterion.

Only the classification of cells is implemented; the gradient vector field
itself is never built.  The count of critical ``j``-cells is checked
against the GF(2) Betti numbers from :mod:`diskstrip.homology`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .symbols import StripParams, Symbol, enumerate_cells, format_symbol


@dataclass(frozen=True, slots=True)
class Wheel:
    """An axle followed by the smaller entries up to the next running maximum."""

    entries: tuple[int, ...]

    @property
    def axle(self) -> int:
        return self.entries[0]

    @property
    def size(self) -> int:
        return len(self.entries)


class WheelOrder(enum.Enum):
    SIZE_THEN_AXLE = "size-axle"
    AXLE_ONLY = "axle"

    def key(self, wheel: Wheel) -> tuple[int, ...]:
        if self is WheelOrder.SIZE_THEN_AXLE:
            return (wheel.size, wheel.axle)
        return (wheel.axle,)


# pinned by the Betti cross-check; AXLE_ONLY miscounts from (4, 2) on
DEFAULT_ORDER = WheelOrder.SIZE_THEN_AXLE


class BlockKind(enum.Enum):
    UNICYCLE = "non-follower unicycle"
    FOLLOWER = "follower"
    NOT_UNICYCLE = "not a unicycle and not a follower"
    SMALL_FOLLOWER = "follower too small"


@dataclass(frozen=True)
class BlockStatus:
    kind: BlockKind
    reason: str

    @property
    def ok(self) -> bool:
        return self.kind in (BlockKind.UNICYCLE, BlockKind.FOLLOWER)


@dataclass(frozen=True)
class CriticalCell:
    symbol: Symbol
    follower_flags: tuple[BlockKind, ...]

    @property
    def follower_free(self) -> bool:
        return BlockKind.FOLLOWER not in self.follower_flags

    @property
    def dimension(self) -> int:
        return self.symbol.dimension

    def __str__(self) -> str:
        return format_symbol(self.symbol)


def wheel_decompose(block: Sequence[int]) -> list[Wheel]:
    """Split a block at its left-to-right running maxima.

    >>> [w.entries for w in wheel_decompose([2, 1, 3])]
    [(2, 1), (3,)]
    """
    wheels: list[list[int]] = []
    top = 0
    for x in block:
        if x > top:
            wheels.append([x])
            top = x
        else:
            wheels[-1].append(x)
    return [Wheel(tuple(ws)) for ws in wheels]


def classify(
    s: Symbol,
    w: int,
    order: WheelOrder = DEFAULT_ORDER,
    follower_min: Optional[int] = None,
) -> list[BlockStatus]:
    """Classify each block of ``s``, scanning left to right.

    Block ``i+1`` is a follower when block ``i`` is a unicycle that is not
    itself a follower and whose wheel is order-smaller than every wheel of
    block ``i+1``.  A follower is acceptable when it and its leader hold at
    least ``follower_min`` (default ``w + 1``) labels together.
    """
    if follower_min is None:
        follower_min = w + 1
    out: list[BlockStatus] = []
    prev: Optional[tuple[int, Wheel, int]] = None  # (block number, wheel, size) of a possible leader
    for idx, block in enumerate(s.blocks, start=1):
        wheels = wheel_decompose(block)
        is_follower = prev is not None and all(
            order.key(prev[1]) < order.key(wh) for wh in wheels
        )
        if is_follower:
            lead, _, lead_size = prev
            total = lead_size + len(block)
            if total >= follower_min:
                status = BlockStatus(
                    BlockKind.FOLLOWER,
                    f"block {idx} is a follower of block {lead}, combined size {total} >= {follower_min}",
                )
            else:
                status = BlockStatus(
                    BlockKind.SMALL_FOLLOWER,
                    f"block {idx} is a follower of block {lead}, combined size {total} < {follower_min}",
                )
            prev = None
        elif len(wheels) == 1:
            status = BlockStatus(BlockKind.UNICYCLE, f"block {idx} is a non-follower unicycle")
            prev = (idx, wheels[0], len(block))
        else:
            status = BlockStatus(
                BlockKind.NOT_UNICYCLE,
                f"block {idx} has {len(wheels)} wheels and is not a follower",
            )
            prev = None
        out.append(status)
    return out


def is_critical(
    s: Symbol,
    w: int,
    order: WheelOrder = DEFAULT_ORDER,
    follower_min: Optional[int] = None,
) -> tuple[bool, list[BlockStatus]]:
    statuses = classify(s, w, order, follower_min)
    return all(st.ok for st in statuses), statuses


def as_critical(
    s: Symbol, w: int, order: WheelOrder = DEFAULT_ORDER, follower_min: Optional[int] = None
) -> Optional[CriticalCell]:
    ok, statuses = is_critical(s, w, order, follower_min)
    if not ok:
        return None
    return CriticalCell(s, tuple(st.kind for st in statuses))


def critical_cells(
    p: StripParams,
    dim: Optional[int] = None,
    order: WheelOrder = DEFAULT_ORDER,
    follower_min: Optional[int] = None,
) -> list[CriticalCell]:
    out = []
    for s in enumerate_cells(p, dim):
        c = as_critical(s, p.w, order, follower_min)
        if c is not None:
            out.append(c)
    return out


def critical_counts(
    p: StripParams, order: WheelOrder = DEFAULT_ORDER, follower_min: Optional[int] = None
) -> list[int]:
    """Number of critical cells in each dimension ``0..dim``."""
    top = p.n - p.m
    return [len(critical_cells(p, d, order, follower_min)) for d in range(top + 1)]
