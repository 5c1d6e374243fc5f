"""Exact combinatorics of hard disks in an infinite strip.

Cells, GF(2) homology, critical cells, cup products of degree-one classes
and the topological complexity of the ordered configuration space of
``n`` unit disks in a strip of width ``w``.
"""

from .errors import (
    CertificationError,
    DomainError,
    NotApplicableError,
    SymbolParseError,
    UnsupportedProductError,
)
from .symbols import (
    StripParams,
    Symbol,
    dimension,
    enumerate_cells,
    faces,
    format_symbol,
    parse_symbol,
)
from .morse import (
    BlockKind,
    CriticalCell,
    Wheel,
    WheelOrder,
    classify,
    critical_cells,
    is_critical,
    wheel_decompose,
)
from .homology import SparseBitMatrix, betti, boundary_matrix, euler_characteristic
from .ring import CohClass, Generator, generator, multiply_classes, multiply_generators
from .tc import (
    LemmaFamilies,
    TCReport,
    TensorElement,
    lemma_families,
    tc_report,
    tensor_multiply,
    zdcl_certificate,
    zdcl_search,
    zero_divisor,
)

__version__ = "0.1.0"
