import itertools

import pytest

from diskstrip import format_symbol, parse_symbol


def texts(symbols):
    return {format_symbol(s) for s in symbols}


def brute_cells(n, w):
    """All symbols by placing bars between the letters of every permutation."""
    out = set()
    for perm in itertools.permutations(range(1, n + 1)):
        for bars in itertools.product([False, True], repeat=n - 1):
            blocks, cur = [], [perm[0]]
            for x, bar in zip(perm[1:], bars):
                if bar:
                    blocks.append(cur)
                    cur = []
                cur.append(x)
            blocks.append(cur)
            if all(len(b) <= w for b in blocks):
                out.add("|".join(" ".join(map(str, b)) for b in blocks))
    return out


def composition_count(n, w, parts):
    # number of compositions of n into `parts` parts of size <= w, by DP
    table = {(0, 0): 1}
    for k in range(1, parts + 1):
        for total in range(n + 1):
            table[(k, total)] = sum(table.get((k - 1, total - s), 0) for s in range(1, w + 1))
    return table.get((parts, n), 0)


SMALL = [(n, w) for n in range(1, 6) for w in range(2, 6)]
SUITE = [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 2), (6, 3), (6, 4), (6, 5), (7, 2)]


@pytest.fixture
def sym():
    return parse_symbol
