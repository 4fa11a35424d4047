"""Named small structures used throughout the test-suite and documentation."""

from __future__ import annotations

from .brace import InverseSemiBrace, validate_semibrace
from .core import (
    CarrierMap,
    FiniteSemigroup,
    InverseSemigroup,
    MagmaTable,
    derive_inverses,
    validate_semigroup,
)

XYZ = ("1", "x", "y")


def t3() -> InverseSemigroup:
    """Commutative inverse monoid on {1, x, y} with xx = yy = x and xy = y."""
    t = MagmaTable.from_rows([[0, 1, 2], [1, 1, 2], [2, 2, 1]], labels=XYZ)
    return derive_inverses(validate_semigroup(t))


def s3() -> InverseSemigroup:
    """Upper semilattice on {1, x, y} with join 1 (x, y incomparable)."""
    t = MagmaTable.from_rows([[0, 0, 0], [0, 1, 0], [0, 0, 2]], labels=XYZ)
    return derive_inverses(validate_semigroup(t))


def tau() -> CarrierMap:
    """The transposition of s3 swapping x and y."""
    return CarrierMap.from_images([0, 2, 1])


def cyclic_group(n: int) -> InverseSemigroup:
    t = MagmaTable.from_rows([[(a + b) % n for b in range(n)] for a in range(n)],
                             labels=[str(i) for i in range(n)])
    return derive_inverses(validate_semigroup(t))


def left_zero(n: int, labels=None) -> FiniteSemigroup:
    return validate_semigroup(
        MagmaTable.from_rows([[a] * n for a in range(n)], labels=labels))


def right_zero(n: int, labels=None) -> FiniteSemigroup:
    return validate_semigroup(
        MagmaTable.from_rows([list(range(n)) for _ in range(n)], labels=labels))


def brandt_b2() -> InverseSemigroup:
    """The five-element Brandt semigroup: matrix units e11, e12, e21, e22
    plus zero.  The smallest inverse semigroup that is not Clifford."""
    labels = ("0", "e11", "e12", "e21", "e22")
    pairs = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)}

    def op(a, b):
        if a == 0 or b == 0:
            return 0
        (i, j), (k, l) = pairs[a], pairs[b]
        if j != k:
            return 0
        return next(m for m, ij in pairs.items() if ij == (i, l))

    t = MagmaTable.from_rows([[op(a, b) for b in range(5)] for a in range(5)],
                             labels=labels)
    return derive_inverses(validate_semigroup(t))


def sym3() -> InverseSemigroup:
    """The symmetric group on three points, elements ordered id, (01), (02),
    (12), (012), (021) as maps i -> perm[i]."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    t = MagmaTable.from_rows(
        [[index[compose(perms[a], perms[b])] for b in range(6)] for a in range(6)],
        labels=["e", "(01)", "(02)", "(12)", "(012)", "(021)"])
    return derive_inverses(validate_semigroup(t))


def _sym3_parity(i: int) -> int:
    return 1 if i in (1, 2, 3) else 0


def sym3_twisted_semibrace() -> InverseSemiBrace:
    """Left semi-brace on Sym3 with u + v = v . g(v^-1) . u, where g sends
    odd permutations to the transposition (01) and even ones to the
    identity.  Its associated map is v -> (u v (01)^s(v) u^-1, u (01)^s(v))."""
    g6 = sym3()
    trans = 1  # index of (01)

    def g(u):
        return trans if _sym3_parity(u) else 0

    rows = []
    for u in range(6):
        row = []
        for v in range(6):
            row.append(g6.op(g6.op(v, g(g6.inv[v])), u))
        rows.append(row)
    add = MagmaTable.from_rows(rows, labels=g6.labels)
    mul = MagmaTable.from_rows([list(r) for r in g6.sgp.tab.table], labels=g6.labels)
    return validate_semibrace(add, mul)


def trivial_semibrace(m: InverseSemigroup, side: str = "right") -> InverseSemiBrace:
    """The trivial semi-brace over an inverse semigroup: addition is the
    right-zero (or left-zero) operation."""
    n = m.order
    if side == "right":
        rows = [list(range(n)) for _ in range(n)]
    elif side == "left":
        rows = [[a] * n for a in range(n)]
    else:
        raise ValueError(f"unknown side {side!r}")
    add = MagmaTable.from_rows(rows, labels=m.labels)
    mul = MagmaTable.from_rows([list(r) for r in m.sgp.tab.table], labels=m.labels)
    return validate_semibrace(add, mul)
