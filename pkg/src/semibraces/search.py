"""Pruned exhaustive search over operation tables.

All searches fill tables cell by cell in row-major order, trying values in
ascending order, and reject a partial table the moment a fully determined
constraint instance fails.  Results therefore stream out in lexicographic
table order and agree with the naive filter over all complete tables.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations

from .brace import InverseSemiBrace, lambda_rho, validate_semibrace
from .core import FiniteSemigroup, InverseSemigroup, MagmaTable, derive_inverses, \
    validate_semigroup
from .errors import AlgebraError, OrderExceedsCap, SearchTimeout
from .constructions import ActionFamily, Cocycle, validate_cocycle
from .solutions import SolutionReport, solution_report

ADDITION_SEARCH_CAP = 4
SEMIGROUP_SEARCH_CAP = 4
COCYCLE_SEARCH_CAP = 3


@dataclass(frozen=True)
class SearchConfig:
    max_order: int = ADDITION_SEARCH_CAP
    timeout: float | None = None
    emit: str = "all"  # all | solutions_only | counterexamples_only
    canonical_only: bool = False
    start_prefix: tuple[int, ...] = ()


@dataclass(frozen=True)
class SurveyRow:
    structure_id: str
    is_solution: bool
    is_idempotent: bool
    is_cubic: bool
    is_involutive: bool
    degeneracy_class: str
    index: int
    period: int
    flags: dict[str, bool] = field(default_factory=dict)


class _Deadline:
    def __init__(self, timeout):
        self.limit = None if timeout is None else time.monotonic() + timeout

    def expired(self) -> bool:
        return self.limit is not None and time.monotonic() > self.limit


def _assoc_cell_ok(table, n, i, j) -> bool:
    """Associativity instances that involve cell (i, j) and are now fully
    determined.  The cell can appear as a first-level product (x, y) or
    (y, z), or as a second-level one ((xy), z) or (x, (yz))."""

    def triple_ok(x, y, z):
        xy = table[x][y]
        if xy < 0:
            return True
        yz = table[y][z]
        if yz < 0:
            return True
        left = table[xy][z]
        right = table[x][yz]
        return left < 0 or right < 0 or left == right

    for z in range(n):
        if not triple_ok(i, j, z):
            return False
        if not triple_ok(z, i, j):
            return False
    for x in range(n):
        row = table[x]
        for y in range(n):
            if row[y] == i and not triple_ok(x, y, j):
                return False
    for y in range(n):
        for z in range(n):
            if table[y][z] == j and not triple_ok(i, y, z):
                return False
    return True


def _emit_filter(emit: str, report: SolutionReport) -> bool:
    if emit == "all":
        return True
    if emit == "solutions_only":
        return report.is_braid_solution
    if emit == "counterexamples_only":
        return not report.is_braid_solution
    raise ValueError(f"unknown emit mode {emit!r}")


def _prefix_floor(prefix, depth, current_prefix_match):
    # while still on the resume prefix, values below the recorded one are skipped
    if current_prefix_match and depth < len(prefix):
        return prefix[depth]
    return 0


def enumerate_additions(m: InverseSemigroup, cfg: SearchConfig = SearchConfig()):
    """Stream every addition table that makes (carrier, +, m) a left inverse
    semi-brace, each paired with the solution report of its associated map.

    DFS over the n x n addition with incremental associativity pruning and
    incremental pruning of the left axiom a(b+c) = ab + a(a^-1+c).
    Raises SearchTimeout mid-stream when the budget runs out.
    """
    n = m.order
    if n > max(cfg.max_order, ADDITION_SEARCH_CAP):
        raise OrderExceedsCap(f"order {n} exceeds addition search cap")
    if n > cfg.max_order:
        raise OrderExceedsCap(f"order {n} exceeds configured max_order {cfg.max_order}")
    deadline = _Deadline(cfg.timeout)
    add = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    mul = m.op
    inv = m.inv
    emitted = 0

    def axiom_cell_ok(i, j) -> bool:
        # instances of a(b+c) = ab + a(a^-1+c) whose three addition lookups
        # (b, c), (a^-1, c), (ab, a(a^-1+c)) are all determined and involve (i, j)
        def instance_ok(a, b, c):
            s1 = add[b][c]
            if s1 < 0:
                return True
            s2 = add[inv[a]][c]
            if s2 < 0:
                return True
            t = add[mul(a, b)][mul(a, s2)]
            return t < 0 or mul(a, s1) == t

        for a in range(n):
            if not instance_ok(a, i, j):
                return False
        a = inv[i]  # inv is an involution: inv[a] == i iff a == inv[i]
        for b in range(n):
            if not instance_ok(a, b, j):
                return False
        for a in range(n):
            for b in range(n):
                if mul(a, b) != i:
                    continue
                for c in range(n):
                    s2 = add[inv[a]][c]
                    if s2 >= 0 and mul(a, s2) == j and not instance_ok(a, b, c):
                        return False
        return True

    def fill(depth: int, on_prefix: bool):
        nonlocal emitted
        if deadline.expired():
            raise SearchTimeout(
                f"addition search over order {n} timed out", emitted=emitted)
        if depth == len(cells):
            table = MagmaTable.from_rows([list(r) for r in add], labels=m.labels)
            mul_t = MagmaTable.from_rows([list(r) for r in m.sgp.tab.table],
                                         labels=m.labels)
            brace = validate_semibrace(table, mul_t)
            report = solution_report(lambda_rho(brace))
            if _emit_filter(cfg.emit, report):
                yield brace, report
                emitted += 1
            return
        i, j = cells[depth]
        lo = _prefix_floor(cfg.start_prefix, depth, on_prefix)
        for v in range(lo, n):
            add[i][j] = v
            if _assoc_cell_ok(add, n, i, j) and axiom_cell_ok(i, j):
                yield from fill(depth + 1,
                                on_prefix and depth < len(cfg.start_prefix)
                                and v == cfg.start_prefix[depth])
            add[i][j] = -1

    yield from fill(0, bool(cfg.start_prefix))


def canonical_form(table) -> tuple:
    """Lexicographically minimal relabeling of an operation table."""
    n = len(table)
    best = None
    for perm in permutations(range(n)):
        inv_perm = [0] * n
        for x, y in enumerate(perm):
            inv_perm[y] = x
        flat = tuple(perm[table[inv_perm[i]][inv_perm[j]]]
                     for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    return best


def enumerate_inverse_semigroups(n: int, cfg: SearchConfig | None = None
                                 ) -> list[InverseSemigroup]:
    """All inverse semigroups of order n up to isomorphism, as canonical
    representatives (lexicographically minimal table per class), in
    lexicographic order.

    DFS over Cayley tables with incremental associativity pruning, filtered
    through inverse-structure derivation.
    """
    if n > SEMIGROUP_SEARCH_CAP:
        raise OrderExceedsCap(f"order {n} exceeds semigroup search cap "
                              f"{SEMIGROUP_SEARCH_CAP}")
    cfg = cfg or SearchConfig(max_order=n)
    deadline = _Deadline(cfg.timeout)
    table = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    seen: set[tuple] = set()
    out: list[InverseSemigroup] = []

    def fill(depth: int):
        if deadline.expired():
            raise SearchTimeout(f"semigroup search at order {n} timed out",
                                emitted=len(out))
        if depth == len(cells):
            rows = [list(r) for r in table]
            sgp = validate_semigroup(MagmaTable.from_rows(rows))
            try:
                inv = derive_inverses(sgp)
            except AlgebraError:
                return
            canon = canonical_form(rows)
            if canon in seen:
                return
            seen.add(canon)
            canon_rows = [list(canon[i * n:(i + 1) * n]) for i in range(n)]
            out.append(derive_inverses(
                validate_semigroup(MagmaTable.from_rows(canon_rows))))
            return
        i, j = cells[depth]
        for v in range(n):
            table[i][j] = v
            if _assoc_cell_ok(table, n, i, j):
                fill(depth + 1)
            table[i][j] = -1

    fill(0)
    out.sort(key=lambda s: s.sgp.tab.table)
    return out


def search_cocycles(s: InverseSemiBrace, t: InverseSemiBrace,
                    delta: ActionFamily,
                    cfg: SearchConfig = SearchConfig(max_order=COCYCLE_SEARCH_CAP)
                    ) -> list[Cocycle]:
    """All tables b: S x S -> T satisfying the cocycle law for delta, by DFS
    with incremental pruning of the law's fully determined instances.  Every
    result is re-verified through validate_cocycle before being returned."""
    n, m = s.order, t.order
    if n > COCYCLE_SEARCH_CAP or m > COCYCLE_SEARCH_CAP:
        raise OrderExceedsCap(
            f"cocycle search caps at |S|, |T| <= {COCYCLE_SEARCH_CAP}")
    deadline = _Deadline(cfg.timeout)
    tab = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    out: list[Cocycle] = []

    def instance_ok(a, b, c) -> bool:
        # cocycle law with every b-lookup determined; delta terms are fixed
        ab = s.plus(a, b)
        bc = s.plus(b, c)
        b1, b2, b3, b4 = tab[ab][c], tab[a][b], tab[a][bc], tab[b][c]
        if min(b1, b2, b3, b4) < 0:
            return True
        for u in t.elements():
            lu = t.plus(t.plus(b1, delta(c, b2)), delta(c, delta(b, u)))
            ru = t.plus(t.plus(b3, delta(bc, u)), b4)
            for v in t.elements():
                vc = delta(c, v)
                if t.plus(lu, vc) != t.plus(ru, vc):
                    return False
        return True

    def cell_ok(i, j) -> bool:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    used = {(s.plus(a, b), c), (a, b), (a, s.plus(b, c)), (b, c)}
                    if (i, j) in used and not instance_ok(a, b, c):
                        return False
        return True

    def fill(depth: int):
        if deadline.expired():
            raise SearchTimeout("cocycle search timed out", emitted=len(out))
        if depth == len(cells):
            candidate = Cocycle.from_rows([list(r) for r in tab], m)
            if not validate_cocycle(s, t, delta, candidate).holds:
                raise AlgebraError("pruned cocycle search emitted a non-cocycle")
            out.append(candidate)
            return
        i, j = cells[depth]
        for v in range(m):
            tab[i][j] = v
            if cell_ok(i, j):
                fill(depth + 1)
            tab[i][j] = -1

    fill(0)
    return out


def _degeneracy_class(report: SolutionReport) -> str:
    if report.left_nondegenerate and report.right_nondegenerate:
        return "nondegenerate"
    if report.left_nondegenerate:
        return "left_nondegenerate"
    if report.right_nondegenerate:
        return "right_nondegenerate"
    return "degenerate"


def structure_id(brace: InverseSemiBrace) -> str:
    add = "".join(str(v) for row in brace.add.tab.table for v in row)
    mul = "".join(str(v) for row in brace.mul.sgp.tab.table for v in row)
    return f"add={add};mul={mul}"


def survey(results) -> tuple[list[SurveyRow], dict]:
    """Per-structure rows plus aggregate counts keyed by
    (solution?, idempotent?, cubic?, degeneracy class)."""
    rows: list[SurveyRow] = []
    counts: dict[tuple, int] = {}
    for brace, report in results:
        row = SurveyRow(
            structure_id=structure_id(brace) if isinstance(brace, InverseSemiBrace)
            else str(brace),
            is_solution=report.is_braid_solution,
            is_idempotent=report.is_idempotent,
            is_cubic=report.is_cubic,
            is_involutive=report.is_involutive,
            degeneracy_class=_degeneracy_class(report),
            index=report.index,
            period=report.period,
        )
        rows.append(row)
        key = (row.is_solution, row.is_idempotent, row.is_cubic,
               row.degeneracy_class)
        counts[key] = counts.get(key, 0) + 1
    aggregate = {
        "total": len(rows),
        "solutions": sum(1 for r in rows if r.is_solution),
        "by_class": [
            {"solution": k[0], "idempotent": k[1], "cubic": k[2],
             "degeneracy": k[3], "count": v}
            for k, v in sorted(counts.items(),
                               key=lambda kv: (not kv[0][0], not kv[0][1],
                                               not kv[0][2], kv[0][3]))
        ],
    }
    return rows, aggregate
