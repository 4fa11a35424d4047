"""Finite semigroups as Cayley tables.

Elements are 0-based indices into an order-n table; labels are display-only.
All quantifier scans run in nested left-to-right order, so any reported
counterexample is the lexicographically first failing tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .errors import (
    DimensionMismatch,
    InternalInvariantError,
    MalformedTable,
    NonUniqueInverse,
    NotAssociative,
    NotRegular,
    OrderExceedsCap,
)

ENDOMORPHISM_CAP = 6
AUTOMORPHISM_CAP = 8


@dataclass(frozen=True)
class MagmaTable:
    """An order-n binary operation table; entry table[a][b] is the index of a*b."""

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_rows(rows, labels=None) -> "MagmaTable":
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise MalformedTable("empty table")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MalformedTable(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise MalformedTable(f"entry ({i},{j}) = {v!r} out of range [0,{n})",
                                         witness=(i, j))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise MalformedTable(f"{len(labels)} labels for order {n}")
            if len(set(labels)) != n:
                raise MalformedTable("labels are not pairwise distinct")
        return MagmaTable(n, rows, labels)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A MagmaTable whose operation has been verified associative."""

    tab: MagmaTable

    @property
    def order(self) -> int:
        return self.tab.order

    @property
    def labels(self):
        return self.tab.labels

    def op(self, a: int, b: int) -> int:
        return self.tab.table[a][b]

    def label(self, i: int) -> str:
        return self.tab.label(i)

    def elements(self):
        return range(self.tab.order)


@dataclass(frozen=True)
class InverseSemigroup:
    """A FiniteSemigroup together with its (unique) inversion map a -> a^-1."""

    sgp: FiniteSemigroup
    inv: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.sgp.order

    @property
    def labels(self):
        return self.sgp.labels

    def op(self, a: int, b: int) -> int:
        return self.sgp.op(a, b)

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def label(self, i: int) -> str:
        return self.sgp.label(i)

    def elements(self):
        return range(self.order)


@dataclass(frozen=True)
class CarrierMap:
    """A total map between carriers, stored as an image array."""

    source_order: int
    target_order: int
    map: tuple[int, ...]

    @staticmethod
    def from_images(images, target_order=None) -> "CarrierMap":
        images = tuple(images)
        n = len(images)
        m = n if target_order is None else target_order
        for i, v in enumerate(images):
            if not isinstance(v, int) or not 0 <= v < m:
                raise MalformedTable(f"image of {i} is {v!r}, out of range [0,{m})")
        return CarrierMap(n, m, images)

    @staticmethod
    def identity(n: int) -> "CarrierMap":
        return CarrierMap(n, n, tuple(range(n)))

    def __call__(self, x: int) -> int:
        return self.map[x]

    def compose(self, other: "CarrierMap") -> "CarrierMap":
        """self after other."""
        if other.target_order != self.source_order:
            raise DimensionMismatch("cannot compose maps with mismatched carriers")
        return CarrierMap(other.source_order, self.target_order,
                          tuple(self.map[x] for x in other.map))

    def is_permutation(self) -> bool:
        return self.source_order == self.target_order and \
            sorted(self.map) == list(range(self.source_order))

    def inverse_map(self) -> "CarrierMap":
        if not self.is_permutation():
            raise MalformedTable("only permutations are invertible")
        out = [0] * self.source_order
        for x, y in enumerate(self.map):
            out[y] = x
        return CarrierMap(self.source_order, self.source_order, tuple(out))


@dataclass(frozen=True)
class Check:
    """Outcome of one universally quantified property check."""

    name: str
    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ClassificationRecord:
    """Named boolean predicates; every False flag carries its first witness."""

    flags: dict[str, bool]
    witnesses: dict[str, tuple] = field(default_factory=dict)
    middle_units: tuple[int, ...] = ()

    def __getitem__(self, name: str) -> bool:
        return self.flags[name]

    def witness(self, name: str):
        return self.witnesses.get(name)


def validate_semigroup(t: MagmaTable) -> FiniteSemigroup:
    """Verify associativity over all n^3 triples and wrap the table.

    Raises NotAssociative with the first failing (a, b, c).
    """
    n, tab = t.order, t.table
    for a in range(n):
        row_a = tab[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = tab[ab]
            row_b = tab[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise NotAssociative(
                        f"({t.label(a)}{t.label(b)}){t.label(c)} != "
                        f"{t.label(a)}({t.label(b)}{t.label(c)})",
                        witness=(a, b, c))
    return FiniteSemigroup(t)


def derive_inverses(s: FiniteSemigroup) -> InverseSemigroup:
    """Find, for each a, the unique x with axa = a and xax = x.

    Succeeds exactly when the semigroup is inverse (equivalently: regular
    with commuting idempotents).  Raises NotRegular if some element has no
    candidate and NonUniqueInverse if some element has two.
    """
    n = s.order
    inv = []
    for a in range(n):
        candidates = [x for x in range(n)
                      if s.op(s.op(a, x), a) == a and s.op(s.op(x, a), x) == x]
        if not candidates:
            raise NotRegular(f"{s.label(a)} has no inverse candidate", witness=(a,))
        if len(candidates) > 1:
            raise NonUniqueInverse(
                f"{s.label(a)} has inverse candidates "
                f"{s.label(candidates[0])} and {s.label(candidates[1])}",
                witness=(a, candidates[0], candidates[1]))
        inv.append(candidates[0])
    result = InverseSemigroup(s, tuple(inv))
    _assert_inverse_laws(result)
    return result


def _assert_inverse_laws(s: InverseSemigroup) -> None:
    # Consequences of inverse uniqueness; a violation means a bug, not bad input.
    n = s.order
    for a in range(n):
        if s.inv[s.inv[a]] != a:
            raise InternalInvariantError("(a^-1)^-1 != a", witness=(a,))
        for b in range(n):
            if s.inv[s.op(a, b)] != s.op(s.inv[b], s.inv[a]):
                raise InternalInvariantError("(ab)^-1 != b^-1 a^-1", witness=(a, b))
    idem = idempotents(s.sgp)
    for e in idem:
        if s.inv[e] != e:
            raise InternalInvariantError("e^-1 != e for idempotent e", witness=(e,))
        for f in idem:
            if s.op(e, f) != s.op(f, e):
                raise InternalInvariantError("idempotents do not commute", witness=(e, f))


def is_inverse_semigroup(s: FiniteSemigroup) -> bool:
    """Predicate form of derive_inverses, independent route: regular with
    pairwise-commuting idempotents."""
    n = s.order
    for a in range(n):
        if not any(s.op(s.op(a, x), a) == a and s.op(s.op(x, a), x) == x
                   for x in range(n)):
            return False
    idem = idempotents(s)
    return all(s.op(e, f) == s.op(f, e) for e in idem for f in idem)


def idempotents(s: FiniteSemigroup) -> tuple[int, ...]:
    return tuple(e for e in range(s.order) if s.op(e, e) == e)


def classify_multiplicative(s: InverseSemigroup) -> ClassificationRecord:
    """Classify an inverse semigroup: group / Clifford / completely regular /
    commutative / semilattice, each with a first-witness on failure."""
    n = s.order
    flags: dict[str, bool] = {}
    witnesses: dict[str, tuple] = {}
    idem = idempotents(s.sgp)

    # group <=> unique idempotent that is a two-sided identity
    if len(idem) != 1:
        flags["is_group"] = False
        witnesses["is_group"] = (idem[0], idem[1]) if len(idem) >= 2 else ()
    else:
        e = idem[0]
        bad = next((a for a in range(n)
                    if s.op(e, a) != a or s.op(a, e) != a), None)
        flags["is_group"] = bad is None
        if bad is not None:
            witnesses["is_group"] = (e, bad)

    clifford = next(((e, x) for e in idem for x in range(n)
                     if s.op(e, x) != s.op(x, e)), None)
    flags["is_clifford"] = clifford is None
    if clifford is not None:
        witnesses["is_clifford"] = clifford

    creg = next((a for a in range(n)
                 if s.op(a, s.inv[a]) != s.op(s.inv[a], a)), None)
    flags["is_completely_regular"] = creg is None
    if creg is not None:
        witnesses["is_completely_regular"] = (creg,)

    comm = next(((a, b) for a in range(n) for b in range(n)
                 if s.op(a, b) != s.op(b, a)), None)
    flags["is_commutative"] = comm is None
    if comm is not None:
        witnesses["is_commutative"] = comm

    # semilattice = commutative band; non-idempotency witnesses come first
    nonidem = next((a for a in range(n) if s.op(a, a) != a), None)
    if nonidem is not None:
        flags["is_semilattice"] = False
        witnesses["is_semilattice"] = (nonidem,)
    elif comm is not None:
        flags["is_semilattice"] = False
        witnesses["is_semilattice"] = comm
    else:
        flags["is_semilattice"] = True

    if flags["is_group"] and not flags["is_clifford"]:
        raise InternalInvariantError("group not classified Clifford")
    if flags["is_clifford"] and not flags["is_completely_regular"]:
        raise InternalInvariantError("Clifford not classified completely regular")
    return ClassificationRecord(flags, witnesses)


def classify_additive(s: FiniteSemigroup) -> ClassificationRecord:
    """Classify an additive semigroup by the predicates that characterize
    semi-brace additions: left/right zero, rectangular band, rectangular,
    stationary on the right; also collects the middle units
    { e : a + e + b = a + b for all a, b }."""
    n = s.order
    flags: dict[str, bool] = {}
    witnesses: dict[str, tuple] = {}

    lz = next(((a, b) for a in range(n) for b in range(n) if s.op(a, b) != a), None)
    flags["is_left_zero"] = lz is None
    if lz is not None:
        witnesses["is_left_zero"] = lz

    rz = next(((a, b) for a in range(n) for b in range(n) if s.op(a, b) != b), None)
    flags["is_right_zero"] = rz is None
    if rz is not None:
        witnesses["is_right_zero"] = rz

    nonidem = next((a for a in range(n) if s.op(a, a) != a), None)
    if nonidem is not None:
        flags["is_rectangular_band"] = False
        witnesses["is_rectangular_band"] = (nonidem,)
    else:
        aba = next(((a, b) for a in range(n) for b in range(n)
                    if s.op(s.op(a, b), a) != a), None)
        flags["is_rectangular_band"] = aba is None
        if aba is not None:
            witnesses["is_rectangular_band"] = aba

    # a+x = b+x = a+y  implies  a+x = b+y, over all quadruples (a, b, x, y)
    rect = next(((a, b, x, y)
                 for a in range(n) for b in range(n)
                 for x in range(n) for y in range(n)
                 if s.op(a, x) == s.op(b, x) == s.op(a, y)
                 and s.op(a, x) != s.op(b, y)), None)
    flags["is_rectangular"] = rect is None
    if rect is not None:
        witnesses["is_rectangular"] = rect

    # a+b = a+c  implies  x+b = x+c, over all quadruples (a, b, c, x)
    stat = next(((a, b, c, x)
                 for a in range(n) for b in range(n)
                 for c in range(n) for x in range(n)
                 if s.op(a, b) == s.op(a, c) and s.op(x, b) != s.op(x, c)), None)
    flags["is_stationary_right"] = stat is None
    if stat is not None:
        witnesses["is_stationary_right"] = stat

    middle = tuple(e for e in range(n)
                   if all(s.op(s.op(a, e), b) == s.op(a, b)
                          for a in range(n) for b in range(n)))
    return ClassificationRecord(flags, witnesses, middle_units=middle)


def _op_of(s):
    return s.op


def is_morphism(f: CarrierMap, a_sgp, b_sgp, mode: str = "hom") -> Check:
    """Check whether f is a homomorphism (f(xy) = f(x)f(y)) or an
    anti-homomorphism (f(xy) = f(y)f(x)) from a_sgp into b_sgp.

    When both semigroups are inverse and the map passes, f(x^-1) = f(x)^-1
    is asserted as a sanity cross-check (it follows automatically).
    """
    if mode not in ("hom", "anti_hom"):
        raise ValueError(f"unknown mode {mode!r}")
    if f.source_order != a_sgp.order or f.target_order != b_sgp.order:
        raise DimensionMismatch(
            f"map is {f.source_order}->{f.target_order}, semigroups are "
            f"{a_sgp.order} and {b_sgp.order}")
    opa, opb = _op_of(a_sgp), _op_of(b_sgp)
    for x in range(a_sgp.order):
        for y in range(a_sgp.order):
            img = opb(f(x), f(y)) if mode == "hom" else opb(f(y), f(x))
            if f(opa(x, y)) != img:
                return Check(mode, False, (x, y))
    if isinstance(a_sgp, InverseSemigroup) and isinstance(b_sgp, InverseSemigroup):
        for x in range(a_sgp.order):
            if f(a_sgp.inv[x]) != b_sgp.inv[f(x)]:
                raise InternalInvariantError(
                    "morphism does not respect inversion", witness=(x,))
    return Check(mode, True)


def enumerate_endomorphisms(s: FiniteSemigroup, cap: int = ENDOMORPHISM_CAP):
    """All f with f(ab) = f(a)f(b), by backtracking over images in index
    order with incremental pruning; output is sorted lexicographically."""
    n = s.order
    if n > cap:
        raise OrderExceedsCap(f"order {n} exceeds endomorphism cap {cap}")
    out: list[CarrierMap] = []
    images = [0] * n

    def consistent(k: int) -> bool:
        # all products with both factors and the product already assigned
        for a in range(k + 1):
            for b in range(k + 1):
                ab = s.op(a, b)
                if ab <= k and images[ab] != s.op(images[a], images[b]):
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            out.append(CarrierMap(n, n, tuple(images)))
            return
        for v in range(n):
            images[k] = v
            if consistent(k):
                extend(k + 1)

    extend(0)
    return out


def enumerate_automorphisms(s: FiniteSemigroup, cap: int = AUTOMORPHISM_CAP):
    """All bijective endomorphisms, by filtering permutations in
    lexicographic order.  The result always contains the identity and is
    closed under composition (asserted)."""
    n = s.order
    if n > cap:
        raise OrderExceedsCap(f"order {n} exceeds automorphism cap {cap}")
    out = []
    for perm in permutations(range(n)):
        if all(perm[s.op(a, b)] == s.op(perm[a], perm[b])
               for a in range(n) for b in range(n)):
            out.append(CarrierMap(n, n, perm))
    maps = {m.map for m in out}
    if tuple(range(n)) not in maps:
        raise InternalInvariantError("automorphism set lacks the identity")
    for f in out:
        for g in out:
            if f.compose(g).map not in maps:
                raise InternalInvariantError(
                    "automorphism set not closed under composition")
    return out
