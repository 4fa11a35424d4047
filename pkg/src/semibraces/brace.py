"""Inverse semi-braces: one carrier, an additive semigroup and a
multiplicative inverse semigroup coupled by a(b + c) = ab + a(a^-1 + c).

The associated pair map r(a, b) = (lambda_a(b), rho_b(a)) is materialized as
two order-n tables; rho is stored row-indexed by the first argument of r,
so rho[a][b] is rho_b(a) and r(a, b) = (lam[a][b], rho[a][b]).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Check,
    FiniteSemigroup,
    InverseSemigroup,
    MagmaTable,
    classify_multiplicative,
    derive_inverses,
    idempotents,
    validate_semigroup,
)
from .errors import (
    AlgebraError,
    DimensionMismatch,
    InternalInvariantError,
    NotAssociative,
    NotAssociativeAdd,
    NotInverseMul,
    SemibraceAxiomFails,
)


@dataclass(frozen=True)
class InverseSemiBrace:
    """A verified left inverse semi-brace."""

    add: FiniteSemigroup
    mul: InverseSemigroup

    @property
    def order(self) -> int:
        return self.mul.order

    @property
    def labels(self):
        return self.mul.labels or self.add.labels

    def plus(self, a: int, b: int) -> int:
        return self.add.op(a, b)

    def times(self, a: int, b: int) -> int:
        return self.mul.op(a, b)

    def inv(self, a: int) -> int:
        return self.mul.inv[a]

    def label(self, i: int) -> str:
        lab = self.labels
        return lab[i] if lab is not None else str(i)

    def elements(self):
        return range(self.order)


@dataclass(frozen=True)
class SemiBraceClassification:
    is_left_semibrace: bool
    is_skew_brace: bool
    is_generalized: bool
    is_two_sided: bool
    add_left_cancellative: bool
    identity: int | None


@dataclass(frozen=True)
class PairMap:
    """A candidate Yang-Baxter map r(a, b) = (lam[a][b], rho[a][b]) on an
    order-n carrier."""

    order: int
    lam: tuple[tuple[int, ...], ...]
    rho: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(lam, rho) -> "PairMap":
        lam_t = MagmaTable.from_rows(lam)
        rho_t = MagmaTable.from_rows(rho)
        if lam_t.order != rho_t.order:
            raise DimensionMismatch("lambda and rho tables have different orders")
        return PairMap(lam_t.order, lam_t.table, rho_t.table)

    def apply(self, a: int, b: int) -> tuple[int, int]:
        return self.lam[a][b], self.rho[a][b]

    def flattened(self) -> tuple[int, ...]:
        """r as a self-map of the n^2 pairs, pair (a, b) stored at a*n + b."""
        n = self.order
        return tuple(self.lam[a][b] * n + self.rho[a][b]
                     for a in range(n) for b in range(n))


def validate_semibrace(add: MagmaTable, mul: MagmaTable) -> InverseSemiBrace:
    """Validate, in order: additive associativity, multiplicative
    inverse-semigroup structure, then the left axiom over all n^3 triples."""
    if add.order != mul.order:
        raise DimensionMismatch(
            f"additive order {add.order} != multiplicative order {mul.order}")
    try:
        add_s = validate_semigroup(add)
    except NotAssociative as exc:
        raise NotAssociativeAdd(str(exc), witness=exc.witness) from exc
    try:
        mul_s = derive_inverses(validate_semigroup(mul))
    except AlgebraError as exc:
        if isinstance(exc, InternalInvariantError):
            raise
        raise NotInverseMul(f"multiplicative table: {exc}", witness=exc.witness) from exc

    n = add.order
    for a in range(n):
        ia = mul_s.inv[a]
        for b in range(n):
            ab = mul_s.op(a, b)
            for c in range(n):
                lhs = mul_s.op(a, add_s.op(b, c))
                rhs = add_s.op(ab, mul_s.op(a, add_s.op(ia, c)))
                if lhs != rhs:
                    raise SemibraceAxiomFails(
                        f"a(b+c) != ab + a(a^-1+c) at "
                        f"({add.label(a)},{add.label(b)},{add.label(c)})",
                        witness=(a, b, c))
    return InverseSemiBrace(add_s, mul_s)


def check_right_axiom(s: InverseSemiBrace) -> Check:
    """(a + b)c = (a + c^-1)c + bc over all triples."""
    for a in s.elements():
        for b in s.elements():
            for c in s.elements():
                lhs = s.times(s.plus(a, b), c)
                rhs = s.plus(s.times(s.plus(a, s.inv(c)), c), s.times(b, c))
                if lhs != rhs:
                    return Check("right_axiom", False, (a, b, c))
    return Check("right_axiom", True)


def _is_group_table(sgp: FiniteSemigroup) -> bool:
    # finite + associative + both-sided cancellative <=> group
    n = sgp.order
    rng = list(range(n))
    for a in range(n):
        if sorted(sgp.op(a, b) for b in rng) != rng:
            return False
        if sorted(sgp.op(b, a) for b in rng) != rng:
            return False
    return True


def classify_semibrace(s: InverseSemiBrace) -> SemiBraceClassification:
    """Locate the structure in the semi-brace hierarchy.

    left semi-brace: multiplication is a group; skew brace: both operations
    are groups; generalized: multiplication is completely regular.
    """
    mul_class = classify_multiplicative(s.mul)
    is_left = mul_class["is_group"]
    identity = None
    if is_left:
        identity = idempotents(s.mul.sgp)[0]
    is_skew = is_left and _is_group_table(s.add)
    is_generalized = mul_class["is_completely_regular"]
    two_sided = check_right_axiom(s).holds
    n = s.order
    left_canc = all(
        len({s.plus(a, b) for b in range(n)}) == n for a in range(n))
    cls = SemiBraceClassification(
        is_left_semibrace=is_left,
        is_skew_brace=is_skew,
        is_generalized=is_generalized,
        is_two_sided=two_sided,
        add_left_cancellative=left_canc,
        identity=identity,
    )
    if cls.is_skew_brace and not cls.is_left_semibrace:
        raise InternalInvariantError("skew brace not classified left semi-brace")
    if cls.is_left_semibrace and not cls.is_generalized:
        raise InternalInvariantError("left semi-brace not classified generalized")
    return cls


def lambda_rho(s: InverseSemiBrace) -> PairMap:
    """Materialize lambda_a(b) = a(a^-1 + b) and rho_b(a) = (a^-1 + b)^-1 b."""
    n = s.order
    lam = []
    rho = []
    for a in range(n):
        ia = s.inv(a)
        lam_row = []
        rho_row = []
        for b in range(n):
            t = s.plus(ia, b)
            lam_row.append(s.times(a, t))
            rho_row.append(s.times(s.inv(t), b))
        lam.append(tuple(lam_row))
        rho.append(tuple(rho_row))
    return PairMap(n, tuple(lam), tuple(rho))


def check_lambda_endomorphism(s: InverseSemiBrace) -> Check:
    """lambda_a(b + c) = lambda_a(b) + lambda_a(c); failure would signal an
    internal inconsistency for a validated semi-brace."""
    r = lambda_rho(s)
    for a in s.elements():
        for b in s.elements():
            for c in s.elements():
                if r.lam[a][s.plus(b, c)] != s.plus(r.lam[a][b], r.lam[a][c]):
                    return Check("lambda_endomorphism", False, (a, b, c))
    return Check("lambda_endomorphism", True)


def check_lambda_product_identity(s: InverseSemiBrace) -> Check:
    """lambda_{ab}(c) = a b b^-1 a^-1 + lambda_a(lambda_b(c)), and
    a b b^-1 a^-1 is idempotent in (S, .)."""
    r = lambda_rho(s)
    for a in s.elements():
        for b in s.elements():
            e = s.times(s.times(s.times(a, b), s.inv(b)), s.inv(a))
            if s.times(e, e) != e:
                return Check("lambda_product_identity", False, (a, b))
            ab = s.times(a, b)
            for c in s.elements():
                if r.lam[ab][c] != s.plus(e, r.lam[a][r.lam[b][c]]):
                    return Check("lambda_product_identity", False, (a, b, c))
    return Check("lambda_product_identity", True)
