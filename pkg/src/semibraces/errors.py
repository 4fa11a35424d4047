"""Exception taxonomy shared by all modules.

Every structural failure carries the lexicographically first witness tuple
(under nested left-to-right element ordering), so identical inputs always
produce identical diagnostics.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all structural and search failures."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class MalformedTable(AlgebraError):
    """Table shape is wrong, an entry is out of range, or labels collide."""


class NotAssociative(AlgebraError):
    """Witness (a, b, c) with (ab)c != a(bc)."""


class NotRegular(AlgebraError):
    """Witness (a,): no x satisfies axa = a and xax = x."""


class NonUniqueInverse(AlgebraError):
    """Witness (a, x1, x2): two distinct candidates satisfy both identities.

    Signals a semigroup that is regular but not inverse.
    """


class DimensionMismatch(AlgebraError):
    """Orders of the combined structures disagree."""


class OrderExceedsCap(AlgebraError):
    """The requested exhaustive scan is above the configured size cap."""


class NotAssociativeAdd(AlgebraError):
    """The additive table of a candidate semi-brace is not associative."""


class NotInverseMul(AlgebraError):
    """The multiplicative table is not an inverse semigroup."""


class SemibraceAxiomFails(AlgebraError):
    """Witness (a, b, c) violating a(b + c) = ab + a(a^-1 + c)."""


class NotLeftSemibrace(AlgebraError):
    """The multiplicative semigroup is not a group, but the check needs one."""


class NotSemilattice(AlgebraError):
    """The index structure of a strong semilattice is not a semilattice."""


class IdentityConditionFails(AlgebraError):
    """A strong-semilattice structure map phi_{a,a} is not the identity."""


class CompositionConditionFails(AlgebraError):
    """Witness (alpha, beta, gamma) with phi_bg . phi_ab != phi_ag."""


class MorphismNotHomomorphism(AlgebraError):
    """A supplied structure map fails to be a homomorphism."""


class ElementNotIdempotent(AlgebraError):
    """The designated element e is not idempotent."""


class NotClifford(AlgebraError):
    """A Clifford semigroup was required (idempotents central)."""


class MatchedSystemInvalid(AlgebraError):
    """A matched-product precondition failed; carries the full report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class SigmaNotHomomorphism(AlgebraError):
    """Witness (u, v): sigma(uv) != sigma(u) . sigma(v)."""


class SigmaNotSemibraceAutomorphism(AlgebraError):
    """Some sigma(u) is not an automorphism of the semi-brace."""


class DeltaNotEndomorphism(AlgebraError):
    """Some delta(a) is not an additive endomorphism of the target."""


class DeltaNotAntiHomomorphism(AlgebraError):
    """Witness (a, b, u): u^(a+b) != (u^a)^b."""


class DoubleSemidirectCompatibilityFails(AlgebraError):
    """Witness (a, b, u, v, w) violating the sum/action compatibility law
    (uv)^(lambda_a(^u b)) + u((u^-1)^b + w) = u(v^b + w)."""


class CocycleConditionFails(AlgebraError):
    """Witness (a, b, c, u, v) violating the cocycle law of the twisted sum."""


class AsymmetricCompatibilityFails(AlgebraError):
    """Witness (a, b, c, u, v) violating the asymmetric-product law
    b(a ^u b, lambda_a(^u c)) + (uv)^(lambda_a(^u c)) + u(b(^(u^-1) a^-1, c)
    + (u^-1)^c) = u(b(b, c) + v^c)."""


class SearchTimeout(AlgebraError):
    """Search hit its time budget; carries how many results were emitted."""

    def __init__(self, message: str, emitted: int = 0):
        super().__init__(message)
        self.emitted = emitted


class InternalInvariantError(AlgebraError):
    """A mathematically guaranteed cross-check failed: implementation bug."""
