"""Property checks for candidate Yang-Baxter maps on finite carriers.

A PairMap r is a braid solution when
    (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)
on all triples.  The quantum form and the pentagon identity act on explicit
triples through the position maps r12, r13, r23; compositions are read right
to left.  Powers of r are powers of the induced self-map of the n^2 pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .brace import InverseSemiBrace, PairMap, classify_semibrace, lambda_rho
from .core import Check
from .errors import InternalInvariantError, NotLeftSemibrace, OrderExceedsCap

ISOMORPHISM_CAP = 8


def check_braid(r: PairMap) -> Check:
    """Both braid composites on every triple; first witness on failure."""
    lam, rho = r.lam, r.rho
    n = r.order
    for a in range(n):
        for b in range(n):
            a1, b1 = lam[a][b], rho[a][b]
            for c in range(n):
                # (r x id)(id x r)(r x id)
                b2, c2 = lam[b1][c], rho[b1][c]
                la, lb = lam[a1][b2], rho[a1][b2]
                lc = c2
                # (id x r)(r x id)(id x r)
                b3, c3 = lam[b][c], rho[b][c]
                a4, b4 = lam[a][b3], rho[a][b3]
                ra = a4
                rb, rc = lam[b4][c3], rho[b4][c3]
                if (la, lb, lc) != (ra, rb, rc):
                    return Check("braid", False, (a, b, c))
    return Check("braid", True)


def _r12(r, t):
    a, b, c = t
    x, y = r.lam[a][b], r.rho[a][b]
    return (x, y, c)


def _r13(r, t):
    a, b, c = t
    x, y = r.lam[a][c], r.rho[a][c]
    return (x, b, y)


def _r23(r, t):
    a, b, c = t
    x, y = r.lam[b][c], r.rho[b][c]
    return (a, x, y)


def check_equation(r: PairMap, which: str) -> Check:
    """Check a named triple identity.

    "qybe":     r12 r13 r23 = r23 r13 r12
    "pentagon": r23 r13 r12 = r12 r23
    """
    if which == "qybe":
        def lhs(t):
            return _r12(r, _r13(r, _r23(r, t)))

        def rhs(t):
            return _r23(r, _r13(r, _r12(r, t)))
    elif which == "pentagon":
        def lhs(t):
            return _r23(r, _r13(r, _r12(r, t)))

        def rhs(t):
            return _r12(r, _r23(r, t))
    else:
        raise ValueError(f"unknown equation {which!r}")
    n = r.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if lhs((a, b, c)) != rhs((a, b, c)):
                    return Check(which, False, (a, b, c))
    return Check(which, True)


def flip_compose(r: PairMap) -> PairMap:
    """tau . r, with tau the coordinate flip: (a,b) -> (rho_b(a), lambda_a(b))."""
    return PairMap(r.order, r.rho, r.lam)


@dataclass(frozen=True)
class PowerProfile:
    index: int
    period: int
    is_idempotent: bool
    is_cubic: bool
    is_involutive: bool


def power_profile(r: PairMap) -> PowerProfile:
    """Tail length and cycle length of id, r, r^2, ... as self-maps of the
    n^2 pairs.  Bijective maps have index 0; an idempotent non-identity map
    has index 1 and period 1."""
    n2 = r.order * r.order
    identity = tuple(range(n2))
    step = r.flattened()
    seen = {identity: 0}
    powers = [identity]
    cur = identity
    while True:
        cur = tuple(step[x] for x in cur)
        if cur in seen:
            first = seen[cur]
            index, period = first, len(powers) - first
            break
        seen[cur] = len(powers)
        powers.append(cur)
    r1 = powers[1] if len(powers) > 1 else tuple(step[x] for x in identity)
    r2 = tuple(step[x] for x in r1)
    r3 = tuple(step[x] for x in r2)
    profile = PowerProfile(
        index=index,
        period=period,
        is_idempotent=r2 == r1,
        is_cubic=r3 == r1,
        is_involutive=r2 == identity,
    )
    if profile.index == 0 and sorted(step) != list(range(n2)):
        raise InternalInvariantError("index 0 for a non-bijective map")
    return profile


@dataclass(frozen=True)
class DegeneracyProfile:
    left_nondegenerate: bool
    right_nondegenerate: bool
    bijective: bool


def degeneracy_profile(r: PairMap) -> DegeneracyProfile:
    """left non-degenerate: every lambda_a is a bijection; right: every
    rho_b is; bijective: r permutes the n^2 pairs."""
    n = r.order
    rng = list(range(n))
    left = all(sorted(r.lam[a]) == rng for a in range(n))
    right = all(sorted(r.rho[a][b] for a in range(n)) == rng for b in range(n))
    bij = sorted(r.flattened()) == list(range(n * n))
    return DegeneracyProfile(left, right, bij)


@dataclass(frozen=True)
class SolutionReport:
    is_braid_solution: bool
    is_qybe: bool
    is_pentagon: bool
    is_idempotent: bool
    is_cubic: bool
    is_involutive: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    bijective: bool
    index: int
    period: int
    witnesses: dict[str, tuple]


def solution_report(r: PairMap) -> SolutionReport:
    """Aggregate every solution-theoretic property of one map."""
    braid = check_braid(r)
    qybe = check_equation(r, "qybe")
    pent = check_equation(r, "pentagon")
    powers = power_profile(r)
    degen = degeneracy_profile(r)
    witnesses = {c.name: c.witness for c in (braid, qybe, pent) if not c.holds}
    report = SolutionReport(
        is_braid_solution=braid.holds,
        is_qybe=qybe.holds,
        is_pentagon=pent.holds,
        is_idempotent=powers.is_idempotent,
        is_cubic=powers.is_cubic,
        is_involutive=powers.is_involutive,
        left_nondegenerate=degen.left_nondegenerate,
        right_nondegenerate=degen.right_nondegenerate,
        bijective=degen.bijective,
        index=powers.index,
        period=powers.period,
        witnesses=witnesses,
    )
    if report.is_idempotent and not (report.index <= 1 and report.period == 1):
        raise InternalInvariantError("idempotent map with index > 1 or period > 1")
    if report.is_involutive and not (report.index == 0 and report.period in (1, 2)):
        raise InternalInvariantError("involutive map with wrong power profile")
    if report.bijective != (report.index == 0):
        raise InternalInvariantError("bijectivity and index disagree")
    return report


@dataclass(frozen=True)
class SufficientConditionsReport:
    """Three conditions that force the associated map of an inverse
    semi-brace to solve the braid relation, plus the three componentwise
    identities equivalent to the braid relation itself:

        1. (a+b)(a+b)^-1 (a+bc) = a+bc
        2. lam_a(b)^-1 + lam_{rho_b(a)}(c) = lam_a(b)^-1 + lam_{(a^-1+b)^-1}(lam_b(c))
        3. rho_b(a)^-1 + c = (b^-1+c)(rho_{lam_b(c)}(a)^-1 + rho_c(b))

        (i)   lam_a lam_b = lam_{lam_a(b)} lam_{rho_b(a)}
        (ii)  lam_{rho_{lam_b(c)}(a)}(rho_c(b)) = rho_{lam_{rho_b(a)}(c)}(lam_a(b))
        (iii) rho_c rho_b = rho_{rho_c(b)} rho_{lam_b(c)}
    """

    sum_product_absorption: Check
    lambda_compatibility: Check
    rho_compatibility: Check
    lambda_braid: Check
    middle_braid: Check
    rho_braid: Check
    braid: Check

    @property
    def all_conditions_hold(self) -> bool:
        return (self.sum_product_absorption.holds
                and self.lambda_compatibility.holds
                and self.rho_compatibility.holds)

    @property
    def braid_identities_hold(self) -> bool:
        return (self.lambda_braid.holds and self.middle_braid.holds
                and self.rho_braid.holds)


def check_sufficient_conditions(s: InverseSemiBrace) -> SufficientConditionsReport:
    n = s.order
    r = lambda_rho(s)
    lam, rho = r.lam, r.rho

    def scan(pred, name):
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if not pred(a, b, c):
                        return Check(name, False, (a, b, c))
        return Check(name, True)

    def cond1(a, b, c):
        t = s.plus(a, s.times(b, c))
        ab = s.plus(a, b)
        return s.times(s.times(ab, s.inv(ab)), t) == t

    def cond2(a, b, c):
        left = s.plus(s.inv(lam[a][b]), lam[rho[a][b]][c])
        sub = s.inv(s.plus(s.inv(a), b))
        right = s.plus(s.inv(lam[a][b]), lam[sub][lam[b][c]])
        return left == right

    def cond3(a, b, c):
        left = s.plus(s.inv(rho[a][b]), c)
        right = s.times(s.plus(s.inv(b), c),
                        s.plus(s.inv(rho[a][lam[b][c]]), rho[b][c]))
        return left == right

    def braid_i(a, b, c):
        return lam[a][lam[b][c]] == lam[lam[a][b]][lam[rho[a][b]][c]]

    def braid_ii(a, b, c):
        return lam[rho[a][lam[b][c]]][rho[b][c]] == rho[lam[a][b]][lam[rho[a][b]][c]]

    def braid_iii(a, b, c):
        return rho[rho[a][b]][c] == rho[rho[a][lam[b][c]]][rho[b][c]]

    report = SufficientConditionsReport(
        sum_product_absorption=scan(cond1, "sum_product_absorption"),
        lambda_compatibility=scan(cond2, "lambda_compatibility"),
        rho_compatibility=scan(cond3, "rho_compatibility"),
        lambda_braid=scan(braid_i, "lambda_braid"),
        middle_braid=scan(braid_ii, "middle_braid"),
        rho_braid=scan(braid_iii, "rho_braid"),
        braid=check_braid(r),
    )
    if report.braid_identities_hold != report.braid.holds:
        raise InternalInvariantError(
            "componentwise braid identities disagree with the braid scan")
    if report.all_conditions_hold and not report.braid.holds:
        raise InternalInvariantError(
            "sufficient conditions hold but the map is not a solution")
    return report


def check_condsolution(s: InverseSemiBrace) -> Check:
    """Characterization for left semi-braces (multiplicative group with
    identity 1): the associated map solves the braid relation if and only if

        a + lam_b(c)(1 + rho_c(b)) = a + b(1 + c)

    for all a, b, c.  The equivalence with check_braid is asserted."""
    cls = classify_semibrace(s)
    if not cls.is_left_semibrace:
        raise NotLeftSemibrace("multiplicative semigroup is not a group")
    one = cls.identity
    r = lambda_rho(s)
    lam, rho = r.lam, r.rho
    n = s.order
    result = Check("condsolution", True)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = s.plus(a, s.times(lam[b][c], s.plus(one, rho[b][c])))
                right = s.plus(a, s.times(b, s.plus(one, c)))
                if left != right:
                    result = Check("condsolution", False, (a, b, c))
                    break
            if not result.holds:
                break
        if not result.holds:
            break
    if result.holds != check_braid(r).holds:
        raise InternalInvariantError(
            "characterization disagrees with the braid scan on a left semi-brace")
    return result


def index_by_definition(r: PairMap, limit: int = 64):
    """Index/period by the raw definitions: the least j >= 0 with r^j = r^l
    for some l != j, then the least k >= 1 with r^(j+k) = r^j.

    Quadratic in the number of distinct powers; used as an independent
    oracle against power_profile.
    """
    n2 = r.order * r.order
    step = r.flattened()
    powers = [tuple(range(n2))]
    for _ in range(limit):
        powers.append(tuple(step[x] for x in powers[-1]))
    index = None
    for j in range(len(powers)):
        if any(powers[j] == powers[l] for l in range(1, len(powers)) if l != j):
            index = j
            break
    if index is None:
        raise OrderExceedsCap(f"no repetition within {limit} powers")
    period = next(k for k in range(1, len(powers) - index)
                  if powers[index + k] == powers[index])
    return index, period


def solutions_isomorphic(r1: PairMap, r2: PairMap, cap: int = ISOMORPHISM_CAP):
    """First carrier bijection phi (in lexicographic order) with
    (phi x phi) . r1 = r2 . (phi x phi), or None."""
    if r1.order != r2.order:
        return None
    n = r1.order
    if n > cap:
        raise OrderExceedsCap(f"order {n} exceeds isomorphism cap {cap}")
    for phi in permutations(range(n)):
        if all(phi[r1.lam[a][b]] == r2.lam[phi[a]][phi[b]]
               and phi[r1.rho[a][b]] == r2.rho[phi[a]][phi[b]]
               for a in range(n) for b in range(n)):
            return phi
    return None
