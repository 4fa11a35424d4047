"""Product constructions on inverse semi-braces.

Every builder validates its preconditions exhaustively, constructs explicit
tables on the flattened carrier (pair (a, u) lives at index a*|T| + u), and
cross-checks each closed-form solution formula against the associated map of
the structure it built.  Cross-checks guaranteed by the underlying theory
raise InternalInvariantError on failure; data-dependent preconditions raise
their own error type with the first failing tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brace import (
    InverseSemiBrace,
    PairMap,
    SemiBraceClassification,
    classify_semibrace,
    lambda_rho,
    validate_semibrace,
)
from .core import (
    CarrierMap,
    Check,
    FiniteSemigroup,
    InverseSemigroup,
    MagmaTable,
    derive_inverses,
    idempotents,
    is_morphism,
    validate_semigroup,
)
from .errors import (
    AlgebraError,
    AsymmetricCompatibilityFails,
    CocycleConditionFails,
    CompositionConditionFails,
    DeltaNotAntiHomomorphism,
    DeltaNotEndomorphism,
    DimensionMismatch,
    DoubleSemidirectCompatibilityFails,
    ElementNotIdempotent,
    IdentityConditionFails,
    InternalInvariantError,
    MalformedTable,
    MatchedSystemInvalid,
    MorphismNotHomomorphism,
    NotClifford,
    NotLeftSemibrace,
    NotSemilattice,
    OrderExceedsCap,
    SigmaNotHomomorphism,
    SigmaNotSemibraceAutomorphism,
)
from .solutions import check_braid

PRODUCT_ORDER_CAP = 64


@dataclass(frozen=True)
class ActionFamily:
    """A family of carrier maps indexed by the elements of an acting
    structure: maps[u] is the map attached to acting element u."""

    acting_order: int
    target_order: int
    maps: tuple[CarrierMap, ...]

    @staticmethod
    def from_tables(tables, target_order=None) -> "ActionFamily":
        maps = tuple(CarrierMap.from_images(t, target_order) for t in tables)
        if not maps:
            raise MalformedTable("empty action family")
        tgt = maps[0].target_order
        if any(m.source_order != maps[0].source_order or m.target_order != tgt
               for m in maps):
            raise DimensionMismatch("action family maps have mixed carriers")
        return ActionFamily(len(maps), tgt, maps)

    @staticmethod
    def trivial(acting_order: int, target_order: int) -> "ActionFamily":
        return ActionFamily(acting_order, target_order,
                            tuple(CarrierMap.identity(target_order)
                                  for _ in range(acting_order)))

    def __call__(self, u: int, x: int) -> int:
        return self.maps[u](x)

    def inverses(self) -> tuple[CarrierMap, ...]:
        return tuple(m.inverse_map() for m in self.maps)


@dataclass(frozen=True)
class Cocycle:
    """A table b: S x S -> T feeding the asymmetric product."""

    s_order: int
    t_order: int
    table: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows, t_order) -> "Cocycle":
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MalformedTable(f"cocycle row {i} has length {len(row)}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < t_order:
                    raise MalformedTable(f"cocycle entry ({i},{j}) out of range")
        return Cocycle(n, t_order, rows)

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]


@dataclass(frozen=True)
class BuiltProduct:
    """A built semi-brace together with its closed-form associated map."""

    brace: InverseSemiBrace
    solution: PairMap


def flatten_index(a: int, u: int, t_order: int) -> int:
    return a * t_order + u


def unflatten_index(p: int, t_order: int) -> tuple[int, int]:
    return divmod(p, t_order)


def product_labels(s, t):
    if s.labels is None or t.labels is None:
        return None
    return tuple(f"({la},{lu})" for la in s.labels for lu in t.labels)


def _check_product_cap(n: int, m: int, cap: int) -> None:
    if n * m > cap:
        raise OrderExceedsCap(f"product order {n * m} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# single-carrier example families


EXAMPLE_VARIANTS = ("right_zero", "left_zero", "aa_inv_b", "opposite_bb_inv_a",
                    "b_times_e", "clifford_ab", "clifford_ba")


def build_example_family(m: InverseSemigroup, variant: str,
                         e: int | None = None) -> InverseSemiBrace:
    """Standard semi-brace additions over one inverse semigroup:

    right_zero / left_zero   a + b = b  /  a + b = a
    aa_inv_b                 a + b = a a^-1 b
    opposite_bb_inv_a        a + b = b b^-1 a
    b_times_e                a + b = b e   for an idempotent e
    clifford_ab / clifford_ba  a + b = ab / ba  (Clifford multiplication only)
    """
    n = m.order
    if variant == "right_zero":
        rows = [list(range(n)) for _ in range(n)]
    elif variant == "left_zero":
        rows = [[a] * n for a in range(n)]
    elif variant == "aa_inv_b":
        rows = [[m.op(m.op(a, m.inv[a]), b) for b in range(n)] for a in range(n)]
    elif variant == "opposite_bb_inv_a":
        rows = [[m.op(m.op(b, m.inv[b]), a) for b in range(n)] for a in range(n)]
    elif variant == "b_times_e":
        if e is None:
            raise ValueError("variant b_times_e needs an element e")
        if m.op(e, e) != e:
            raise ElementNotIdempotent(f"{m.label(e)} is not idempotent", witness=(e,))
        rows = [[m.op(b, e) for b in range(n)] for a in range(n)]
    elif variant in ("clifford_ab", "clifford_ba"):
        for f in idempotents(m.sgp):
            for x in range(n):
                if m.op(f, x) != m.op(x, f):
                    raise NotClifford("idempotents are not central", witness=(f, x))
        if variant == "clifford_ab":
            rows = [[m.op(a, b) for b in range(n)] for a in range(n)]
        else:
            rows = [[m.op(b, a) for b in range(n)] for a in range(n)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    add = MagmaTable.from_rows(rows, labels=m.labels)
    mul = MagmaTable.from_rows([list(r) for r in m.sgp.tab.table], labels=m.labels)
    try:
        return validate_semibrace(add, mul)
    except AlgebraError as exc:
        raise InternalInvariantError(
            f"example family {variant} produced an invalid semi-brace: {exc}") from exc


# ---------------------------------------------------------------------------
# strong semilattices


@dataclass(frozen=True)
class StrongSemilatticeProduct:
    brace: InverseSemiBrace
    solution: PairMap
    offsets: tuple[int, ...]


def build_strong_semilattice(y: FiniteSemigroup,
                             components: list[InverseSemiBrace],
                             morphisms: dict) -> StrongSemilatticeProduct:
    """Glue disjoint semi-braces over a lower semilattice Y along structure
    maps phi[(alpha, beta)] : S_alpha -> S_beta given whenever alpha >= beta
    (that is, alpha * beta = beta in Y).  Both operations project to the
    meet component:  a o b = phi_{alpha,ab}(a) o phi_{beta,ab}(b).

    The companion solution is assembled the same way from the component
    associated maps and coincides with the associated map of the glued
    structure (asserted).
    """
    k = y.order
    if len(components) != k:
        raise DimensionMismatch(f"{len(components)} components for index order {k}")
    for a in range(k):
        if y.op(a, a) != a:
            raise NotSemilattice(f"index element {a} is not idempotent", witness=(a,))
        for b in range(k):
            if y.op(a, b) != y.op(b, a):
                raise NotSemilattice("index operation is not commutative",
                                     witness=(a, b))

    def geq(a, b):
        return y.op(a, b) == b

    phi: dict[tuple[int, int], CarrierMap] = {}
    for a in range(k):
        for b in range(k):
            if not geq(a, b):
                continue
            f = morphisms.get((a, b))
            if a == b:
                if f is None:
                    f = CarrierMap.identity(components[a].order)
                elif f.map != tuple(range(components[a].order)):
                    raise IdentityConditionFails(
                        f"phi[({a},{a})] is not the identity", witness=(a,))
            elif f is None:
                raise MalformedTable(f"missing structure map phi[({a},{b})]")
            if f.source_order != components[a].order or \
                    f.target_order != components[b].order:
                raise DimensionMismatch(f"phi[({a},{b})] has wrong carrier sizes")
            for hom_sgp in ("add", "mul"):
                src = getattr(components[a], hom_sgp)
                dst = getattr(components[b], hom_sgp)
                chk = is_morphism(f, src, dst, "hom")
                if not chk.holds:
                    raise MorphismNotHomomorphism(
                        f"phi[({a},{b})] fails on the {hom_sgp} operation",
                        witness=(a, b) + chk.witness)
            phi[(a, b)] = f
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if geq(a, b) and geq(b, c):
                    if phi[(b, c)].compose(phi[(a, b)]).map != phi[(a, c)].map:
                        raise CompositionConditionFails(
                            f"phi[({b},{c})] . phi[({a},{b})] != phi[({a},{c})]",
                            witness=(a, b, c))

    offsets = []
    total = 0
    for comp in components:
        offsets.append(total)
        total += comp.order
    labels = None
    if all(comp.labels is not None for comp in components):
        labels = tuple(f"{alpha}:{lab}"
                       for alpha, comp in enumerate(components)
                       for lab in comp.labels)

    def home(p):
        for alpha in range(k - 1, -1, -1):
            if p >= offsets[alpha]:
                return alpha, p - offsets[alpha]
        raise IndexError(p)

    def glue(op_name, p, q):
        alpha, i = home(p)
        beta, j = home(q)
        gamma = y.op(alpha, beta)
        fi = phi[(alpha, gamma)](i)
        fj = phi[(beta, gamma)](j)
        return offsets[gamma] + getattr(components[gamma], op_name)(fi, fj)

    add_rows = [[glue("plus", p, q) for q in range(total)] for p in range(total)]
    mul_rows = [[glue("times", p, q) for q in range(total)] for p in range(total)]
    try:
        brace = validate_semibrace(MagmaTable.from_rows(add_rows, labels=labels),
                                   MagmaTable.from_rows(mul_rows, labels=labels))
    except AlgebraError as exc:
        raise InternalInvariantError(
            f"strong semilattice produced an invalid semi-brace: {exc}") from exc

    comp_solutions = [lambda_rho(comp) for comp in components]
    lam = [[0] * total for _ in range(total)]
    rho = [[0] * total for _ in range(total)]
    for p in range(total):
        alpha, i = home(p)
        for q in range(total):
            beta, j = home(q)
            gamma = y.op(alpha, beta)
            fi = phi[(alpha, gamma)](i)
            fj = phi[(beta, gamma)](j)
            r = comp_solutions[gamma]
            lam[p][q] = offsets[gamma] + r.lam[fi][fj]
            rho[p][q] = offsets[gamma] + r.rho[fi][fj]
    solution = PairMap(total, tuple(map(tuple, lam)), tuple(map(tuple, rho)))
    if solution != lambda_rho(brace):
        raise InternalInvariantError(
            "assembled semilattice solution differs from the associated map")
    if all(check_braid(r).holds for r in comp_solutions):
        if not check_braid(solution).holds:
            raise InternalInvariantError(
                "semilattice of solutions failed the braid relation")
    return StrongSemilatticeProduct(brace, solution, tuple(offsets))


# ---------------------------------------------------------------------------
# matched products


@dataclass(frozen=True)
class MatchedSystemReport:
    checks: dict[str, Check]

    @property
    def valid(self) -> bool:
        return all(c.holds for c in self.checks.values())

    def failing(self):
        return [c for c in self.checks.values() if not c.holds]


def _check_additive_automorphisms(fam: ActionFamily, sgp: FiniteSemigroup,
                                  name: str) -> Check:
    for u, f in enumerate(fam.maps):
        if not f.is_permutation():
            return Check(name, False, (u,))
        chk = is_morphism(f, sgp, sgp, "hom")
        if not chk.holds:
            return Check(name, False, (u,) + chk.witness)
    return Check(name, True)


def _check_action_homomorphism(fam: ActionFamily, acting: InverseSemigroup,
                               name: str) -> Check:
    for u in range(acting.order):
        for v in range(acting.order):
            composed = fam.maps[u].compose(fam.maps[v])
            if fam.maps[acting.op(u, v)].map != composed.map:
                return Check(name, False, (u, v))
    return Check(name, True)


def validate_matched_system(s: InverseSemiBrace, t: InverseSemiBrace,
                            alpha: ActionFamily, beta: ActionFamily
                            ) -> MatchedSystemReport:
    """Check the matched-product compatibility laws for
    alpha: T -> Aut(S, +) and beta: S -> Aut(T, +):

    - every alpha_u / beta_a is an additive automorphism,
    - alpha and beta are homomorphisms from the multiplicative semigroups,
    - alpha_u(alpha_u^-1(a) b) = a alpha_{beta_a^-1(u)}(b) and its mirror,
    - alpha_u(alpha_u^-1(a) a) = a  and  beta_a(beta_a^-1(u) u) = u  jointly
      force alpha_u(a) = a and beta_a(u) = u,
    - derived sanity checks: the twisted inverse identities
      (alpha_u^-1(a))^-1 = alpha^-1_{beta_a^-1(u)}(a^-1) (and mirror), and
      alpha_e = id for every multiplicative idempotent e of T (mirror for
      beta).

    When some map is not bijective the dependent checks are omitted.
    """
    if alpha.acting_order != t.order or alpha.target_order != s.order:
        raise DimensionMismatch("alpha must map T-elements to maps on S")
    if beta.acting_order != s.order or beta.target_order != t.order:
        raise DimensionMismatch("beta must map S-elements to maps on T")
    checks: dict[str, Check] = {}
    checks["alpha_additive_automorphisms"] = \
        _check_additive_automorphisms(alpha, s.add, "alpha_additive_automorphisms")
    checks["beta_additive_automorphisms"] = \
        _check_additive_automorphisms(beta, t.add, "beta_additive_automorphisms")
    if not (checks["alpha_additive_automorphisms"].holds
            and checks["beta_additive_automorphisms"].holds):
        return MatchedSystemReport(checks)
    ainv = alpha.inverses()
    binv = beta.inverses()
    checks["alpha_homomorphism"] = \
        _check_action_homomorphism(alpha, t.mul, "alpha_homomorphism")
    checks["beta_homomorphism"] = \
        _check_action_homomorphism(beta, s.mul, "beta_homomorphism")

    def scan_s_compat():
        for a in s.elements():
            for b in s.elements():
                for u in t.elements():
                    lhs = alpha(u, s.times(ainv[u](a), b))
                    rhs = s.times(a, alpha(binv[a](u), b))
                    if lhs != rhs:
                        return Check("product_compatibility_s", False, (a, b, u))
        return Check("product_compatibility_s", True)

    def scan_t_compat():
        for a in s.elements():
            for u in t.elements():
                for v in t.elements():
                    lhs = beta(a, t.times(binv[a](u), v))
                    rhs = t.times(u, beta(ainv[u](a), v))
                    if lhs != rhs:
                        return Check("product_compatibility_t", False, (a, u, v))
        return Check("product_compatibility_t", True)

    def scan_idempotent_implication():
        for a in s.elements():
            for u in t.elements():
                fixed_a = alpha(u, s.times(ainv[u](a), a)) == a
                fixed_u = beta(a, t.times(binv[a](u), u)) == u
                if fixed_a and fixed_u:
                    if alpha(u, a) != a or beta(a, u) != u:
                        return Check("idempotent_pair_implication", False, (a, u))
        return Check("idempotent_pair_implication", True)

    def scan_inverse_twist_s():
        for a in s.elements():
            for u in t.elements():
                if s.inv(ainv[u](a)) != ainv[binv[a](u)](s.inv(a)):
                    return Check("inverse_twist_s", False, (a, u))
        return Check("inverse_twist_s", True)

    def scan_inverse_twist_t():
        for a in s.elements():
            for u in t.elements():
                if t.inv(binv[a](u)) != binv[ainv[u](a)](t.inv(u)):
                    return Check("inverse_twist_t", False, (a, u))
        return Check("inverse_twist_t", True)

    def scan_fixed_idempotents(fam, mul, n_target, name):
        for e in idempotents(mul.sgp):
            for x in range(n_target):
                if fam(e, x) != x:
                    return Check(name, False, (e, x))
        return Check(name, True)

    checks["product_compatibility_s"] = scan_s_compat()
    checks["product_compatibility_t"] = scan_t_compat()
    checks["idempotent_pair_implication"] = scan_idempotent_implication()
    checks["inverse_twist_s"] = scan_inverse_twist_s()
    checks["inverse_twist_t"] = scan_inverse_twist_t()
    checks["alpha_fixes_idempotents"] = \
        scan_fixed_idempotents(alpha, t.mul, s.order, "alpha_fixes_idempotents")
    checks["beta_fixes_idempotents"] = \
        scan_fixed_idempotents(beta, s.mul, t.order, "beta_fixes_idempotents")
    return MatchedSystemReport(checks)


def build_matched_product(s: InverseSemiBrace, t: InverseSemiBrace,
                          alpha: ActionFamily, beta: ActionFamily,
                          cap: int = PRODUCT_ORDER_CAP) -> InverseSemiBrace:
    """Semi-brace on S x T with componentwise sum and the twisted product
    (a,u)(b,v) = (alpha_u(alpha_u^-1(a) b), beta_a(beta_a^-1(u) v))."""
    report = validate_matched_system(s, t, alpha, beta)
    if not report.valid:
        raise MatchedSystemInvalid(
            "matched system invalid: "
            + ", ".join(c.name for c in report.failing()), report=report)
    _check_product_cap(s.order, t.order, cap)
    ainv = alpha.inverses()
    binv = beta.inverses()
    n, m = s.order, t.order
    total = n * m
    add_rows = [[0] * total for _ in range(total)]
    mul_rows = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            for b in range(n):
                for v in range(m):
                    q = flatten_index(b, v, m)
                    add_rows[p][q] = flatten_index(s.plus(a, b), t.plus(u, v), m)
                    mul_rows[p][q] = flatten_index(
                        alpha(u, s.times(ainv[u](a), b)),
                        beta(a, t.times(binv[a](u), v)), m)
    labels = product_labels(s, t)
    try:
        brace = validate_semibrace(MagmaTable.from_rows(add_rows, labels=labels),
                                   MagmaTable.from_rows(mul_rows, labels=labels))
    except AlgebraError as exc:
        raise InternalInvariantError(
            f"matched product is not a valid semi-brace: {exc}") from exc
    for a in range(n):
        for u in range(m):
            expected = flatten_index(ainv[binv[a](u)](s.inv(a)),
                                     binv[ainv[u](a)](t.inv(u)), m)
            if brace.inv(flatten_index(a, u, m)) != expected:
                raise InternalInvariantError(
                    "matched-product inverse formula fails", witness=(a, u))
    return brace


def validate_solution_matched_system(r_s: PairMap, r_t: PairMap,
                                     alpha: ActionFamily, beta: ActionFamily
                                     ) -> MatchedSystemReport:
    """The six compatibility laws tying two candidate maps to bijective
    action families alpha: T -> Sym(S) and beta: S -> Sym(T):

    - alpha_u alpha_v = alpha_{lam_u(v)} alpha_{rho_v(u)} (and beta mirror),
    - rho_{alpha_u^-1(b)} alpha^-1_{beta_a(u)}(a)
        = alpha^-1_{beta_{rho_b(a)} beta_b^-1(u)} rho_b(a) (and mirror),
    - lam_a alpha_{beta_a^-1(u)} = alpha_u lam_{alpha_u^-1(a)} (and mirror).
    """
    n, m = r_s.order, r_t.order
    if alpha.acting_order != m or alpha.target_order != n:
        raise DimensionMismatch("alpha must map T-elements to maps on S")
    if beta.acting_order != n or beta.target_order != m:
        raise DimensionMismatch("beta must map S-elements to maps on T")
    checks: dict[str, Check] = {}
    for name, fam in (("alpha_bijective", alpha), ("beta_bijective", beta)):
        bad = next((u for u, f in enumerate(fam.maps) if not f.is_permutation()),
                   None)
        checks[name] = Check(name, bad is None,
                             None if bad is None else (bad,))
    if not (checks["alpha_bijective"].holds and checks["beta_bijective"].holds):
        return MatchedSystemReport(checks)
    ainv = alpha.inverses()
    binv = beta.inverses()
    lam_s, rho_s = r_s.lam, r_s.rho
    lam_t, rho_t = r_t.lam, r_t.rho

    def s1():
        for u in range(m):
            for v in range(m):
                left = alpha.maps[u].compose(alpha.maps[v])
                right = alpha.maps[lam_t[u][v]].compose(alpha.maps[rho_t[u][v]])
                if left.map != right.map:
                    return Check("alpha_respects_t_solution", False, (u, v))
        return Check("alpha_respects_t_solution", True)

    def s2():
        for a in range(n):
            for b in range(n):
                left = beta.maps[a].compose(beta.maps[b])
                right = beta.maps[lam_s[a][b]].compose(beta.maps[rho_s[a][b]])
                if left.map != right.map:
                    return Check("beta_respects_s_solution", False, (a, b))
        return Check("beta_respects_s_solution", True)

    def s3():
        for a in range(n):
            for b in range(n):
                for u in range(m):
                    left = rho_s[ainv[beta(a, u)](a)][ainv[u](b)]
                    p = rho_s[a][b]
                    right = ainv[beta(p, binv[b](u))](p)
                    if left != right:
                        return Check("alpha_rho_compatibility", False, (a, b, u))
        return Check("alpha_rho_compatibility", True)

    def s4():
        for u in range(m):
            for v in range(m):
                for a in range(n):
                    left = rho_t[binv[alpha(u, a)](u)][binv[a](v)]
                    q = rho_t[u][v]
                    right = binv[alpha(q, ainv[v](a))](q)
                    if left != right:
                        return Check("beta_rho_compatibility", False, (u, v, a))
        return Check("beta_rho_compatibility", True)

    def s5():
        for a in range(n):
            for u in range(m):
                for c in range(n):
                    if lam_s[a][alpha(binv[a](u), c)] != \
                            alpha(u, lam_s[ainv[u](a)][c]):
                        return Check("alpha_lambda_compatibility", False, (a, u, c))
        return Check("alpha_lambda_compatibility", True)

    def s6():
        for a in range(n):
            for u in range(m):
                for w in range(m):
                    if lam_t[u][beta(ainv[u](a), w)] != \
                            beta(a, lam_t[binv[a](u)][w]):
                        return Check("beta_lambda_compatibility", False, (a, u, w))
        return Check("beta_lambda_compatibility", True)

    checks["alpha_respects_t_solution"] = s1()
    checks["beta_respects_s_solution"] = s2()
    checks["alpha_rho_compatibility"] = s3()
    checks["beta_rho_compatibility"] = s4()
    checks["alpha_lambda_compatibility"] = s5()
    checks["beta_lambda_compatibility"] = s6()
    return MatchedSystemReport(checks)


def build_matched_solution(r_s: PairMap, r_t: PairMap,
                           alpha: ActionFamily, beta: ActionFamily,
                           cap: int = PRODUCT_ORDER_CAP) -> PairMap:
    """The matched product of two maps over the flattened carrier:

        r((a,u),(b,v)) = ((alpha_u lam_abar(b), beta_a lam_ubar(v)),
                          (alpha^-1_Ubar rho_{alpha_ubar(b)}(a),
                           beta^-1_Abar rho_{beta_abar(v)}(u)))

    with abar = alpha_u^-1(a), ubar = beta_a^-1(u), A and U the two lambda
    components, Abar = alpha_U^-1(A) and Ubar = beta_A^-1(U).
    """
    report = validate_solution_matched_system(r_s, r_t, alpha, beta)
    if not report.valid:
        raise MatchedSystemInvalid(
            "matched solution system invalid: "
            + ", ".join(c.name for c in report.failing()), report=report)
    n, m = r_s.order, r_t.order
    _check_product_cap(n, m, cap)
    ainv = alpha.inverses()
    binv = beta.inverses()
    total = n * m
    lam = [[0] * total for _ in range(total)]
    rho = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            abar = ainv[u](a)
            ubar = binv[a](u)
            for b in range(n):
                for v in range(m):
                    q = flatten_index(b, v, m)
                    big_a = alpha(u, r_s.lam[abar][b])
                    big_u = beta(a, r_t.lam[ubar][v])
                    ubar2 = binv[big_a](big_u)
                    abar2 = ainv[big_u](big_a)
                    lam[p][q] = flatten_index(big_a, big_u, m)
                    rho[p][q] = flatten_index(
                        ainv[ubar2](r_s.rho[a][alpha(ubar, b)]),
                        binv[abar2](r_t.rho[u][beta(abar, v)]), m)
    return PairMap(total, tuple(map(tuple, lam)), tuple(map(tuple, rho)))


def matched_product_with_solution(s: InverseSemiBrace, t: InverseSemiBrace,
                                  alpha: ActionFamily, beta: ActionFamily,
                                  cap: int = PRODUCT_ORDER_CAP) -> BuiltProduct:
    """Build the matched product and its matched solution together, checking
    that the matched solution is exactly the associated map of the product."""
    brace = build_matched_product(s, t, alpha, beta, cap=cap)
    solution = build_matched_solution(lambda_rho(s), lambda_rho(t), alpha, beta,
                                      cap=cap)
    if solution != lambda_rho(brace):
        raise InternalInvariantError(
            "matched solution differs from the associated map of the product")
    return BuiltProduct(brace, solution)


# ---------------------------------------------------------------------------
# semidirect products


def _validate_sigma(s: InverseSemiBrace, t: InverseSemiBrace,
                    sigma: ActionFamily) -> None:
    """sigma must be a homomorphism from (T, .) into the automorphism group
    of the full semi-brace S (both operations preserved, bijective)."""
    if sigma.acting_order != t.order or sigma.target_order != s.order:
        raise DimensionMismatch("sigma must map T-elements to maps on S")
    for u, f in enumerate(sigma.maps):
        if not f.is_permutation():
            raise SigmaNotSemibraceAutomorphism(
                f"sigma({t.label(u)}) is not bijective", witness=(u,))
        for sgp_name in ("add", "mul"):
            chk = is_morphism(f, getattr(s, sgp_name), getattr(s, sgp_name), "hom")
            if not chk.holds:
                raise SigmaNotSemibraceAutomorphism(
                    f"sigma({t.label(u)}) fails on the {sgp_name} operation",
                    witness=(u,) + chk.witness)
    for u in t.elements():
        for v in t.elements():
            if sigma.maps[t.times(u, v)].map != \
                    sigma.maps[u].compose(sigma.maps[v]).map:
                raise SigmaNotHomomorphism(
                    f"sigma({t.label(u)}{t.label(v)}) != "
                    f"sigma({t.label(u)}) . sigma({t.label(v)})", witness=(u, v))
    for e in idempotents(t.mul.sgp):
        for a in s.elements():
            if sigma(e, a) != a:
                raise InternalInvariantError(
                    "sigma does not fix under multiplicative idempotents",
                    witness=(e, a))


def semidirect_semigroup(s: InverseSemigroup, t: InverseSemigroup,
                         sigma: ActionFamily,
                         cap: int = PRODUCT_ORDER_CAP) -> InverseSemigroup:
    """The semidirect product of inverse semigroups:
    (a,u)(b,v) = (a ^u b, uv), for sigma a homomorphism into Aut(S, .)."""
    if sigma.acting_order != t.order or sigma.target_order != s.order:
        raise DimensionMismatch("sigma must map T-elements to maps on S")
    for u, f in enumerate(sigma.maps):
        if not f.is_permutation():
            raise SigmaNotSemibraceAutomorphism(
                f"sigma({t.label(u)}) is not bijective", witness=(u,))
        chk = is_morphism(f, s.sgp, s.sgp, "hom")
        if not chk.holds:
            raise SigmaNotSemibraceAutomorphism(
                f"sigma({t.label(u)}) is not multiplicative",
                witness=(u,) + chk.witness)
    for u in t.elements():
        for v in t.elements():
            if sigma.maps[t.op(u, v)].map != \
                    sigma.maps[u].compose(sigma.maps[v]).map:
                raise SigmaNotHomomorphism("sigma is not a homomorphism",
                                           witness=(u, v))
    _check_product_cap(s.order, t.order, cap)
    n, m = s.order, t.order
    total = n * m
    rows = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            for b in range(n):
                for v in range(m):
                    rows[p][flatten_index(b, v, m)] = flatten_index(
                        s.op(a, sigma(u, b)), t.op(u, v), m)
    labels = product_labels(s, t)
    sgp = validate_semigroup(MagmaTable.from_rows(rows, labels=labels))
    result = derive_inverses(sgp)
    sinv = sigma.inverses()
    for a in range(n):
        for u in range(m):
            iu = t.inv[u]
            expected = flatten_index(sigma(iu, s.inv[a]), iu, m)
            if result.inv[flatten_index(a, u, m)] != expected:
                raise InternalInvariantError(
                    "semidirect inverse formula (a,u)^-1 = (^(u^-1) a^-1, u^-1) fails",
                    witness=(a, u))
            if sinv[u].map != sigma.maps[iu].map:
                raise InternalInvariantError(
                    "sigma(u)^-1 != sigma(u^-1)", witness=(u,))
    return result


def build_semidirect(s: InverseSemiBrace, t: InverseSemiBrace,
                     sigma: ActionFamily,
                     cap: int = PRODUCT_ORDER_CAP) -> BuiltProduct:
    """Semidirect product of semi-braces: componentwise sum and product
    (a,u)(b,v) = (a ^u b, uv), together with the closed-form map

        r((a,u),(b,v)) = ((^u lam_{^(u^-1) a}(b), lam_u(v)),
                          (^(lam_u(v)^-1) rho_{^u b}(a), rho_v(u)))

    which is checked against the associated map of the built structure."""
    _validate_sigma(s, t, sigma)
    _check_product_cap(s.order, t.order, cap)
    n, m = s.order, t.order
    total = n * m
    add_rows = [[0] * total for _ in range(total)]
    mul_rows = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            for b in range(n):
                for v in range(m):
                    q = flatten_index(b, v, m)
                    add_rows[p][q] = flatten_index(s.plus(a, b), t.plus(u, v), m)
                    mul_rows[p][q] = flatten_index(
                        s.times(a, sigma(u, b)), t.times(u, v), m)
    labels = product_labels(s, t)
    try:
        brace = validate_semibrace(MagmaTable.from_rows(add_rows, labels=labels),
                                   MagmaTable.from_rows(mul_rows, labels=labels))
    except AlgebraError as exc:
        raise InternalInvariantError(
            f"semidirect product is not a valid semi-brace: {exc}") from exc

    r_s, r_t = lambda_rho(s), lambda_rho(t)
    for u in t.elements():
        for a in s.elements():
            for b in s.elements():
                if sigma(u, r_s.lam[a][b]) != \
                        r_s.lam[sigma(u, a)][sigma(u, b)]:
                    raise InternalInvariantError(
                        "^u lam_a(b) = lam_{^u a}(^u b) fails", witness=(u, a, b))
                if sigma(u, r_s.rho[a][b]) != \
                        r_s.rho[sigma(u, a)][sigma(u, b)]:
                    raise InternalInvariantError(
                        "^u rho_b(a) = rho_{^u b}(^u a) fails", witness=(u, a, b))

    lam = [[0] * total for _ in range(total)]
    rho = [[0] * total for _ in range(total)]
    sinv = sigma.inverses()
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            for b in range(n):
                for v in range(m):
                    q = flatten_index(b, v, m)
                    lam_u_v = r_t.lam[u][v]
                    lam[p][q] = flatten_index(
                        sigma(u, r_s.lam[sinv[u](a)][b]), lam_u_v, m)
                    rho[p][q] = flatten_index(
                        sigma(t.inv(lam_u_v), r_s.rho[a][sigma(u, b)]),
                        r_t.rho[u][v], m)
    solution = PairMap(total, tuple(map(tuple, lam)), tuple(map(tuple, rho)))
    if solution != lambda_rho(brace):
        raise InternalInvariantError(
            "semidirect closed form differs from the associated map")
    return BuiltProduct(brace, solution)


# ---------------------------------------------------------------------------
# double semidirect products


def _validate_delta_endomorphisms(t: InverseSemiBrace, delta: ActionFamily) -> None:
    for a, f in enumerate(delta.maps):
        chk = is_morphism(f, t.add, t.add, "hom")
        if not chk.holds:
            raise DeltaNotEndomorphism(
                f"delta({a}) is not an additive endomorphism",
                witness=(a,) + chk.witness)


def _validate_delta_antihom(s: InverseSemiBrace, t: InverseSemiBrace,
                            delta: ActionFamily) -> None:
    """delta reverses additive products: u^(a+b) = (u^a)^b for all a, b, u."""
    if delta.acting_order != s.order or delta.target_order != t.order:
        raise DimensionMismatch("delta must map S-elements to maps on T")
    _validate_delta_endomorphisms(t, delta)
    for a in s.elements():
        for b in s.elements():
            for u in t.elements():
                if delta(s.plus(a, b), u) != delta(b, delta(a, u)):
                    raise DeltaNotAntiHomomorphism(
                        "u^(a+b) != (u^a)^b", witness=(a, b, u))


@dataclass(frozen=True)
class DoubleSemidirectProduct:
    brace: InverseSemiBrace
    classification: SemiBraceClassification
    left_semibrace_inputs: bool
    skew_brace_inputs: bool
    delta_additive_automorphisms: bool


def build_double_semidirect(s: InverseSemiBrace, t: InverseSemiBrace,
                            sigma: ActionFamily, delta: ActionFamily,
                            cap: int = PRODUCT_ORDER_CAP
                            ) -> DoubleSemidirectProduct:
    """Semidirect multiplication paired with the twisted sum
    (a,u) + (b,v) = (a+b, u^b + v), where delta is an additive
    anti-homomorphism into End(T, +) and the compatibility law

        (uv)^(lam_a(^u b)) + u((u^-1)^b + w) = u(v^b + w)

    holds over all (a, b, u, v, w)."""
    _validate_sigma(s, t, sigma)
    _validate_delta_antihom(s, t, delta)
    r_s = lambda_rho(s)
    for a in s.elements():
        for b in s.elements():
            for u in t.elements():
                iu = t.inv(u)
                e = r_s.lam[a][sigma(u, b)]
                for v in t.elements():
                    head = delta(e, t.times(u, v))
                    for w in t.elements():
                        lhs = t.plus(head, t.times(u, t.plus(delta(b, iu), w)))
                        rhs = t.times(u, t.plus(delta(b, v), w))
                        if lhs != rhs:
                            raise DoubleSemidirectCompatibilityFails(
                                "(uv)^(lam_a(^u b)) + u((u^-1)^b + w) != u(v^b + w)",
                                witness=(a, b, u, v, w))
    _check_product_cap(s.order, t.order, cap)
    n, m = s.order, t.order
    total = n * m
    add_rows = [[0] * total for _ in range(total)]
    mul_rows = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            for b in range(n):
                for v in range(m):
                    q = flatten_index(b, v, m)
                    add_rows[p][q] = flatten_index(
                        s.plus(a, b), t.plus(delta(b, u), v), m)
                    mul_rows[p][q] = flatten_index(
                        s.times(a, sigma(u, b)), t.times(u, v), m)
    labels = product_labels(s, t)
    try:
        brace = validate_semibrace(MagmaTable.from_rows(add_rows, labels=labels),
                                   MagmaTable.from_rows(mul_rows, labels=labels))
    except AlgebraError as exc:
        raise InternalInvariantError(
            f"double semidirect product is not a valid semi-brace: {exc}") from exc

    cls_s = classify_semibrace(s)
    cls_t = classify_semibrace(t)
    cls_b = classify_semibrace(brace)
    left_inputs = cls_s.is_left_semibrace and cls_t.is_left_semibrace
    skew_inputs = cls_s.is_skew_brace and cls_t.is_skew_brace
    delta_auto = all(f.is_permutation() for f in delta.maps)
    if left_inputs and delta_auto and not cls_b.is_left_semibrace:
        raise InternalInvariantError(
            "double semidirect of left semi-braces with invertible delta "
            "is not a left semi-brace")
    if skew_inputs and delta_auto and not cls_b.is_skew_brace:
        raise InternalInvariantError(
            "double semidirect of skew braces with invertible delta "
            "is not a skew brace")
    return DoubleSemidirectProduct(
        brace=brace,
        classification=cls_b,
        left_semibrace_inputs=left_inputs,
        skew_brace_inputs=skew_inputs,
        delta_additive_automorphisms=delta_auto,
    )


def double_semidirect_solution_map(s: InverseSemiBrace, t: InverseSemiBrace,
                                   sigma: ActionFamily, delta: ActionFamily
                                   ) -> PairMap:
    """Closed form of the associated map of a double semidirect product,
    with omega = (u^-1)^b + v:

        r((a,u),(b,v)) = ((lam_a(^u b), u omega),
                          (^(omega^-1 u^-1) rho_{^u b}(a), omega^-1 v))
    """
    r_s = lambda_rho(s)
    n, m = s.order, t.order
    total = n * m
    lam = [[0] * total for _ in range(total)]
    rho = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            iu = t.inv(u)
            for b in range(n):
                ub = sigma(u, b)
                for v in range(m):
                    q = flatten_index(b, v, m)
                    omega = t.plus(delta(b, iu), v)
                    iom = t.inv(omega)
                    lam[p][q] = flatten_index(r_s.lam[a][ub], t.times(u, omega), m)
                    rho[p][q] = flatten_index(
                        sigma(t.times(iom, iu), r_s.rho[a][ub]),
                        t.times(iom, v), m)
    return PairMap(total, tuple(map(tuple, lam)), tuple(map(tuple, rho)))


@dataclass(frozen=True)
class TwistedSolutionReport:
    """Verdicts for the associated map of a twisted product: the braid check
    itself plus the sufficient unit conditions that force it for left
    semi-brace components."""

    solution: PairMap
    braid: Check
    conditions: dict[str, Check]
    conditions_applicable: bool

    @property
    def all_conditions_hold(self) -> bool:
        return all(c.holds for c in self.conditions.values())


def double_semidirect_solution(b: DoubleSemidirectProduct,
                               s: InverseSemiBrace, t: InverseSemiBrace,
                               sigma: ActionFamily, delta: ActionFamily
                               ) -> TwistedSolutionReport:
    """Compute the closed-form map of a built double semidirect product,
    check it against lambda_rho, run the braid scan, and evaluate the unit
    conditions

        delta_unit_absorption:           (u^1)^a = u^a
        delta_unit_additive_neutrality:  1^a + u = 1 + u
        delta_product_twist:             u^(ab) = (u^a)^(lam_a(b))

    When S and T are left semi-braces whose own maps solve the braid
    relation, the first two conditions force the product map to solve it;
    that implication is asserted."""
    solution = double_semidirect_solution_map(s, t, sigma, delta)
    if solution != lambda_rho(b.brace):
        raise InternalInvariantError(
            "double semidirect closed form differs from the associated map")
    braid = check_braid(solution)
    conditions: dict[str, Check] = {}
    cls_s = classify_semibrace(s)
    cls_t = classify_semibrace(t)
    applicable = cls_s.is_left_semibrace and cls_t.is_left_semibrace
    if applicable:
        one_s, one_t = cls_s.identity, cls_t.identity
        r_s = lambda_rho(s)

        def cond1():
            for a in s.elements():
                for u in t.elements():
                    if delta(a, delta(one_s, u)) != delta(a, u):
                        return Check("delta_unit_absorption", False, (a, u))
            return Check("delta_unit_absorption", True)

        def cond2():
            for a in s.elements():
                for u in t.elements():
                    if t.plus(delta(a, one_t), u) != t.plus(one_t, u):
                        return Check("delta_unit_additive_neutrality", False, (a, u))
            return Check("delta_unit_additive_neutrality", True)

        def cond1prime():
            for a in s.elements():
                for b2 in s.elements():
                    for u in t.elements():
                        if delta(s.times(a, b2), u) != \
                                delta(r_s.lam[a][b2], delta(a, u)):
                            return Check("delta_product_twist", False, (a, b2, u))
            return Check("delta_product_twist", True)

        conditions["delta_unit_absorption"] = cond1()
        conditions["delta_unit_additive_neutrality"] = cond2()
        conditions["delta_product_twist"] = cond1prime()
        components_solve = check_braid(lambda_rho(s)).holds and \
            check_braid(lambda_rho(t)).holds
        if components_solve and conditions["delta_unit_absorption"].holds \
                and conditions["delta_unit_additive_neutrality"].holds \
                and not braid.holds:
            raise InternalInvariantError(
                "unit conditions hold but the product map is not a solution")
    return TwistedSolutionReport(solution, braid, conditions, applicable)


# ---------------------------------------------------------------------------
# asymmetric products


def validate_cocycle(s: InverseSemiBrace, t: InverseSemiBrace,
                     delta: ActionFamily, cocycle: Cocycle) -> Check:
    """The cocycle law of the twisted sum, over all (a, b, c, u, v):

        b(a+b, c) + b(a,b)^c + (u^b)^c + v^c
            = b(a, b+c) + u^(b+c) + b(b,c) + v^c
    """
    if delta.acting_order != s.order or delta.target_order != t.order:
        raise DimensionMismatch("delta must map S-elements to maps on T")
    if cocycle.s_order != s.order or cocycle.t_order != t.order:
        raise DimensionMismatch("cocycle table has wrong carrier sizes")
    _validate_delta_endomorphisms(t, delta)
    for a in s.elements():
        for b in s.elements():
            ab = s.plus(a, b)
            bab = cocycle(a, b)
            for c in s.elements():
                bc = s.plus(b, c)
                left_head = t.plus(cocycle(ab, c), delta(c, bab))
                for u in t.elements():
                    lu = t.plus(left_head, delta(c, delta(b, u)))
                    ru = t.plus(cocycle(a, bc), t.plus(delta(bc, u), cocycle(b, c)))
                    for v in t.elements():
                        vc = delta(c, v)
                        if t.plus(lu, vc) != t.plus(ru, vc):
                            return Check("cocycle", False, (a, b, c, u, v))
    return Check("cocycle", True)


def asymmetric_solution_map(s: InverseSemiBrace, t: InverseSemiBrace,
                            sigma: ActionFamily, delta: ActionFamily,
                            cocycle: Cocycle) -> PairMap:
    """Closed form of the associated map of an asymmetric product.  With
    omega = (u^-1)^b + v and y = b(^(u^-1) a^-1, b) + omega:

        r((a,u),(b,v)) = ((lam_a(^u b), u y), (^(y^-1 u^-1) rho_{^u b}(a), y^-1 v))
    """
    r_s = lambda_rho(s)
    n, m = s.order, t.order
    total = n * m
    lam = [[0] * total for _ in range(total)]
    rho = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            iu = t.inv(u)
            twisted_inv = sigma(iu, s.inv(a))
            for b in range(n):
                ub = sigma(u, b)
                corr = cocycle(twisted_inv, b)
                for v in range(m):
                    q = flatten_index(b, v, m)
                    omega = t.plus(delta(b, iu), v)
                    y = t.plus(corr, omega)
                    iy = t.inv(y)
                    lam[p][q] = flatten_index(r_s.lam[a][ub], t.times(u, y), m)
                    rho[p][q] = flatten_index(
                        sigma(t.times(iy, iu), r_s.rho[a][ub]),
                        t.times(iy, v), m)
    return PairMap(total, tuple(map(tuple, lam)), tuple(map(tuple, rho)))


def build_asymmetric(s: InverseSemiBrace, t: InverseSemiBrace,
                     sigma: ActionFamily, delta: ActionFamily,
                     cocycle: Cocycle,
                     cap: int = PRODUCT_ORDER_CAP) -> BuiltProduct:
    """Asymmetric product: semidirect multiplication with the cocycle-twisted
    sum (a,u) + (b,v) = (a+b, b(a,b) + u^b + v).  Requires the cocycle law,
    sigma as for the semidirect product, and the compatibility law

        b(a ^u b, lam_a(^u c)) + (uv)^(lam_a(^u c))
            + u(b(^(u^-1) a^-1, c) + (u^-1)^c)  =  u(b(b,c) + v^c)
    """
    _validate_sigma(s, t, sigma)
    chk = validate_cocycle(s, t, delta, cocycle)
    if not chk.holds:
        raise CocycleConditionFails("cocycle law fails", witness=chk.witness)
    r_s = lambda_rho(s)
    for a in s.elements():
        for b in s.elements():
            for c in s.elements():
                for u in t.elements():
                    iu = t.inv(u)
                    ub = sigma(u, b)
                    uc = sigma(u, c)
                    head = cocycle(s.times(a, ub), r_s.lam[a][uc])
                    twisted_inv = sigma(iu, s.inv(a))
                    tail = t.times(u, t.plus(cocycle(twisted_inv, c),
                                             delta(c, iu)))
                    for v in t.elements():
                        lhs = t.plus(t.plus(head, delta(r_s.lam[a][uc],
                                                        t.times(u, v))), tail)
                        rhs = t.times(u, t.plus(cocycle(b, c), delta(c, v)))
                        if lhs != rhs:
                            raise AsymmetricCompatibilityFails(
                                "asymmetric compatibility law fails",
                                witness=(a, b, c, u, v))
    _check_product_cap(s.order, t.order, cap)
    n, m = s.order, t.order
    total = n * m
    add_rows = [[0] * total for _ in range(total)]
    mul_rows = [[0] * total for _ in range(total)]
    for a in range(n):
        for u in range(m):
            p = flatten_index(a, u, m)
            for b in range(n):
                for v in range(m):
                    q = flatten_index(b, v, m)
                    add_rows[p][q] = flatten_index(
                        s.plus(a, b),
                        t.plus(t.plus(cocycle(a, b), delta(b, u)), v), m)
                    mul_rows[p][q] = flatten_index(
                        s.times(a, sigma(u, b)), t.times(u, v), m)
    labels = product_labels(s, t)
    try:
        brace = validate_semibrace(MagmaTable.from_rows(add_rows, labels=labels),
                                   MagmaTable.from_rows(mul_rows, labels=labels))
    except AlgebraError as exc:
        raise InternalInvariantError(
            f"asymmetric product is not a valid semi-brace: {exc}") from exc
    solution = asymmetric_solution_map(s, t, sigma, delta, cocycle)
    if solution != lambda_rho(brace):
        raise InternalInvariantError(
            "asymmetric closed form differs from the associated map")
    return BuiltProduct(brace, solution)


def check_asymmetric_solution_conditions(s: InverseSemiBrace,
                                         t: InverseSemiBrace,
                                         delta: ActionFamily,
                                         cocycle: Cocycle,
                                         sigma: ActionFamily | None = None
                                         ) -> TwistedSolutionReport:
    """For left semi-brace components, the unit conditions

        delta_unit_absorption:            (u^1)^a = u^a
        cocycle_left_unit_neutrality:     b(1, a) + u = 1 + u
        cocycle_right_unit_invariance:    b(a, 1+b) = b(a, b)

    force the asymmetric-product map to solve the braid relation whenever
    the product itself is well formed and the component maps are solutions;
    that implication is asserted.  The braid verdict is always computed
    directly on the closed-form map."""
    cls_s = classify_semibrace(s)
    cls_t = classify_semibrace(t)
    if not (cls_s.is_left_semibrace and cls_t.is_left_semibrace):
        raise NotLeftSemibrace("both components must have group multiplication")
    if sigma is None:
        sigma = ActionFamily.trivial(t.order, s.order)
    one_s, one_t = cls_s.identity, cls_t.identity
    conditions: dict[str, Check] = {}

    def cond1():
        for a in s.elements():
            for u in t.elements():
                if delta(a, delta(one_s, u)) != delta(a, u):
                    return Check("delta_unit_absorption", False, (a, u))
        return Check("delta_unit_absorption", True)

    def cond2():
        for a in s.elements():
            for u in t.elements():
                if t.plus(cocycle(one_s, a), u) != t.plus(one_t, u):
                    return Check("cocycle_left_unit_neutrality", False, (a, u))
        return Check("cocycle_left_unit_neutrality", True)

    def cond3():
        for a in s.elements():
            for b in s.elements():
                if cocycle(a, s.plus(one_s, b)) != cocycle(a, b):
                    return Check("cocycle_right_unit_invariance", False, (a, b))
        return Check("cocycle_right_unit_invariance", True)

    conditions["delta_unit_absorption"] = cond1()
    conditions["cocycle_left_unit_neutrality"] = cond2()
    conditions["cocycle_right_unit_invariance"] = cond3()
    solution = asymmetric_solution_map(s, t, sigma, delta, cocycle)
    braid = check_braid(solution)

    structure_ok = validate_cocycle(s, t, delta, cocycle).holds
    if structure_ok:
        try:
            build_asymmetric(s, t, sigma, delta, cocycle)
        except AlgebraError:
            structure_ok = False
    components_solve = check_braid(lambda_rho(s)).holds and \
        check_braid(lambda_rho(t)).holds
    if structure_ok and components_solve and \
            all(c.holds for c in conditions.values()) and not braid.holds:
        raise InternalInvariantError(
            "asymmetric unit conditions hold but the map is not a solution")
    return TwistedSolutionReport(solution, braid, conditions, True)
