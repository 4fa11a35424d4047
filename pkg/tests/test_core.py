import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semibraces.core import (
    CarrierMap,
    MagmaTable,
    classify_additive,
    classify_multiplicative,
    derive_inverses,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    idempotents,
    is_inverse_semigroup,
    is_morphism,
    validate_semigroup,
)
from semibraces.errors import (
    DimensionMismatch,
    MalformedTable,
    NonUniqueInverse,
    NotAssociative,
    NotRegular,
    OrderExceedsCap,
)
from semibraces.fixtures import left_zero, right_zero


def naive_assoc_witness(rows):
    n = len(rows)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    return (a, b, c)
    return None


def all_semigroup_tables(n):
    for vals in itertools.product(range(n), repeat=n * n):
        rows = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
        if naive_assoc_witness(rows) is None:
            yield rows


class TestValidateSemigroup:
    def test_t3_is_a_semigroup(self, T3):
        assert validate_semigroup(T3.sgp.tab).order == 3

    def test_singleton(self):
        assert validate_semigroup(MagmaTable.from_rows([[0]])).order == 1

    def test_first_witness_matches_naive_scan(self):
        rows = [[0, 1], [0, 0]]
        with pytest.raises(NotAssociative) as exc:
            validate_semigroup(MagmaTable.from_rows(rows))
        assert exc.value.witness == naive_assoc_witness(rows) == (1, 0, 1)

    def test_malformed_entry(self):
        with pytest.raises(MalformedTable):
            MagmaTable.from_rows([[0, 2], [0, 0]])

    def test_ragged_rows(self):
        with pytest.raises(MalformedTable):
            MagmaTable.from_rows([[0, 0], [0]])

    def test_duplicate_labels(self):
        with pytest.raises(MalformedTable):
            MagmaTable.from_rows([[0, 0], [0, 0]], labels=["a", "a"])


class TestDeriveInverses:
    def test_t3(self, T3):
        assert T3.inv == (0, 1, 2)

    def test_group_inversion(self, C3):
        # oracle: in a group the inverse of a is the unique x with ax = identity
        e = next(i for i in range(3) if all(C3.op(i, b) == b for b in range(3)))
        for a in range(3):
            x = next(x for x in range(3) if C3.op(a, x) == e)
            assert C3.inv[a] == x

    def test_left_zero_has_non_unique_inverses(self):
        with pytest.raises(NonUniqueInverse) as exc:
            derive_inverses(left_zero(2))
        assert exc.value.witness == (0, 0, 1)

    def test_constant_semigroup_is_not_regular(self):
        constant = validate_semigroup(MagmaTable.from_rows([[0, 0], [0, 0]]))
        with pytest.raises(NotRegular) as exc:
            derive_inverses(constant)
        assert exc.value.witness == (1,)

    def test_success_iff_regular_with_commuting_idempotents(self):
        # second, independent predicate agrees on every order-2 semigroup
        for rows in all_semigroup_tables(2):
            sgp = validate_semigroup(MagmaTable.from_rows(rows))
            try:
                derive_inverses(sgp)
                derived = True
            except (NotRegular, NonUniqueInverse):
                derived = False
            assert derived == is_inverse_semigroup(sgp)


class TestIdempotents:
    def test_t3(self, T3):
        assert idempotents(T3.sgp) == (0, 1)

    def test_s3_everything_idempotent(self, S3):
        assert idempotents(S3.sgp) == (0, 1, 2)

    def test_group_has_one(self, C3):
        assert idempotents(C3.sgp) == (0,)


class TestClassifyMultiplicative:
    def test_t3_clifford_not_group(self, T3):
        record = classify_multiplicative(T3)
        assert record["is_clifford"] and not record["is_group"]
        assert record.witness("is_group") == (0, 1)

    def test_s3_semilattice(self, S3):
        record = classify_multiplicative(S3)
        assert record["is_semilattice"] and record["is_commutative"]

    def test_brandt_not_clifford(self, B2):
        record = classify_multiplicative(B2)
        assert not record["is_clifford"]
        e, x = record.witness("is_clifford")
        assert B2.op(e, x) != B2.op(x, e)

    def test_implication_chain_on_all_order_le3_inverse_semigroups(self):
        for n in (1, 2, 3):
            for rows in all_semigroup_tables(n):
                sgp = validate_semigroup(MagmaTable.from_rows(rows))
                if not is_inverse_semigroup(sgp):
                    continue
                record = classify_multiplicative(derive_inverses(sgp))
                if record["is_group"]:
                    assert record["is_clifford"]
                if record["is_clifford"]:
                    assert record["is_completely_regular"]


class TestClassifyAdditive:
    def test_right_zero(self):
        record = classify_additive(right_zero(3))
        assert record["is_right_zero"] and record["is_rectangular"]
        assert record.middle_units == (0, 1, 2)

    def test_left_zero_witnesses(self):
        record = classify_additive(left_zero(2))
        assert record["is_left_zero"]
        assert not record["is_right_zero"]
        assert record.witness("is_right_zero") == (0, 1)

    def test_stationary_right_matches_quadruple_oracle(self, T3):
        # addition a+b := a*b on T3
        add = T3.sgp
        record = classify_additive(add)
        oracle = all(
            add.op(x, b) == add.op(x, c)
            for a in range(3) for b in range(3) for c in range(3)
            for x in range(3)
            if add.op(a, b) == add.op(a, c))
        assert record["is_stationary_right"] == oracle


class TestIsMorphism:
    def test_tau_is_s3_automorphism(self, S3, TAU):
        assert is_morphism(TAU, S3, S3, "hom").holds

    def test_identity(self, T3):
        assert is_morphism(CarrierMap.identity(3), T3, T3, "hom").holds

    def test_constant_to_non_identity_fails_with_witness(self, C3):
        const = CarrierMap.from_images([1, 1, 1])
        chk = is_morphism(const, C3, C3, "hom")
        assert not chk.holds
        assert chk.witness == (0, 0)

    def test_inversion_is_an_anti_automorphism(self, SYM3):
        inv_map = CarrierMap.from_images(list(SYM3.inv))
        assert is_morphism(inv_map, SYM3, SYM3, "anti_hom").holds
        assert not is_morphism(inv_map, SYM3, SYM3, "hom").holds

    def test_dimension_mismatch(self, T3, C2):
        with pytest.raises(DimensionMismatch):
            is_morphism(CarrierMap.identity(3), T3, C2)


class TestEnumerateEndomorphisms:
    def test_t3_has_exactly_five(self, T3):
        maps = [f.map for f in enumerate_endomorphisms(T3.sgp)]
        assert maps == [(0, 0, 0), (0, 1, 1), (0, 1, 2), (1, 1, 1), (1, 1, 2)]

    def test_singleton(self):
        sgp = validate_semigroup(MagmaTable.from_rows([[0]]))
        assert [f.map for f in enumerate_endomorphisms(sgp)] == [(0,)]

    def test_s3_count_matches_naive_filter(self, S3):
        naive = [f for f in itertools.product(range(3), repeat=3)
                 if all(f[S3.op(a, b)] == S3.op(f[a], f[b])
                        for a in range(3) for b in range(3))]
        assert [f.map for f in enumerate_endomorphisms(S3.sgp)] == sorted(naive)

    def test_cap(self, SYM3):
        with pytest.raises(OrderExceedsCap):
            enumerate_endomorphisms(SYM3.sgp, cap=5)


class TestEnumerateAutomorphisms:
    def test_s3_automorphisms(self, S3, TAU):
        maps = {f.map for f in enumerate_automorphisms(S3.sgp)}
        assert maps == {(0, 1, 2), TAU.map}

    def test_singleton(self):
        sgp = validate_semigroup(MagmaTable.from_rows([[0]]))
        assert [f.map for f in enumerate_automorphisms(sgp)] == [(0,)]

    def test_t3_contains_identity(self, T3):
        maps = {f.map for f in enumerate_automorphisms(T3.sgp)}
        assert (0, 1, 2) in maps


@st.composite
def random_tables(draw, max_order=3):
    n = draw(st.integers(min_value=1, max_value=max_order))
    rows = draw(st.lists(
        st.lists(st.integers(min_value=0, max_value=n - 1),
                 min_size=n, max_size=n),
        min_size=n, max_size=n))
    return rows


@given(random_tables())
@settings(max_examples=200, deadline=None)
def test_inverse_laws_hold_on_every_derivable_table(rows):
    # derive_inverses asserts (ab)^-1 = b^-1 a^-1 and friends internally
    try:
        sgp = validate_semigroup(MagmaTable.from_rows(rows))
        inv_sgp = derive_inverses(sgp)
    except (NotAssociative, NotRegular, NonUniqueInverse):
        return
    n = inv_sgp.order
    for a in range(n):
        assert inv_sgp.inv[inv_sgp.inv[a]] == a
