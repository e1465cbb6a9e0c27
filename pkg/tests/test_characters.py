"""Character table computation and orthogonality verification."""

import dataclasses

import numpy as np
import pytest

from grouptrace import (
    CharacterTable,
    IndexOutOfRange,
    build_named,
    catalog_names,
    character_value,
    compute_character_table,
    conjugacy_classes,
    structure_constants,
    verify_orthogonality,
)

# Degree multisets pinned from independent hand computation.
KNOWN_DEGREES = {
    "symmetric3": [1, 1, 2],
    "symmetric4": [1, 1, 2, 3, 3],
    "symmetric5": [1, 1, 4, 4, 5, 5, 6],
    "alternating4": [1, 1, 1, 3],
    "alternating5": [1, 3, 3, 4, 5],
    "quaternion8": [1, 1, 1, 1, 2],
    "dihedral4": [1, 1, 1, 1, 2],
    "dihedral5": [1, 1, 2, 2],
    "klein4": [1, 1, 1, 1],
}


class TestSmallTables:
    def test_trivial_group(self):
        from grouptrace import build_from_cayley

        ct = compute_character_table(build_from_cayley([[0]]))
        assert ct.num_irreps == 1
        assert np.allclose(ct.table, [[1.0]])

    def test_order_two_exact(self):
        ct = compute_character_table(build_named("cyclic2"))
        assert np.allclose(ct.table, [[1, 1], [1, -1]], atol=1e-10)

    def test_symmetric3_table(self):
        ct = compute_character_table(build_named("symmetric3"))
        # classes ordered identity, transpositions, 3-cycles
        sizes = [len(c) for c in ct.class_data.classes]
        assert sizes == [1, 3, 2]
        expected = np.array([[1, 1, 1], [1, -1, 1], [2, 0, -1]], dtype=complex)
        assert np.allclose(ct.table, expected, atol=1e-9)

    def test_cyclic3_has_primitive_roots(self):
        ct = compute_character_table(build_named("cyclic3"))
        w = complex(np.exp(2j * np.pi / 3))
        key = lambda z: (z.real, z.imag)
        values = sorted((complex(ct.table[lam, 1]) for lam in range(3)), key=key)
        targets = sorted([1 + 0j, w, w.conjugate()], key=key)
        assert np.allclose(values, targets, atol=1e-9)


class TestDegrees:
    @pytest.mark.parametrize("name", sorted(KNOWN_DEGREES))
    def test_known_degree_multisets(self, name):
        ct = compute_character_table(build_named(name))
        assert sorted(int(d) for d in ct.degrees) == KNOWN_DEGREES[name]

    def test_degree_squares_sum_to_order(self):
        for name in catalog_names():
            g = build_named(name)
            ct = compute_character_table(g)
            assert int(np.sum(np.asarray(ct.degrees) ** 2)) == g.order

    def test_degrees_match_identity_column(self):
        ct = compute_character_table(build_named("symmetric4"))
        assert np.allclose(ct.table[:, 0].real, ct.degrees)
        assert np.allclose(ct.table[:, 0].imag, 0, atol=1e-10)

    def test_degrees_divide_group_order(self):
        for name in ("symmetric5", "alternating5", "quaternion8"):
            g = build_named(name)
            ct = compute_character_table(g)
            assert all(g.order % int(d) == 0 for d in ct.degrees)


class TestTableStructure:
    def test_trivial_row_is_first(self):
        for name in catalog_names():
            ct = compute_character_table(build_named(name))
            assert ct.trivial_index == 0
            assert np.allclose(ct.table[0], 1.0)

    def test_values_bounded_by_degree(self):
        for name in ("symmetric5", "dihedral8", "quaternion8"):
            ct = compute_character_table(build_named(name))
            bound = np.asarray(ct.degrees, dtype=float)[:, None] + 1e-9
            assert np.all(np.abs(ct.table) <= bound)

    def test_inverse_class_conjugation_symmetry(self):
        for name in ("symmetric4", "cyclic5", "quaternion8", "alternating5"):
            ct = compute_character_table(build_named(name))
            inv = list(ct.class_data.inverse_class)
            assert np.allclose(ct.table[:, inv], ct.table.conj(), atol=1e-9)

    def test_deterministic_across_calls(self):
        a = compute_character_table(build_named("symmetric4"))
        b = compute_character_table(build_named("symmetric4"))
        assert np.array_equal(a.table, b.table)
        assert np.array_equal(a.degrees, b.degrees)

    def test_seed_changes_do_not_change_result(self):
        a = compute_character_table(build_named("dihedral5"), seed=0)
        b = compute_character_table(build_named("dihedral5"), seed=123)
        assert np.allclose(a.table, b.table, atol=1e-8)

    def test_row_count_equals_class_count(self):
        for name in catalog_names():
            g = build_named(name)
            ct = compute_character_table(g)
            assert ct.num_irreps == ct.class_data.num_classes
            assert ct.table.shape == (ct.num_irreps, ct.num_irreps)

    def test_irrep_accessors(self):
        ct = compute_character_table(build_named("symmetric3"))
        rho = ct.irrep(2)
        assert rho.degree == 2
        assert np.array_equal(np.asarray(rho.values), ct.table[2])
        with pytest.raises(IndexOutOfRange):
            ct.irrep(3)

    def test_value_on_elements_expands_classes(self):
        g = build_named("symmetric3")
        ct = compute_character_table(g)
        for lam in range(ct.num_irreps):
            vals = ct.value_on_elements(lam)
            assert vals.shape == (g.order,)
            for x in range(g.order):
                assert vals[x] == ct.table[lam, ct.class_data.class_of[x]]

    def test_character_value_helper(self):
        g = build_named("symmetric3")
        ct = compute_character_table(g)
        assert character_value(ct, 0, 3) == pytest.approx(1.0)
        assert character_value(ct, 2, 0) == pytest.approx(2.0)


class TestStructureConstants:
    def test_counts_are_nonnegative_integers(self):
        g = build_named("symmetric4")
        cd = conjugacy_classes(g)
        a = structure_constants(g, cd)
        assert a.dtype.kind == "i"
        assert np.all(a >= 0)

    def test_against_direct_triple_count(self):
        g = build_named("symmetric3")
        cd = conjugacy_classes(g)
        a = structure_constants(g, cd)
        # a[i, j, k] * |C_k| = number of (x, y) in C_i x C_j with x y in C_k
        for i in range(cd.num_classes):
            for j in range(cd.num_classes):
                for k in range(cd.num_classes):
                    hits = sum(
                        1
                        for x in cd.classes[i]
                        for y in cd.classes[j]
                        if cd.class_of[g.mul(x, y)] == k
                    )
                    assert hits == int(a[i, j, k]) * len(cd.classes[k])

    def test_row_sums_give_class_size_product(self):
        g = build_named("dihedral4")
        cd = conjugacy_classes(g)
        a = structure_constants(g, cd)
        sizes = cd.sizes
        for i in range(cd.num_classes):
            for j in range(cd.num_classes):
                total = int(np.sum(a[i, j] * sizes))
                assert total == int(sizes[i]) * int(sizes[j])


class TestOrthogonality:
    def test_whole_catalog_passes(self):
        for name in catalog_names():
            ct = compute_character_table(build_named(name))
            report = verify_orthogonality(ct)
            assert report.passed, f"{name}: {report}"
            assert report.max_row_deviation < 1e-8
            assert report.max_column_deviation < 1e-8

    def test_corrupted_table_fails(self):
        ct = compute_character_table(build_named("symmetric4"))
        bad = ct.table.copy()
        bad[2, 3] += 1e-3
        corrupted = dataclasses.replace(ct, table=bad)
        report = verify_orthogonality(corrupted)
        assert not report.passed

    def test_column_norms_equal_centralizer_orders(self):
        g = build_named("symmetric4")
        ct = compute_character_table(g)
        cd = ct.class_data
        for i in range(cd.num_classes):
            norm = float(np.sum(np.abs(ct.table[:, i]) ** 2))
            rep = cd.representatives[i]
            assert norm == pytest.approx(float(cd.centralizer_order[rep]), abs=1e-8)

    def test_row_inner_products(self):
        g = build_named("alternating5")
        ct = compute_character_table(g)
        sizes = ct.class_data.sizes.astype(float)
        gram = (ct.table * sizes) @ ct.table.conj().T / g.order
        assert np.allclose(gram, np.eye(ct.num_irreps), atol=1e-10)
