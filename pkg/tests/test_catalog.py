"""Tests for ksforge.catalog"""

import pytest

from ksforge.catalog import (IdSet, build_catalog, commutation_graph, enumerate_ids,
                             enumerate_maximal_commuting_sets, enumerate_observables, make_id,
                             product_sign)
from ksforge.errors import CapExceededError, QubitMismatchError
from ksforge.exact import ONE, ExactMatrix, product
from ksforge.pauli import observable_matrix, parse_observable


def observables(*symbols):
    return [parse_observable(s) for s in symbols]


class TestObservables:
    """Enumeration of nontrivial observables."""

    @pytest.mark.parametrize('n, count', [(1, 3), (2, 15), (3, 63)])
    def test_counts(self, n, count):
        assert len(enumerate_observables(n)) == count

    def test_symbol_order(self):
        assert [o.base.letters for o in enumerate_observables(1)] == ['X', 'Y', 'Z']

    def test_cap(self, monkeypatch):
        monkeypatch.setattr('ksforge.config.CATALOG_CAP', 2)
        with pytest.raises(CapExceededError):
            enumerate_observables(3)

    def test_bad_qubit_count(self):
        with pytest.raises(ValueError):
            enumerate_observables(0)


class TestMaximalSets:
    """Maximal commuting sets as cliques of the commutation graph."""

    @pytest.mark.parametrize('n, count', [(1, 3), (2, 15), (3, 135)])
    def test_counts(self, n, count):
        assert len(enumerate_maximal_commuting_sets(n)) == count

    def test_sizes(self):
        assert {len(s) for s in enumerate_maximal_commuting_sets(3)} == {7}
        assert {len(s) for s in enumerate_maximal_commuting_sets(2)} == {3}

    def test_graph_degree(self):
        graph = commutation_graph(enumerate_observables(2))
        # each two-qubit observable commutes with 6 others
        assert {degree for _, degree in graph.degree} == {6}


class TestProductSign:
    """Classification of observable lists by their product."""

    def test_negative_id4(self):
        assert product_sign(observables("ZZZ", "ZXX", "XZX", "XXZ")) == -1

    def test_negative_id3(self):
        assert product_sign(observables("ZIZ", "XIX", "YIY")) == -1

    def test_positive_id3(self):
        assert product_sign(observables("XI", "IX", "XX")) == 1

    def test_sign_of_members_counts(self):
        assert product_sign(observables("XI", "IX", "-XX")) == -1

    def test_not_commuting(self):
        assert product_sign(observables("XI", "ZI", "YI")) is None

    def test_product_not_identity(self):
        assert product_sign(observables("ZII", "IZI")) is None

    def test_mismatch(self):
        with pytest.raises(QubitMismatchError):
            product_sign(observables("ZI", "ZZZ"))


class TestIds:
    """ID construction and enumeration."""

    def test_make_id_moves_sign_to_set(self):
        id_set = make_id(observables("ZZZ", "ZXX", "XZX", "-XXZ"))
        assert id_set.product_sign == -1
        assert all(member.sign == 1 for member in id_set.members)
        assert str(id_set) == "ZZZ, ZXX, XZX, -XXZ"

    def test_sign_carrier(self):
        id_set = IdSet(tuple(observables("ZIZ", "XIX", "YIY")), -1, sign_carrier=0)
        assert id_set.printed_members() == ['-ZIZ', 'XIX', 'YIY']

    def test_repeated_member(self):
        assert make_id(observables("XI", "XI", "IX")) is None

    def test_two_qubit_id3s(self):
        ids = enumerate_ids(2, 3)
        assert len(ids) == 15
        # only the three {XA, YB, ZC} triples with (A, B, C) an even permutation of (X, Y, Z)
        assert sum(1 for id_set in ids if id_set.is_negative) == 3

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            enumerate_ids(2, 2)

    def test_products_checked_by_matrices(self, catalog2):
        identity = ExactMatrix.identity(4)
        for id_set in catalog2.ids():
            total = product(observable_matrix(member) for member in id_set.members)
            assert total == (identity if id_set.product_sign == 1 else identity.scale(-ONE))


class TestCatalog:
    """Full catalogs."""

    def test_three_qubits(self, catalog3):
        assert len(catalog3.observables) == 63
        assert len(catalog3.maximal_sets) == 135
        assert len(catalog3.ids_by_size[3]) == 315
        assert len(catalog3.ids_by_size[4]) == 945

    def test_two_qubits_has_no_id4(self, catalog2):
        assert len(catalog2.ids_by_size[3]) == 15
        assert not catalog2.ids_by_size.get(4)

    def test_index(self, catalog3):
        zzz = parse_observable("ZZZ").base
        assert catalog3.observables[catalog3.index[zzz]].base == zzz

    def test_ids_ordered_by_size(self, catalog3):
        sizes = [id_set.size for id_set in catalog3.ids()]
        assert sizes == sorted(sizes)

    @pytest.mark.slow
    def test_three_qubit_products_checked_by_matrices(self, catalog3):
        identity = ExactMatrix.identity(8)
        for id_set in catalog3.ids():
            total = product(observable_matrix(member) for member in id_set.members)
            assert total == (identity if id_set.product_sign == 1 else identity.scale(-ONE))

    def test_single_qubit_catalog(self):
        catalog = build_catalog(1)
        assert len(catalog.maximal_sets) == 3
        assert catalog.ids_by_size == {}
