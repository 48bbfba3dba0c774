"""Tests for ksforge.diagram"""

from dataclasses import replace

import pytest

from ksforge import fixtures
from ksforge.catalog import make_id
from ksforge.diagram import (Diagram, DiagramSymbol, exhaustive_assignment_check, is_critical,
                             symbol, validate)
from ksforge.errors import CapExceededError, DiagramError, QubitMismatchError
from ksforge.pauli import parse_observable


def flip_negative(d: Diagram) -> Diagram:
    """The same diagram with every negative ID declared positive."""
    return Diagram(d.n_qubits, d.observables,
                   tuple(replace(id_set, product_sign=1) for id_set in d.ids))


class TestSymbol:
    """Diagram symbols."""

    def test_parse_and_print(self):
        parsed = DiagramSymbol.parse("1_4 11_2-2_3 5_4")
        assert parsed.multiplicity_map() == {4: 1, 2: 11}
        assert parsed.size_map() == {3: 2, 4: 5}
        assert str(parsed) == "1_4 11_2-2_3 5_4"
        assert parsed.is_consistent()

    def test_counts(self):
        parsed = DiagramSymbol.parse("10_2-4_3 2_4")
        assert parsed.observable_count == 10
        assert parsed.id_count == 6
        assert parsed.max_multiplicity == 2

    def test_inconsistent(self):
        assert not DiagramSymbol.parse("10_2-5_3").is_consistent()

    @pytest.mark.parametrize('text', ["10_2", "a-b", "10_2-5_4-1_3", "10_2 x-5_4"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            DiagramSymbol.parse(text)

    @pytest.mark.parametrize('name, expected', [
        ('pentagram', "10_2-5_4"),
        ('square2', "9_2-6_3"),
        ('square3', "9_2-6_3"),
        ('kite', "10_2-4_3 2_4"),
    ])
    def test_fixture_symbols(self, name, expected):
        assert str(symbol(fixtures.load(name))) == expected


class TestValidate:
    """Properties (a) and (b)."""

    def test_pentagram(self, pentagram):
        report = validate(pentagram)
        assert report.property_a and report.property_b
        assert report.negative_id_count == 1
        assert report.is_ks_proof

    def test_square(self, square2):
        report = validate(square2)
        assert report.is_ks_proof
        assert report.negative_id_count == 1

    def test_square3_has_three_negative_ids(self, square3):
        report = validate(square3)
        assert report.negative_id_count == 3
        assert report.is_ks_proof

    def test_sign_flipped(self, pentagram):
        report = validate(flip_negative(pentagram))
        assert report.property_a
        assert not report.property_b
        assert not report.is_ks_proof

    def test_missing_negative_id(self):
        report = validate(fixtures.load('pentagram_positive'))
        assert not report.property_a
        assert set(report.odd_observables) == {"ZZZ", "ZXX", "XZX", "XXZ"}
        assert not report.is_ks_proof


class TestDiagramStructure:
    """Construction checks, incidence and restriction."""

    def test_no_ids(self):
        with pytest.raises(DiagramError):
            Diagram.from_ids([])

    def test_mixed_qubit_counts(self, square2):
        wide = make_id([parse_observable(s) for s in ("YII", "IYI", "YYI")])
        with pytest.raises(QubitMismatchError):
            Diagram.from_ids(square2.ids + (wide,))

    def test_unused_observable(self, square2):
        extra = parse_observable("YI")
        d = Diagram(2, square2.observables + (extra,), square2.ids)
        with pytest.raises(DiagramError):
            d.check()

    def test_foreign_member(self, square2):
        d = Diagram(2, square2.observables[1:], square2.ids)
        with pytest.raises(DiagramError):
            validate(d)

    def test_incidence(self, pentagram):
        incidence = pentagram.incidence()
        assert incidence.shape == (10, 5)
        assert list(incidence.sum(axis=0)) == [4] * 5
        assert list(incidence.sum(axis=1)) == [2] * 10

    def test_restrict_square3(self, square3):
        for kept in [(0, 1), (0, 2), (1, 2), (0,), (1,), (2,)]:
            assert square3.restrict(kept) is None

    def test_restrict_keeps_ids(self, square2):
        # pad every member with an idle third qubit
        padded = [make_id([parse_observable(s + "I") for s in id_set.printed_members()])
                  for id_set in square2.ids]
        wide = Diagram.from_ids(padded)
        restricted = wide.restrict([0, 1])
        assert restricted is not None
        assert validate(restricted).is_ks_proof
        assert str(symbol(restricted)) == "9_2-6_3"

    def test_symbol_ignores_order(self, kite):
        shuffled = Diagram(kite.n_qubits, tuple(reversed(kite.observables)), tuple(reversed(kite.ids)))
        assert symbol(shuffled) == symbol(kite)
        assert shuffled.key == kite.key

    def test_fingerprint(self, pentagram):
        text, profile = pentagram.fingerprint()
        assert text == "10_2-5_4"
        assert profile == ((4, 4, 1, -1),) * 4 + ((4, 4, 1, 1),) * 6


class TestAssignments:
    """Brute-force search for noncontextual values."""

    @pytest.mark.parametrize('name', ['pentagram', 'square2', 'square3', 'kite'])
    def test_proofs_have_no_assignment(self, name):
        assert not exhaustive_assignment_check(fixtures.load(name)).consistent_assignment_exists

    def test_positive_variant_has_assignment(self):
        d = fixtures.load('pentagram_positive')
        result = exhaustive_assignment_check(d)
        assert result.consistent_assignment_exists
        for id_set in d.ids:
            total = 1
            for base in id_set.bases:
                total *= result.witness[base.letters]
            assert total == id_set.product_sign

    def test_cap(self, pentagram, monkeypatch):
        monkeypatch.setattr('ksforge.config.ASSIGNMENT_CAP', 5)
        with pytest.raises(CapExceededError):
            exhaustive_assignment_check(pentagram)


class TestCriticality:
    """Irreducibility by IDs and by qubits."""

    @pytest.mark.parametrize('name', ['pentagram', 'square2', 'square3', 'kite'])
    def test_fixtures_are_critical(self, name):
        assert is_critical(fixtures.load(name)).is_critical

    def test_padded_pentagram_is_not_critical(self, pentagram):
        pair = make_id([parse_observable(s) for s in ("YII", "IYI", "YYI")])
        d = Diagram.from_ids(pentagram.ids + (pair, pair))
        assert validate(d).is_ks_proof
        report = is_critical(d)
        assert not report.id_irreducible
        assert tuple(range(5)) in report.offending_id_subsets

    def test_requires_proof(self):
        with pytest.raises(DiagramError):
            is_critical(fixtures.load('pentagram_positive'))
