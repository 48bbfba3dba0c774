"""Tests for the ksforge command line"""

import json

import pytest

from ksforge import fixtures
from ksforge.catalog import build_catalog
from ksforge.cli import EXIT_CAP, EXIT_MALFORMED, EXIT_NEGATIVE, EXIT_OK, main


@pytest.fixture
def pentagram_file(tmp_path):
    path = tmp_path / 'pentagram.txt'
    path.write_text(fixtures.PENTAGRAM, encoding='utf-8')
    return path


class TestVerify:
    """The verify command."""

    def test_proof(self, pentagram_file, capsys):
        assert main(['verify', str(pentagram_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "KS proof: yes; symbol 10_2-5_4" in out
        assert "negative IDs: 1" in out

    def test_not_a_proof(self, capsys):
        assert main(['verify', '--fixture', 'pentagram_positive']) == EXIT_NEGATIVE
        assert "KS proof: no" in capsys.readouterr().out

    def test_json(self, capsys):
        assert main(['verify', '--fixture', 'kite', '--format', 'json', '--assignments',
                     '--critical']) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['symbol'] == "10_2-4_3 2_4"
        assert data['is_ks_proof']
        assert data['consistent_assignment_exists'] is False
        assert data['critical'] is True

    def test_malformed_file(self, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text("qubits: 2\nXI, IQ, XX\n", encoding='utf-8')
        assert main(['verify', str(path)]) == EXIT_MALFORMED

    def test_missing_file(self, tmp_path):
        assert main(['verify', str(tmp_path / 'absent.txt')]) == EXIT_MALFORMED

    def test_no_input(self):
        assert main(['verify']) == EXIT_MALFORMED

    def test_assignment_cap(self, monkeypatch):
        monkeypatch.setattr('ksforge.config.ASSIGNMENT_CAP', 5)
        assert main(['verify', '--fixture', 'pentagram', '--assignments']) == EXIT_CAP


class TestProofs:
    """The proofs command."""

    def test_pentagram(self, tmp_path, capsys):
        census = tmp_path / 'census.csv'
        system = tmp_path / 'system.json'
        proofs = tmp_path / 'proofs.json'
        code = main(['proofs', '--fixture', 'pentagram', '--census', str(census),
                     '--system', str(system), '--proofs', str(proofs)])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "projector system 40-25: 40_5-25_8" in out
        assert "total: 1024" in out
        assert census.exists()
        assert len(json.loads(proofs.read_text(encoding='utf-8'))['proofs']) == 1024
        assert json.loads(system.read_text(encoding='utf-8'))['symbol'] == "40_5-25_8"

    def test_type_filter(self, capsys):
        assert main(['proofs', '--fixture', 'square3', '--type', '18-9']) == EXIT_OK
        assert "total: 16" in capsys.readouterr().out

    def test_unknown_type(self, capsys):
        assert main(['proofs', '--fixture', 'pentagram', '--type', '1-1']) == EXIT_NEGATIVE
        assert "no parity proofs" in capsys.readouterr().out

    def test_check_orthogonality(self, capsys):
        assert main(['proofs', '--fixture', 'square2', '--check-orthogonality']) == EXIT_OK
        assert "orthogonality checked" in capsys.readouterr().out

    def test_system_vectors(self, tmp_path):
        system = tmp_path / 'system.json'
        assert main(['proofs', '--fixture', 'square2', '--system', str(system), '--vectors']) == EXIT_OK
        projectors = json.loads(system.read_text(encoding='utf-8'))['projectors']
        assert all(len(p['basis_vectors']) == p['rank'] for p in projectors)

    def test_kernel_cap(self):
        assert main(['proofs', '--fixture', 'pentagram', '--max-kernel-dim', '4']) == EXIT_CAP


class TestSearch:
    """The search command."""

    def test_found(self, tmp_path, capsys):
        code = main(['search', '-n', '2', '--symbol', '9_2-6_3', '--max-diagrams', '1',
                     '--output-dir', str(tmp_path)])
        assert code == EXIT_OK
        assert "diagram 1: symbol 9_2-6_3" in capsys.readouterr().out
        assert main(['verify', str(tmp_path / 'diagram_001.txt')]) == EXIT_OK

    def test_exhausted(self, capsys):
        assert main(['search', '-n', '2', '--symbol', '3_2-2_3']) == EXIT_NEGATIVE
        assert "search exhausted" in capsys.readouterr().out

    def test_node_limit(self, capsys):
        assert main(['search', '-n', '2', '--symbol', '9_2-6_3', '--max-nodes', '1']) == EXIT_NEGATIVE
        assert "node limit reached" in capsys.readouterr().out

    def test_catalog_follows_target_sizes(self, monkeypatch, capsys):
        built = []

        def recording_catalog(n, sizes=None):
            catalog = build_catalog(n, sizes)
            built.append(catalog)
            return catalog

        monkeypatch.setattr('ksforge.cli.build_catalog', recording_catalog)
        assert main(['search', '-n', '3', '--symbol', '7_2-2_7']) == EXIT_NEGATIVE
        assert "search exhausted" in capsys.readouterr().out
        assert list(built[0].ids_by_size) == [7]
        assert len(built[0].ids_by_size[7]) == 135

    @pytest.mark.parametrize('text', ["10_2", "10_2-5_3"])
    def test_bad_symbol(self, text):
        assert main(['search', '-n', '3', '--symbol', text]) == EXIT_MALFORMED


class TestOther:
    """The catalog and dot commands."""

    def test_catalog(self, tmp_path, capsys):
        path = tmp_path / 'catalog.json'
        assert main(['catalog', '-n', '2', '-o', str(path)]) == EXIT_OK
        assert "15 observables, 15 maximal sets, 15 ID3s" in capsys.readouterr().out
        assert json.loads(path.read_text(encoding='utf-8'))['n_qubits'] == 2

    def test_catalog_cap(self, monkeypatch):
        monkeypatch.setattr('ksforge.config.CATALOG_CAP', 2)
        assert main(['catalog', '-n', '3']) == EXIT_CAP

    def test_dot(self, capsys):
        assert main(['dot', '--fixture', 'square2']) == EXIT_OK
        assert capsys.readouterr().out.startswith("graph diagram {")
