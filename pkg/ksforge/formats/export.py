"""Module for writing catalogs, reports, projector systems, parity proofs and
census tables as JSON and CSV"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, Iterable

import pandas as pd

from ksforge.bases import ProjectorSystem, classify_bases
from ksforge.catalog import CommutingSetCatalog
from ksforge.diagram import Diagram, ValidityReport, symbol
from ksforge.parity import CENSUS_COLUMNS, ParityProof
from ksforge.projectors import Projector, subspace

logger = logging.getLogger(__name__)


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def catalog_to_dict(catalog: CommutingSetCatalog) -> Dict[str, Any]:
    return {
        'n_qubits': catalog.n_qubits,
        'observables': [o.base.letters for o in catalog.observables],
        'maximal_sets': [list(s) for s in catalog.maximal_sets],
        'ids': {str(size): [{'members': [member.base.letters for member in id_set.members],
                             'sign': id_set.product_sign}
                            for id_set in ids]
                for size, ids in sorted(catalog.ids_by_size.items())},
    }


def catalog_summary(catalog: CommutingSetCatalog) -> str:
    """One-line summary such as "63 observables, 135 maximal sets, 315 ID3s, 945 ID4s"."""
    parts = [f"{len(catalog.observables)} observables", f"{len(catalog.maximal_sets)} maximal sets"]
    parts.extend(f"{len(ids)} ID{size}s" for size, ids in sorted(catalog.ids_by_size.items()))
    return ', '.join(parts)


def report_to_dict(d: Diagram, report: ValidityReport) -> Dict[str, Any]:
    data = asdict(report)
    data['odd_observables'] = list(report.odd_observables)
    data['is_ks_proof'] = report.is_ks_proof
    data['symbol'] = str(symbol(d))
    return data


def projector_to_dict(p: Projector, vectors: bool = False) -> Dict[str, Any]:
    """
    Projector record with 1-based numbers. With `vectors`, the eigenspace basis
    is added as [a, b] integer pairs for a + b*i, each vector scaled to smallest
    integer form.
    """
    record: Dict[str, Any] = {'number': p.label + 1,
                              'id_index': p.id_index + 1,
                              'observables': p.source_id.printed_members(),
                              'signature': p.signature_text,
                              'rank': p.rank}
    if vectors:
        record['basis_vectors'] = [[list(pair) for pair in vector]
                                   for vector in subspace(p).basis_vectors]
    return record


def system_to_dict(system: ProjectorSystem, vectors: bool = False) -> Dict[str, Any]:
    """Canonical form of a projector system, with 1-based projector and basis numbers."""
    kinds = classify_bases(system).kinds
    return {
        'n_qubits': system.n_qubits,
        'symbol': system.symbol,
        'projectors': [projector_to_dict(p, vectors) for p in system.projectors],
        'bases': [{'number': number, 'projectors': [label + 1 for label in basis], 'kind': kind}
                  for number, (basis, kind) in enumerate(zip(system.bases, kinds), start=1)],
    }


def system_hash(system: ProjectorSystem) -> str:
    """sha256 of the canonical serialization; proof files refer to their system by it."""
    canonical = json.dumps(system_to_dict(system), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def write_catalog_json(path: str | Path, catalog: CommutingSetCatalog) -> None:
    Path(path).write_text(_dump(catalog_to_dict(catalog)), encoding='utf-8')


def write_system_json(path: str | Path, system: ProjectorSystem, vectors: bool = False) -> str:
    """Writes the system and returns its hash. The hash never covers the vectors."""
    data = system_to_dict(system, vectors)
    digest = system_hash(system)
    data['sha256'] = digest
    Path(path).write_text(_dump(data), encoding='utf-8')
    logger.info("wrote projector system %s to %s", system.brief_symbol, path)
    return digest


def write_proofs_json(path: str | Path, system: ProjectorSystem,
                      proofs: Iterable[ParityProof]) -> None:
    """Writes proofs as 1-based basis numbers, tied to the system by its hash."""
    data = {'system_sha256': system_hash(system),
            'proofs': [[index + 1 for index in proof.basis_indices] for proof in proofs]}
    Path(path).write_text(_dump(data), encoding='utf-8')


def write_census_csv(path: str | Path, census: pd.DataFrame) -> None:
    census[CENSUS_COLUMNS].to_csv(path, index=False, encoding='utf-8')
    logger.info("wrote %d census rows to %s", len(census), path)
