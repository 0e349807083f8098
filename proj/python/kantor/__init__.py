"""Exact Q(i) verification engine and catalog for Kantor triple systems."""

import json

from . import _kantor
from ._kantor import DocumentError, UnknownId

__all__ = [
    "DocumentError",
    "UnknownId",
    "acceptance",
    "count_kts",
    "derivations",
    "enumerate_gradings",
    "export_entry",
    "list_entries",
    "roundtrip",
    "tkk",
    "verify",
    "verify_document",
]


def list_entries(classical=False, max_dim=12):
    return json.loads(_kantor.list_entries(classical, max_dim))


def verify(id, mode=None, samples=200, seed=0):
    return json.loads(_kantor.verify(id, mode, samples, seed))


def tkk(id, jacobi=None, samples=500, seed=0):
    return json.loads(_kantor.tkk(id, jacobi, samples, seed))


def derivations(id):
    return json.loads(_kantor.derivations(id))


def enumerate_gradings(algebra):
    return json.loads(_kantor.enumerate_gradings(algebra))


def count_kts(algebra):
    return json.loads(_kantor.count_kts(algebra))


def export_entry(id):
    return json.loads(_kantor.export_entry(id))


def verify_document(document, mode=None, samples=200, seed=0):
    """Check the axioms of an exported entry, given as a dict or a JSON string."""
    text = document if isinstance(document, str) else json.dumps(document)
    return json.loads(_kantor.verify_document(text, mode, samples, seed))


def roundtrip(id):
    return _kantor.roundtrip(id)


def acceptance(classical_max_dim=12):
    return json.loads(_kantor.acceptance(classical_max_dim))
