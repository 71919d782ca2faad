"""Finite loops, loop near-rings and rings.

Thin Python layer over the C++ library. Structures come from generator specs
(``cyclic:6``, ``matrix:cyclic:2,2``, ``m0:nonassoc5``) or structure files.
"""

import json

from . import _core
from ._core import (
    BoundExceeded,
    ParseError,
    PreconditionFailed,
    Structure,
    TheoremFalsified,
    ValidationError,
    catalog,
    decompose,
    generate,
    idempotents,
    is_associative,
    is_local,
    is_unit_reflecting,
    jacobson_radical,
    load,
    n_subloops,
    parse,
    primitive_families,
    subloops,
    units,
)

__all__ = [
    "BoundExceeded",
    "CommandFailed",
    "ParseError",
    "PreconditionFailed",
    "Structure",
    "TheoremFalsified",
    "ValidationError",
    "analyze",
    "catalog",
    "decompose",
    "decompose_report",
    "generate",
    "idempotents",
    "is_associative",
    "is_local",
    "is_unit_reflecting",
    "jacobson_radical",
    "load",
    "n_subloops",
    "parse",
    "primitive_families",
    "subloops",
    "units",
]


class CommandFailed(RuntimeError):
    """A CLI-level command ended with a non-zero exit code."""

    def __init__(self, exit_code, message):
        super().__init__(message.strip() or f"exit code {exit_code}")
        self.exit_code = exit_code


def _report(result):
    code, out, err = result
    if code != 0:
        raise CommandFailed(code, err)
    return json.loads(out)


def analyze(target, *, subloops=False, local=False, radical=False, idempotents=False, threads=0):
    """The `analyze` report as a dict. With no section flags, every section runs."""
    return _report(_core.cmd_analyze(target, subloops, local, radical, idempotents, threads))


def decompose_report(target, *, verify_uniqueness=False, threads=0):
    """The `decompose` report as a dict."""
    return _report(_core.cmd_decompose(target, verify_uniqueness, threads))
