"""Galois centers of projections of rational normal curves.

Forms, systems, group specs and centers use the same JSON shapes as the
``galois-loci`` command line tool; here they are plain dicts and lists.
"""

import json

from . import _core
from ._core import ComputationError, InputError

__all__ = [
    "ComputationError",
    "InputError",
    "center",
    "families",
    "galois_space",
    "selftest",
    "verify",
]


def _dump(value):
    if value is None:
        return ""
    return value if isinstance(value, str) else json.dumps(value)


def families(degree=0, system=None, samples=50, seed=0):
    """One record per family of Galois centers for degree ``degree`` (or ``system``)."""
    return json.loads(_core.families(degree, _dump(system), samples, seed))


def galois_space(group, degree=0, system=None):
    """Basis of the Galois sections of ``group`` in the given system."""
    return json.loads(_core.galois_space(_dump(group), degree, _dump(system)))


def center(group, section, degree=0, system=None):
    """Center and Pluecker point built from a group spec and a section."""
    return json.loads(_core.center(_dump(group), _dump(section), degree, _dump(system)))


def verify(center, system=None, tol_accept=1e-8, tol_dedupe=1e-6, seed=0):
    """Deck-group report for a center."""
    return json.loads(_core.verify(_dump(center), _dump(system), tol_accept, tol_dedupe, seed))


def selftest(seed=0, samples=50):
    """Run the acceptance suite; one dict per criterion."""
    return json.loads(_core.selftest(seed, samples))
