"""Components of Hurwitz spaces: braid orbits, component monoid, Hilbert functions, spectrum.

Permutations are 1-based cycle strings such as "(1 2)(3 4)". Reports come back
as dicts with the same layout as the CLI's JSON output.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CapExceeded, Group, HurwitzError, InsufficientData, InvalidArgument, schema_version

__all__ = [
    "CapExceeded",
    "Group",
    "HurwitzError",
    "InsufficientData",
    "InvalidArgument",
    "Table",
    "census",
    "census_full_group",
    "classes",
    "hf_closed_form",
    "hf_leading_coefficient",
    "schema_version",
    "subgroups",
    "symmetric_spectrum",
]


def classes(group):
    return json.loads(group.classes_json())


def subgroups(group):
    return json.loads(group.subgroups_json())


class Table:
    """Component monoid of a group up to max_degree, with its Hilbert function."""

    def __init__(self, group, max_degree, caps=None):
        self._t = _core.Table(group, max_degree, caps or {})

    @property
    def max_degree(self):
        return self._t.max_degree

    @property
    def group(self):
        return self._t.group

    def __len__(self):
        return self._t.size

    def hilbert(self, subgroup, n):
        return self._t.hilbert(subgroup, n)

    def component_of(self, entries):
        return self._t.component_of(list(entries))

    def multiply(self, a, b):
        return self._t.multiply(a, b)

    def factorization(self, component):
        return self._t.factorization(component)

    def non_factorizable(self):
        return self._t.non_factorizable()

    def components(self):
        return json.loads(self._t.components_json())

    def hilbert_csv(self):
        return self._t.hilbert_csv()

    def growth(self, subgroup):
        return json.loads(self._t.growth_json(subgroup))

    def average(self, subgroup, tolerance=0.25):
        return json.loads(self._t.average_json(subgroup, tolerance))

    def spectrum(self):
        return json.loads(self._t.spectrum_json())

    def verify(self, seed=1729, braid_samples=1000, lemma_samples=200, workers=1):
        return json.loads(self._t.verify_json(seed, braid_samples, lemma_samples, workers))

    def presentation(self):
        return json.loads(self._t.presentation_json())


def census(d, n, caps=None):
    return json.loads(_core.census_json(d, n, caps or {}))


def census_full_group(d, n, caps=None):
    return _core.census_full_group(d, n, caps or {})


def hf_closed_form(d, m):
    return int(_core.hf_closed_form(d, m))


def hf_leading_coefficient(d):
    num, den = _core.hf_leading_coefficient(d)
    return Fraction(int(num), int(den))


def symmetric_spectrum(d, caps=None):
    return json.loads(_core.symmetric_spectrum_json(d, caps or {}))
