import doctest

import pytest

import cfckit.classify
import cfckit.conjecture
import cfckit.heaps
import cfckit.perms
import cfckit.rings
import cfckit.serialize
import cfckit.tables
import cfckit.words

MODULES = [
    cfckit.classify,
    cfckit.conjecture,
    cfckit.heaps,
    cfckit.perms,
    cfckit.rings,
    cfckit.serialize,
    cfckit.tables,
    cfckit.words,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    failed, attempted = doctest.testmod(module)
    assert attempted > 0
    assert failed == 0
