"""Keep the usage examples in docstrings honest."""

import doctest

import pytest

from cycone import cohom, cone, exactnum


@pytest.mark.parametrize("module", [exactnum, cohom, cone])
def test_module_doctests(module):
    results = doctest.testmod(module, verbose=False)
    assert results.failed == 0
