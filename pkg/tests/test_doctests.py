"""Run the usage examples embedded in the library docstrings."""

import doctest
import importlib

import pytest

MODULE_NAMES = (
    "fpforms.scalar",
    "fpforms.poly",
    "fpforms.ratfun",
    "fpforms.forms",
    "fpforms.operators",
    "fpforms.poincare",
    "fpforms.cartier",
    "fpforms.parser",
    "fpforms.printer",
)


@pytest.mark.parametrize("name", MODULE_NAMES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    failed, attempted = doctest.testmod(module)
    assert failed == 0
    assert attempted > 0, "module lost its usage examples"
