import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from singlehead.formula import Clause, Formula, Universe, letters

CORPUS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")


@pytest.fixture(scope="session")
def corpus_dir():
    return os.path.abspath(CORPUS_DIR)


@st.composite
def formulas(draw, max_vars=5, max_clauses=6, max_body=3):
    """Random normalized formulas for property tests."""
    nvars = draw(st.integers(min_value=1, max_value=max_vars))
    universe = Universe(letters(nvars))
    nclauses = draw(st.integers(min_value=0, max_value=max_clauses))
    clauses = []
    for _ in range(nclauses):
        head = draw(st.integers(min_value=0, max_value=nvars - 1))
        others = [i for i in range(nvars) if i != head]
        body = 0
        for v in draw(st.sets(st.sampled_from(others), min_size=1,
                              max_size=min(max_body, len(others)))
                      if others else st.just(set())):
            body |= 1 << v
        if body:
            clauses.append(Clause(head, body))
    return Formula(universe, clauses)
