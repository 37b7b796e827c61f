"""Shared fixtures: parsed example matrices and the random matrix corpus."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from friezecalc import (
    RATIONAL,
    FieldDescriptor,
    build_from_seeds,
    parse_element,
    serialize,
)
from friezecalc.generators import random_frieze_matrix
from friezecalc.matrix import SeedData

FIXTURES = Path(__file__).parent / "fixtures"

Q5 = FieldDescriptor(5)


def rat(v) -> object:
    return RATIONAL.element(Fraction(v))


def el5(text: str) -> object:
    return parse_element(text, Q5)


def load_fixture(name: str):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def exm_printed():
    return serialize.matrix_from_json(load_fixture("exm_as_printed.json"))


@pytest.fixture(scope="session")
def exm_corrected():
    return serialize.matrix_from_json(load_fixture("exm_corrected.json"))


@pytest.fixture(scope="session")
def exm_seeds():
    x = tuple(el5(s) for s in ("1", "-2", "6", "2", "1"))
    y = tuple(el5(s) for s in ("2", "1", "-1", "sqrt(5)"))
    return SeedData(x, y)


@pytest.fixture(scope="session")
def const23():
    """The constant frieze matrix with x = 2, y = 3 at size 6."""
    return build_from_seeds(
        SeedData(tuple(rat(2) for _ in range(5)), tuple(rat(3) for _ in range(4)))
    )


@pytest.fixture(scope="session")
def corpus_rational():
    """200 random frieze matrices over Q with n in [3, 12]."""
    rng = random.Random(20240811)
    return [random_frieze_matrix(rng, 3 + i % 10, RATIONAL) for i in range(200)]


@pytest.fixture(scope="session")
def corpus_quadratic():
    """50 random frieze matrices over Q(sqrt(5)) with n in [3, 12]."""
    rng = random.Random(5050)
    return [random_frieze_matrix(rng, 3 + i % 10, Q5) for i in range(50)]
