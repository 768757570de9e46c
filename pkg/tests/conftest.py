import pytest

from doublecyclic import CodeParams, GeneratorTriple, validate
from doublecyclic.gf2poly import parse


@pytest.fixture
def params33():
    return CodeParams(3, 3)


@pytest.fixture
def instance_w(params33):
    """The worked instance: r=s=3, b=x+1, ell=1, a=x^2+x+1."""
    return validate(GeneratorTriple(params33, parse("x+1"), parse("1"), parse("x^2+x+1")))


@pytest.fixture
def separable_code(params33):
    return validate(GeneratorTriple(params33, parse("x+1"), parse("0"), parse("x+1")))


@pytest.fixture
def full_code(params33):
    return validate(GeneratorTriple(params33, parse("1"), parse("0"), parse("1")))


@pytest.fixture
def zero_code(params33):
    return validate(
        GeneratorTriple(params33, parse("x^3+1"), parse("0"), parse("x^3+1"))
    )
