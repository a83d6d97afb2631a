import pytest

from bracelab.abelian import make_group
from bracelab.brace import LeftBrace, validate_brace
from bracelab.census import enumerate_braces


def cyclic_brace(n: int, c: int) -> LeftBrace:
    """Brace on Z/n with a o b = a + b + c*a*b.

    Only sound when c*c = 0 mod n (so the lambda maps compose right);
    validate_brace rejects anything else, so bad parameters fail loudly.
    """
    group = make_group((n,))
    table = tuple(tuple((a + b + c * a * b) % n for b in range(n)) for a in range(n))
    return validate_brace(group, table, max_order=n)


@pytest.fixture
def b4() -> LeftBrace:
    return cyclic_brace(4, 2)


@pytest.fixture
def b9() -> LeftBrace:
    return cyclic_brace(9, 3)


@pytest.fixture
def triv6() -> LeftBrace:
    return LeftBrace.trivial(make_group((6,)))


@pytest.fixture(scope="session")
def census():
    """Session-wide census cache; enumeration is deterministic so sharing is safe."""
    cache: dict[int, object] = {}

    def get(order: int, slow: bool = False):
        if order not in cache:
            cache[order] = enumerate_braces(order, slow=slow)
        return cache[order]

    return get
