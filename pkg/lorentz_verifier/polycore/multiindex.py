"""Multi-index enumeration in a fixed, documented order."""

from math import factorial, prod
from typing import Iterator, Sequence

MultiIndex = tuple[int, ...]


def compositions(nvars: int, total: int) -> Iterator[MultiIndex]:
    """All ``alpha`` in N^nvars with ``|alpha| = total``, descending lex order."""
    if nvars == 0:
        if total == 0:
            yield ()
        return
    if nvars == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(nvars - 1, total - first):
            yield (first,) + rest


def multi_indices_up_to(nvars: int, max_total: int) -> Iterator[MultiIndex]:
    """All ``alpha`` with ``|alpha| <= max_total``, by total then descending lex."""
    for total in range(max_total + 1):
        yield from compositions(nvars, total)


def sub_indices(alpha: MultiIndex) -> Iterator[MultiIndex]:
    """All ``beta <= alpha`` componentwise."""
    if not alpha:
        yield ()
        return
    for head in range(alpha[0] + 1):
        for rest in sub_indices(alpha[1:]):
            yield (head,) + rest


def unit(nvars: int, i: int) -> MultiIndex:
    return tuple(1 if j == i else 0 for j in range(nvars))


def add(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    return tuple(x - y for x, y in zip(a, b))


def multi_factorial(alpha: Sequence[int]) -> int:
    return prod(factorial(a) for a in alpha)


def multinomial(alpha: Sequence[int]) -> int:
    return factorial(sum(alpha)) // multi_factorial(alpha)
