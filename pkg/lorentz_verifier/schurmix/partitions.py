"""Integer partitions bounded by a width e."""

from dataclasses import dataclass
from typing import Any, Iterator

from ..errors import VerifierInputError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence e >= parts[0] >= parts[1] >= ... > 0.

    Trailing zeros are dropped on construction so (2, 1, 0) == (2, 1).
    """

    parts: tuple[int, ...]
    e: int

    def __post_init__(self):
        if isinstance(self.e, bool) or not isinstance(self.e, int) or self.e < 1:
            raise VerifierInputError("e must be a positive integer", "e")
        parts = []
        for p in self.parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 0:
                raise VerifierInputError(f"invalid part {p!r}", "parts")
            parts.append(p)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise VerifierInputError(f"parts {tuple(parts)} are not weakly decreasing", "parts")
        while parts and parts[-1] == 0:
            parts.pop()
        if parts and parts[0] > self.e:
            raise VerifierInputError(f"largest part {parts[0]} exceeds e = {self.e}", "parts")
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def from_json(cls, data: Any) -> "Partition":
        if not isinstance(data, dict) or "parts" not in data or "e" not in data:
            raise VerifierInputError("partition must be an object with 'parts' and 'e'",
                                     "partition")
        parts = data["parts"]
        if not isinstance(parts, list):
            raise VerifierInputError("'parts' must be a list", "parts")
        return cls(tuple(parts), data["e"])

    @classmethod
    def parse(cls, text: str, e: int) -> "Partition":
        """Read a comma separated list such as ``"2,1"``."""
        try:
            parts = tuple(int(p) for p in text.split(",") if p.strip())
        except ValueError as exc:
            raise VerifierInputError(f"cannot parse partition {text!r}", "partition") from exc
        return cls(parts, e)

    def to_json(self) -> dict[str, Any]:
        return {"parts": list(self.parts), "e": self.e}

    @property
    def size(self) -> int:
        """|lambda|."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> tuple[int, ...]:
        """Column lengths of the Young diagram."""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))

    def __str__(self) -> str:
        return f"({','.join(str(p) for p in self.parts)})"


def column(k: int, e: int) -> Partition:
    """(1, ..., 1) with k ones."""
    return Partition((1,) * k, e)


def partitions_of(size: int, max_part: int,
                  max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``size`` with parts at most ``max_part``, largest first."""
    if size == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest_length = None if max_length is None else max_length - 1
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, first, rest_length):
            yield (first,) + rest


def bounded_partitions(max_size: int, e: int) -> list[Partition]:
    """Every nonempty partition with |lambda| <= max_size and parts at most e."""
    return [Partition(parts, e)
            for size in range(1, max_size + 1)
            for parts in partitions_of(size, e)]
