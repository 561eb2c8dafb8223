"""First-quadrant lattice walks and their bijection with grid labelings.

A walk of length 3n uses n northeast steps (1,1), n west steps (-1,0)
and n south steps (0,-1), starting and ending at the origin; staying in
the first quadrant is equivalent to every prefix holding at least as
many northeast steps as west steps and as south steps.

Such walks biject with the linear extensions of the three-row grid
poset (see :func:`shrubstat.posets.build_lex_poset`): reading labels
1..3n in order, label i sits in the middle row exactly when step i is
northeast, in the top row when it is west, and in the bottom row when
it is south.  Both directions are implemented and verified against
each other exhaustively in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import GuardExceeded

#: Walks of 6 triples number 835584; beyond that enumeration is refused
#: unless the caller raises the guard.
DEFAULT_MAX_TRIPLES = 6


class Step(Enum):
    """One walk step; values are the single-letter word alphabet."""

    NE = "N"
    W = "W"
    S = "S"


#: Enumeration (and word) order of the alphabet.
STEP_ORDER = (Step.NE, Step.W, Step.S)

Path = tuple[Step, ...]


def path_word(path: Sequence[Step]) -> str:
    return "".join(step.value for step in path)


def path_from_word(word: str) -> Path:
    try:
        return tuple(Step(ch) for ch in word)
    except ValueError:
        raise ValueError(f"step letters must be N, W or S: {word!r}") from None


def is_valid_path(steps: Sequence[Step]) -> bool:
    """Whether steps is a closed first-quadrant walk (prefix conditions
    plus equal step counts)."""
    ne = w = s = 0
    for step in steps:
        if step is Step.NE:
            ne += 1
        elif step is Step.W:
            w += 1
        else:
            s += 1
        if w > ne or s > ne:
            return False
    return ne == w == s


def enumerate_paths(
    n: int,
    *,
    max_triples: int = DEFAULT_MAX_TRIPLES,
    prefix: Sequence[Step] = (),
) -> Iterator[Path]:
    """Yield every valid walk of length 3n once, lexicographically in
    the step order NE < W < S.

    ``prefix`` restricts the stream to walks starting with the given
    steps; the streams over the possible first steps partition the
    enumeration.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > max_triples:
        raise GuardExceeded(
            f"enumerating walks of {3 * n} steps; pass max_triples={n} to allow it"
        )
    steps: list[Step] = [Step(s) for s in prefix]
    if len(steps) > 3 * n:
        raise ValueError("prefix longer than the walk")
    ne = w = s = 0
    for step in steps:
        if step is Step.NE:
            ne += 1
        elif step is Step.W:
            w += 1
        else:
            s += 1
        if w > ne or s > ne:
            return
    if max(ne, w, s) > n:
        return

    def rec(ne: int, w: int, s: int) -> Iterator[Path]:
        if len(steps) == 3 * n:
            yield tuple(steps)
            return
        if ne < n:
            steps.append(Step.NE)
            yield from rec(ne + 1, w, s)
            steps.pop()
        if w < ne:  # w + 1 <= ne keeps the prefix condition
            steps.append(Step.W)
            yield from rec(ne, w + 1, s)
            steps.pop()
        if s < ne:
            steps.append(Step.S)
            yield from rec(ne, w, s + 1)
            steps.pop()

    yield from rec(ne, w, s)


@dataclass(frozen=True)
class RowLabeling:
    """A three-row grid labeling: rows increase left to right and each
    middle entry is below its top and bottom neighbors."""

    top: tuple[int, ...]
    middle: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.middle)
        if len(self.top) != n or len(self.bottom) != n:
            raise ValueError("rows must have equal length")
        everything = self.top + self.middle + self.bottom
        if sorted(everything) != list(range(1, 3 * n + 1)):
            raise ValueError(f"labels must be exactly 1..{3 * n}")
        for row in (self.top, self.middle, self.bottom):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row not increasing: {row}")
        for i in range(n):
            if self.middle[i] > self.top[i] or self.middle[i] > self.bottom[i]:
                raise ValueError(f"column {i}: middle label must be the smallest")

    @property
    def size(self) -> int:
        return len(self.middle)


def path_from_rows(rows: RowLabeling) -> Path:
    """Walk whose i-th step reads off the row containing label i."""
    n = rows.size
    row_of = {}
    for label in rows.middle:
        row_of[label] = Step.NE
    for label in rows.top:
        row_of[label] = Step.W
    for label in rows.bottom:
        row_of[label] = Step.S
    path = tuple(row_of[i] for i in range(1, 3 * n + 1))
    assert is_valid_path(path), "grid constraints guarantee a valid walk"
    return path


def rows_from_path(path: Sequence[Step]) -> RowLabeling:
    """Inverse reading: label i goes to the row named by step i."""
    if not is_valid_path(tuple(Step(s) for s in path)):
        raise ValueError("not a closed first-quadrant walk")
    top: list[int] = []
    middle: list[int] = []
    bottom: list[int] = []
    for i, step in enumerate(path, start=1):
        {Step.W: top, Step.NE: middle, Step.S: bottom}[Step(step)].append(i)
    return RowLabeling(tuple(top), tuple(middle), tuple(bottom))


def rows_from_extension(labels: Sequence[int]) -> RowLabeling:
    """View a grid-poset labeling (word-position indexing) as rows."""
    if len(labels) == 0 or len(labels) % 3 != 0:
        raise ValueError("labeling length must be a positive multiple of 3")
    n = len(labels) // 3
    return RowLabeling(
        top=tuple(labels[3 * i + 1] for i in range(n)),
        middle=tuple(labels[3 * i] for i in range(n)),
        bottom=tuple(labels[3 * i + 2] for i in range(n)),
    )


def extension_from_rows(rows: RowLabeling) -> tuple[int, ...]:
    """Inverse of :func:`rows_from_extension`."""
    out: list[int] = []
    for i in range(rows.size):
        out.extend((rows.middle[i], rows.top[i], rows.bottom[i]))
    return tuple(out)
