# -*- coding: utf-8 -*-
#
# Copyright 2023 The hookpairs authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Staircases, broken column leg sequences and the master bijection.

A staircase is the boundary between a region on its left and a region
on its right, made of vertical pieces v_1, ..., v_p and horizontal
pieces h_1, ..., h_{p-1}, going up and right. Rows are numbered from
the bottom, row r lies at horizontal offset X_r (the sum of the
horizontal pieces below it).

The master bijection maps the legs of the left broken column in
distance d, read bottom to top, onto the legs of the right broken
column, read top to bottom:

    split into maximal runs of consecutive integers (stacks),
    cascade the entries of each stack which are smaller than the
    minimum of the next stack into the next stack,
    read the stacks from the last to the first.
"""
import bisect
import dataclasses
import itertools
import logging as LOG
import typing

from .errors import MalformedSequenceError, PreconditionError
from .partitions import Partition
from .report import Checker, VerificationReport
from .types import Interval, LegSequence, Parts
from .utils import Multiset


def _check_distance(d: int) -> None:
    if d < 0:
        raise PreconditionError(f'Distance must be nonnegative: {d}')


@dataclasses.dataclass(frozen=True)
class Staircase:
    """
    Staircase with vertical pieces `v` and horizontal pieces `h`.

    All pieces are positive and `len(h) == len(v) - 1`. The empty
    staircase (no pieces) bounds a diagram without rows.
    """

    v: Parts = ()
    h: Parts = ()

    def __post_init__(self) -> None:
        """Validate pieces."""
        object.__setattr__(self, 'v', tuple(self.v))
        object.__setattr__(self, 'h', tuple(self.h))
        if len(self.h) != max(len(self.v) - 1, 0):
            raise PreconditionError(
                f'Staircase needs one horizontal piece less than vertical '
                f'pieces: v={self.v}, h={self.h}')
        if any(x < 1 for x in self.v + self.h):
            raise PreconditionError(
                f'Staircase pieces must be positive: v={self.v}, h={self.h}')

    def __repr__(self) -> str:
        """Return staircase literal."""
        v = ','.join(str(x) for x in self.v)
        h = ','.join(str(x) for x in self.h)
        return f'<{type(self).__name__} v:{v};h:{h}>'

    @classmethod
    def build(cls, v: typing.Sequence[int],
              h: typing.Sequence[int]) -> 'Staircase':
        """
        Make normalized staircase from pieces which may be zero.

        Zero horizontal pieces merge their neighbouring vertical pieces,
        zero vertical pieces merge their neighbouring horizontal pieces.
        """
        if len(h) != max(len(v) - 1, 0) or any(x < 0 for x in (*v, *h)):
            raise PreconditionError(f'Invalid staircase pieces: v={v}, h={h}')
        offsets = itertools.accumulate((0, *h))
        return cls.from_profile([
            x for height, x in zip(v, offsets) for _ in range(height)
        ])

    @classmethod
    def from_profile(cls, profile: typing.Sequence[int]) -> 'Staircase':
        """Make staircase from the weakly increasing row offsets X_r."""
        if any(a > b for a, b in zip(profile, profile[1:])):
            raise PreconditionError(
                f'Staircase profile must be weakly increasing: {profile}')
        groups = [(x, len(list(rows)))
                  for x, rows in itertools.groupby(profile)]
        return cls(v=tuple(size for _, size in groups),
                   h=tuple(b - a for (a, _), (b, _) in zip(groups,
                                                           groups[1:])))

    @property
    def pieces(self) -> int:
        """Return number p of vertical pieces."""
        return len(self.v)

    @property
    def height(self) -> int:
        """Return total height n."""
        return sum(self.v)

    @property
    def profile(self) -> typing.List[int]:
        """Return row offsets X_r, bottom to top."""
        offsets = itertools.accumulate((0, *self.h))
        return [x for height, x in zip(self.v, offsets) for _ in range(height)]

    @property
    def offsets(self) -> typing.List[int]:
        """Return offsets H_i of the vertical pieces, bottom to top."""
        return list(itertools.accumulate((0, *self.h)))


def staircase_of(mu: Partition, n: int) -> Staircase:
    """
    Return the staircase separating a copy of mu from the rest of n rows.

    Row r from the bottom is at offset X_r = mu_{n-r}.
    """
    mu.check_box(n, mu.first)
    return Staircase.from_profile([mu.part(n - r) for r in range(n)])


def left_legs(staircase: Staircase, d: int) -> LegSequence:
    """
    Return the legs of the left broken column in distance d.

    The sequence is read bottom to top, entry r counts the rows below
    row r which reach at least X_r - d.
    """
    _check_distance(d)
    profile = staircase.profile
    return tuple(r - bisect.bisect_left(profile, x - d)
                 for r, x in enumerate(profile))


def right_legs(staircase: Staircase, d: int) -> LegSequence:
    """
    Return the legs of the right broken column in distance d.

    The sequence is read top to bottom, entry r counts the rows above
    row r which start at most at X_r + d.
    """
    _check_distance(d)
    profile = staircase.profile
    return tuple(
        bisect.bisect_right(profile, profile[r] + d) - 1 - r
        for r in reversed(range(len(profile))))


@dataclasses.dataclass(frozen=True)
class RunDecomposition:
    """
    Sequence of stacks, each holding consecutive integers low..high.

    `spans` optionally holds the piece indices (j_t, i_t) of the
    staircase each run is made of. Two decompositions compare equal
    when their runs are equal.
    """

    runs: typing.Tuple[Interval, ...] = ()
    spans: typing.Optional[typing.Tuple[Interval, ...]] = \
        dataclasses.field(default=None, compare=False)

    def __post_init__(self) -> None:
        """Validate runs."""
        object.__setattr__(self, 'runs',
                           tuple((lo, hi) for lo, hi in self.runs))
        for lo, hi in self.runs:
            if lo < 0 or lo > hi:
                raise MalformedSequenceError(f'Invalid run ({lo},{hi})')

    def __len__(self) -> int:
        """Return number q of runs."""
        return len(self.runs)

    @property
    def lows(self) -> typing.Tuple[int, ...]:
        """Return the minima m_t."""
        return tuple(lo for lo, _ in self.runs)

    @property
    def highs(self) -> typing.Tuple[int, ...]:
        """Return the maxima M_t."""
        return tuple(hi for _, hi in self.runs)

    def sequence(self) -> LegSequence:
        """Return the runs concatenated in order."""
        return tuple(x for lo, hi in self.runs for x in range(lo, hi + 1))


def mb_split(sequence: typing.Sequence[int]) -> RunDecomposition:
    """Split sequence into maximal runs of consecutive integers."""
    if not sequence:
        return RunDecomposition()
    if sequence[0] != 0:
        raise MalformedSequenceError(
            f'Sequence must start with 0: {list(sequence)}')
    runs = []
    low = 0
    for previous, current in zip(sequence, sequence[1:]):
        if current < 0:
            raise MalformedSequenceError(
                f'Sequence entries must be nonnegative: {list(sequence)}')
        if current <= previous:
            runs.append((low, previous))
            low = current
        elif current != previous + 1:
            raise MalformedSequenceError(
                f'Sequence jumps from {previous} to {current}: '
                f'{list(sequence)}')
    runs.append((low, sequence[-1]))
    return RunDecomposition(tuple(runs))


def mb_cascade(stacks: RunDecomposition) -> RunDecomposition:
    """
    Cascade small entries from each stack into the next one.

    Going from the first stack to the last, the entries of stack t
    which are smaller than the minimum of stack t + 1 move into stack
    t + 1. Stacks (m_t, M_t) become (m_2, M_1), ..., (m_q, M_{q-1}),
    (0, M_q).
    """
    runs = stacks.runs
    if not runs:
        return RunDecomposition()
    if runs[0][0] != 0:
        raise MalformedSequenceError(f'First stack must start at 0: {runs}')
    result = []
    for t, ((_, high), (next_low, _)) in enumerate(zip(runs, runs[1:]),
                                                   start=1):
        # stack t holds 0..M_t here
        if next_low > high:
            raise MalformedSequenceError(
                f'Cascade would empty stack {t} (0,{high}) '
                f'before stack starting at {next_low}')
        result.append((next_low, high))
    result.append((0, runs[-1][1]))
    LOG.debug('Cascaded stacks %s into %s', runs, result)
    return RunDecomposition(tuple(result))


def mb_read(stacks: RunDecomposition) -> LegSequence:
    """Read stacks from the last to the first, each from its minimum up."""
    return tuple(x for lo, hi in reversed(stacks.runs)
                 for x in range(lo, hi + 1))


def master_bijection(sequence: typing.Sequence[int]) -> LegSequence:
    """Map left broken column legs onto right broken column legs."""
    return mb_read(mb_cascade(mb_split(sequence)))


def inverse_master_bijection(sequence: typing.Sequence[int]) -> LegSequence:
    """Undo master_bijection."""
    read = mb_split(sequence).runs
    q = len(read)
    if not q:
        return ()
    # read[s] holds the stack (m_{q-s+1}, M_{q-s}), read[0] is (0, M_q)
    highs = [read[q - t][1] for t in range(1, q + 1)]
    lows = [0] + [read[q - t + 1][0] for t in range(2, q + 1)]
    runs = tuple(zip(lows, highs))
    for t, (lo, hi) in enumerate(runs, start=1):
        if lo > hi:
            raise MalformedSequenceError(
                f'Sequence {list(sequence)} is not a master bijection '
                f'output: stack {t} would be ({lo},{hi})')
    return RunDecomposition(runs).sequence()


def run_bounds_left(staircase: Staircase, d: int) -> RunDecomposition:
    """
    Return the runs of the left legs computed from the pieces.

    Piece i sees pieces J(i)..i, J(i) the first piece whose offset is
    within d of piece i. Consecutive pieces with equal J form one run
    with span (j_t, i_t) = (J, last piece), M_t = v_{j_t} + ... +
    v_{i_t} - 1 and m_t = v_{j_t} + ... + v_{f-1}, f the first piece
    of the run. Piece indices are 1-based.
    """
    _check_distance(d)
    v = staircase.v
    offsets = staircase.offsets
    prefix = [0, *itertools.accumulate(v)]
    runs = []
    spans = []
    first = 1
    for i in range(1, len(v) + 1):
        j = bisect.bisect_left(offsets, offsets[i - 1] - d) + 1
        last = i == len(v)
        next_j = None if last else \
            bisect.bisect_left(offsets, offsets[i] - d) + 1
        if next_j != j:
            runs.append((prefix[first - 1] - prefix[j - 1],
                         prefix[i] - prefix[j - 1] - 1))
            spans.append((j, i))
            first = i + 1
    return RunDecomposition(tuple(runs), tuple(spans))


def run_bounds_right(staircase: Staircase, d: int) -> RunDecomposition:
    """
    Return the runs of the right legs computed from the pieces.

    Piece i sees pieces i..K(i), K(i) the last piece whose offset is
    within d of piece i. Pieces are taken from the top, consecutive
    pieces with equal K form one run. For a run with top piece u and
    bottom piece b the span is (b, K), the run is v_{u+1} + ... + v_K
    up to v_b + ... + v_K - 1. Runs are in reading order, top to
    bottom.
    """
    _check_distance(d)
    v = staircase.v
    offsets = staircase.offsets
    prefix = [0, *itertools.accumulate(v)]
    runs = []
    spans = []
    top = len(v)
    for i in range(len(v), 0, -1):
        k = bisect.bisect_right(offsets, offsets[i - 1] + d)
        next_k = None if i == 1 else \
            bisect.bisect_right(offsets, offsets[i - 2] + d)
        if next_k != k:
            runs.append((prefix[k] - prefix[top],
                         prefix[k] - prefix[i - 1] - 1))
            spans.append((i, k))
            top = i - 1
    return RunDecomposition(tuple(runs), tuple(spans))


def verify_lemma(staircase: Staircase, d: int) -> VerificationReport:
    """
    Check the master bijection and the run bound formulas on staircase.

    The left and right legs must agree as multisets, the master
    bijection must map the left legs exactly onto the right legs and
    back, the piece formulas must reproduce the runs of both leg
    sequences, and the right runs, taken from the bottom, must satisfy
    M~_t = M_t, m~_t = m_{t+1} (m_{q+1} = 0) with equal spans.
    """
    checker = Checker('lemma', {
        'v': list(staircase.v),
        'h': list(staircase.h),
        'd': d
    })
    left = left_legs(staircase, d)
    right = right_legs(staircase, d)
    checker.equal('multiset', Multiset(left), Multiset(right), d)
    checker.equal('bijection', master_bijection(left), right, d)
    checker.equal('inverse', inverse_master_bijection(right), left, d)

    bounds_left = run_bounds_left(staircase, d)
    bounds_right = run_bounds_right(staircase, d)
    checker.equal('runs-left', bounds_left.runs, mb_split(left).runs, d)
    checker.equal('runs-right', bounds_right.runs, mb_split(right).runs, d)

    tilde = bounds_right.runs[::-1]
    checker.equal('run-count', len(tilde), len(bounds_left), d)
    checker.equal('maxima', tuple(hi for _, hi in tilde), bounds_left.highs,
                  d)
    checker.equal('minima', tuple(lo for lo, _ in tilde),
                  bounds_left.lows[1:] + bounds_left.lows[:1], d)
    checker.equal('spans', (bounds_right.spans or ())[::-1],
                  bounds_left.spans, d)
    return checker.finish()
