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
Partitions, Frobenius coordinates and partition enumerators.

Parts are accessed 1-indexed through `Partition.part`, which returns 0
beyond the length of the partition.
"""
import dataclasses
import itertools
import logging as LOG
import typing

from .errors import BoxViolationError, InvalidPartitionError
from .types import Parts


@dataclasses.dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive parts."""

    parts: Parts = ()

    def __post_init__(self) -> None:
        """Validate parts."""
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if any(p < 1 for p in parts):
            raise InvalidPartitionError(
                f'Partition parts must be positive: {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionError(
                f'Partition parts must be weakly decreasing: {parts}')

    def __repr__(self) -> str:
        """Return instance representation."""
        return f'<{type(self).__name__} {self.parts}>'

    def __len__(self) -> int:
        """Return length of the partition."""
        return len(self.parts)

    def __iter__(self) -> typing.Iterator[int]:
        """Return iterator over parts."""
        return iter(self.parts)

    def __bool__(self) -> bool:
        """Check if partition is non-empty."""
        return bool(self.parts)

    def part(self, i: int) -> int:
        """Return part i (1-indexed), 0 beyond the length."""
        if i < 1:
            raise IndexError(f'Partition parts are 1-indexed, got {i}')
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def length(self) -> int:
        """Return number of parts."""
        return len(self.parts)

    @property
    def size(self) -> int:
        """Return sum of parts."""
        return sum(self.parts)

    @property
    def first(self) -> int:
        """Return largest part, 0 for the empty partition."""
        return self.part(1) if self.parts else 0

    def is_strict(self) -> bool:
        """Check if parts are strictly decreasing."""
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def fits(self, n: int, k: int) -> bool:
        """Check if partition fits into the n x k rectangle."""
        return n >= 0 and k >= 0 and self.length <= n and self.first <= k

    def check_box(self, n: int, k: int) -> None:
        """Raise BoxViolationError unless partition fits the n x k box."""
        if not self.fits(n, k):
            raise BoxViolationError(n, k, self.parts)


@dataclasses.dataclass(frozen=True)
class FrobeniusForm:
    """Arm and leg lengths of the diagonal cells of a partition."""

    arms: Parts = ()
    legs: Parts = ()

    def __post_init__(self) -> None:
        """Validate arms and legs."""
        object.__setattr__(self, 'arms', tuple(self.arms))
        object.__setattr__(self, 'legs', tuple(self.legs))
        if len(self.arms) != len(self.legs):
            raise InvalidPartitionError(
                f'Frobenius arms {self.arms} and legs {self.legs} '
                f'differ in length')
        for name, values in (('arms', self.arms), ('legs', self.legs)):
            if any(x < 0 for x in values) \
                    or any(a <= b for a, b in zip(values, values[1:])):
                raise InvalidPartitionError(
                    f'Frobenius {name} must be strictly decreasing '
                    f'and nonnegative: {values}')

    def __repr__(self) -> str:
        """Return Frobenius notation."""
        arms = ','.join(str(a) for a in self.arms)
        legs = ','.join(str(b) for b in self.legs)
        return f'({arms}|{legs})'

    @property
    def rank(self) -> int:
        """Return number of diagonal cells."""
        return len(self.arms)


def make_partition(parts: typing.Iterable[int]) -> Partition:
    """Make partition from parts, validating them."""
    return Partition(tuple(parts))


def conjugate(mu: Partition) -> Partition:
    """Return the conjugate partition (transposed diagram)."""
    return Partition(
        tuple(sum(1 for p in mu if p >= j) for j in range(1, mu.first + 1)))


def to_frobenius(mu: Partition) -> FrobeniusForm:
    """Return Frobenius coordinates of partition."""
    rank = sum(1 for i, p in enumerate(mu, start=1) if p >= i)
    mu_conjugate = conjugate(mu)
    return FrobeniusForm(
        arms=tuple(mu.part(i) - i for i in range(1, rank + 1)),
        legs=tuple(mu_conjugate.part(i) - i for i in range(1, rank + 1)))


def from_frobenius(form: FrobeniusForm) -> Partition:
    """Return the partition with given diagonal hook data."""
    rank = form.rank
    parts = [alpha + i for i, alpha in enumerate(form.arms, start=1)]
    if rank:
        # Rows below the diagonal only meet the first `rank` columns,
        # column j has length legs[j] + j.
        column_lengths = [beta + j for j, beta in
                          enumerate(form.legs, start=1)]
        for i in range(rank + 1, column_lengths[0] + 1):
            parts.append(sum(1 for c in column_lengths if c >= i))
    return Partition(tuple(parts))


def is_doubled_shifted(mu: Partition) -> bool:
    """Check if partition has Frobenius form (a | a - 1)."""
    form = to_frobenius(mu)
    return all(beta == alpha - 1 for alpha, beta in zip(form.arms, form.legs))


def doubled_shifted(lam: Partition) -> Partition:
    """
    Return the doubled shifted partition of a strict partition.

    This is the partition (l_1, ..., l_s | l_1 - 1, ..., l_s - 1)
    in Frobenius notation.
    """
    if not lam.is_strict():
        raise InvalidPartitionError(
            f'Partition must be strict: {lam.parts}')
    return from_frobenius(
        FrobeniusForm(arms=lam.parts, legs=tuple(x - 1 for x in lam)))


def _graded_key(mu: Partition) -> typing.Tuple[int, Parts]:
    """Order by size, then reverse lexicographically."""
    return mu.size, tuple(-p for p in mu)


def _box_parts(n: int, k: int) -> typing.Iterator[Parts]:
    if n == 0 or k == 0:
        yield ()
        return
    yield ()
    for first in range(1, k + 1):
        for rest in _box_parts(n - 1, first):
            yield (first, ) + rest


def partitions_in_box(n: int, k: int) -> typing.Iterator[Partition]:
    """
    Yield every partition fitting in the n x k box exactly once.

    Partitions are ordered by size, and partitions of equal size in
    reverse lexicographic order, e.g. (), (1), (2), (1,1), (2,1), (2,2).
    """
    if n < 0 or k < 0:
        return
    LOG.debug('Enumerating partitions in %dx%d box', n, k)
    yield from sorted((Partition(p) for p in _box_parts(n, k)),
                      key=_graded_key)


def strict_partitions_max(m: int) -> typing.Iterator[Partition]:
    """Yield every strict partition with largest part at most m."""
    if m < 0:
        return
    result = []
    for count in range(m + 1):
        for chosen in itertools.combinations(range(m, 0, -1), count):
            result.append(Partition(chosen))
    yield from sorted(result, key=_graded_key)
