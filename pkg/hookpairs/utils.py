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
"""Utility functions."""
import collections
import collections.abc
import json
import logging as LOG
import re
import typing

from .errors import ContainmentError, LiteralParseError
from .types import LegSequence, Parts, T


class Multiset(typing.Mapping[T, int]):
    """
    Immutable multiset mapping elements to positive multiplicities.

    Union (``+``) adds multiplicities, difference (``-``) requires
    containment and raises ContainmentError otherwise.
    """
    __counts: typing.Dict[T, int]

    def __init__(self, elements: typing.Iterable[T] = (),
                 counts: typing.Optional[typing.Mapping[T, int]] = None) \
            -> None:
        """Construct multiset from elements and/or a count mapping."""
        counter: typing.Counter[T] = collections.Counter(elements)
        if counts:
            for element, count in counts.items():
                if count < 0:
                    raise ValueError(
                        f'Negative multiplicity {count} of {element!r}')
                counter[element] += count
        self.__counts = {e: c for e, c in counter.items() if c > 0}

    def __getitem__(self, element: T) -> int:
        """Return multiplicity of element."""
        return self.__counts[element]

    def __iter__(self) -> typing.Iterator[T]:
        """Return iterator over distinct elements."""
        return iter(self.__counts)

    def __len__(self) -> int:
        """Return number of distinct elements."""
        return len(self.__counts)

    def __eq__(self, other: object) -> bool:
        """Compare with another multiset or mapping."""
        if not isinstance(other, collections.abc.Mapping):
            return NotImplemented
        return self.__counts == {e: c for e, c in other.items() if c}

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return multiset representation."""
        return f'<{self.__class__.__name__} {self.to_document()}>'

    def __add__(self, other: 'Multiset[T]') -> 'Multiset[T]':
        """Return multiset union adding multiplicities."""
        return Multiset(counts=collections.Counter(self.__counts)
                        + collections.Counter(dict(other.items())))

    def __sub__(self, other: 'Multiset[T]') -> 'Multiset[T]':
        """Return multiset difference, other must be contained in self."""
        if not other <= self:
            raise ContainmentError(
                f'Cannot subtract {other.to_document()} '
                f'from {self.to_document()}')
        return Multiset(counts={
            e: c - other.count(e)
            for e, c in self.__counts.items()
        })

    def __le__(self, other: 'Multiset[T]') -> bool:
        """Check containment in another multiset."""
        return all(c <= other.count(e) for e, c in self.__counts.items())

    def count(self, element: T) -> int:
        """Return multiplicity of element, 0 if absent."""
        return self.__counts.get(element, 0)

    @property
    def total(self) -> int:
        """Return total multiplicity."""
        return sum(self.__counts.values())

    def symmetric_difference(self, other: 'Multiset[T]') \
            -> typing.Tuple['Multiset[T]', 'Multiset[T]']:
        """Return the parts of self and other not matched by each other."""
        mine = collections.Counter(self.__counts)
        theirs = collections.Counter(dict(other.items()))
        return Multiset(counts=mine - theirs), Multiset(counts=theirs - mine)

    def to_document(self) -> typing.List[typing.List[int]]:
        """
        Serialize to sorted list of entries.

        Integer elements become ``[value, count]``, tuple elements
        (e.g. hook pairs) become ``[arm, leg, count]``.
        """
        result = []
        for element in sorted(self.__counts):  # type: ignore[type-var]
            if isinstance(element, tuple):
                result.append([*element, self.__counts[element]])
            else:
                result.append([element, self.__counts[element]])
        return result


def parse_int_list(literal: str) -> typing.Tuple[int, ...]:
    """Parse comma separated list of integers, empty string is empty."""
    text = literal.strip()
    if not text:
        return ()
    try:
        return tuple(int(token) for token in text.split(','))
    except ValueError:
        raise LiteralParseError(f'Invalid integer list: {literal!r}')


def parse_partition_literal(literal: str) -> Parts:
    """Parse partition literal 'a,b,c'."""
    return parse_int_list(literal)


def parse_sequence_literal(literal: str) -> LegSequence:
    """Parse leg sequence literal '0,1,2'."""
    return parse_int_list(literal)


def parse_staircase_literal(literal: str) \
        -> typing.Tuple[typing.Tuple[int, ...], typing.Tuple[int, ...]]:
    """Parse staircase literal 'v:2,1,2;h:1,2' into (v, h)."""
    LOG.debug('PARSING STAIRCASE FROM: %s', literal)
    matches = re.fullmatch(r'\s*v:([^;]*)(?:;\s*h:([^;]*))?\s*', literal)
    if not matches:
        raise LiteralParseError(f'Invalid staircase literal: {literal!r}')
    return (parse_int_list(matches.group(1)),
            parse_int_list(matches.group(2) or ''))


def format_sequence(sequence: typing.Iterable[int]) -> str:
    """Format integer sequence as comma separated list."""
    return ','.join(str(x) for x in sequence)


def dump_document(document: typing.Any) -> str:
    """Serialize document with sorted keys and compact separators."""
    return json.dumps(document, sort_keys=True, separators=(',', ':'))
