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
"""Various types related to diagrams, hook pairs and verification."""

import enum
import typing

import typing_extensions

DEnum = enum.Enum
DIntEnum = enum.IntEnum


class Theorem(DIntEnum):
    """Enum with the verified hook pair identities."""

    HOOK_PAIRS_SR = 1
    HOOK_PAIRS_SQ = 2
    HOOK_PAIRS_SHIFTED = 3

    def __str__(self) -> str:
        """Return string representation."""
        return str(self.value)


class Shape(DEnum):
    """Enum with the diagram shapes which can be constructed."""

    RECT = 'rect'
    SR = 'sr'
    SR_TILDE = 'sr-tilde'
    SQ = 'sq'
    FERRERS = 'ferrers'

    def __str__(self) -> str:
        """Return string representation."""
        return typing.cast(str, self.value)


class SubRegion(DEnum):
    """Enum with the named subregions of a shape."""

    WHOLE = 'whole'
    P = 'p'
    Q_RECT = 'q-rect'
    Q_A = 'qA'
    A2 = 'A2'
    S1 = 'S1'
    S2 = 'S2'
    T1 = 'T1'
    T2 = 'T2'

    def __str__(self) -> str:
        """Return string representation."""
        return typing.cast(str, self.value)


class Cell(typing.NamedTuple):
    """
    Unit cell of a diagram.

    Rows grow downward, columns grow rightward, the base rectangle
    has its top-left cell at (0, 0). Glued copies use negative
    coordinates.
    """

    row: int
    col: int


class HookPair(typing.NamedTuple):
    """Arm-leg pair of a cell measured inside an enclosing region."""

    arm: int
    leg: int


T = typing.TypeVar('T', bound=typing.Hashable)

Parts = typing.Tuple[int, ...]
LegSequence = typing.Tuple[int, ...]
Interval = typing.Tuple[int, int]
Instance = typing.Tuple[typing.Any, ...]
Document = typing.Dict[str, typing.Any]
RowOrder = typing_extensions.Literal['top-down', 'bottom-up']

TDecor = typing.TypeVar('TDecor', bound=typing.Callable[..., typing.Any])


class SweepBounds(typing.NamedTuple):
    """
    Bounds of a sweep instance family.

    Unset bounds give an empty family.
    """

    max_n: typing.Optional[int] = None
    max_k: typing.Optional[int] = None
    max_lambda: typing.Optional[int] = None
    a_span: int = 0
