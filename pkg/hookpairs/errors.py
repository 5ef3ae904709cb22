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
"""Defines various error classes."""
import typing


class HookPairsError(ValueError):
    """
    Base class of all errors raised for invalid input.

    Identity violations found by the verifiers are not errors, they
    are reported in the verification report instead.
    """


class InvalidPartitionError(HookPairsError):
    """Parts are not positive and weakly (or strictly) decreasing."""


class BoxViolationError(HookPairsError):
    """Partition does not fit into the n x k rectangle."""

    def __init__(self, n: int, k: int, parts: typing.Sequence[int]):
        """Construct BoxViolationError.

        Accepts the box and the offending parts.
        """
        self.n = n
        self.k = k
        self.parts = tuple(parts)
        super(BoxViolationError, self).__init__(
            f'Partition {self.parts} does not fit into '
            f'the {n}x{k} rectangle')


class RegionError(HookPairsError):
    """Cell or subregion is not contained in the enclosing region."""


class MalformedSequenceError(HookPairsError):
    """Sequence is outside of the domain of the master bijection."""


class PreconditionError(HookPairsError):
    """Operation precondition does not hold."""


class ContainmentError(HookPairsError):
    """Multiset difference of a multiset which is not contained."""


class LiteralParseError(HookPairsError):
    """Command line literal could not be parsed."""
