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
"""Decorator utility functions."""
import typing

from .errors import PreconditionError
from .types import Instance, SweepBounds, Theorem

DECOR_KEY = '__hookpairs__'

Verifier = typing.Callable[..., typing.Any]
Family = typing.Callable[[SweepBounds], typing.Iterator[Instance]]

# Verifiers by theorem, filled in by the @theorem decorator
VERIFIERS: typing.Dict[Theorem, Verifier] = {}


def set_decor(t: typing.Any, name: str, value: typing.Any) -> None:
    """Decorate a function by storing the value under specific key."""
    if hasattr(t, '__wrapped__') and hasattr(t.__wrapped__, DECOR_KEY):
        setattr(t, DECOR_KEY, dict(getattr(t.__wrapped__, DECOR_KEY)))

    if not hasattr(t, DECOR_KEY):
        setattr(t, DECOR_KEY, {})

    getattr(t, DECOR_KEY)[name] = value


def get_decor(t: typing.Any, name: str) -> typing.Optional[typing.Any]:
    """
    Retrieve a named decorator value from a function.

    Args:
        t (callable): Decorated function
        name (str): Name of the key

    Returns:
        object: any value assigned to the name key

    """
    if hasattr(t, DECOR_KEY) and name in getattr(t, DECOR_KEY):
        return getattr(t, DECOR_KEY)[name]

    return None


def get_theorem_decor(t: typing.Any) -> typing.Optional[Theorem]:
    """Return theorem decor value."""
    return typing.cast(typing.Optional[Theorem], get_decor(t, 'theorem'))


def get_instances_decor(t: typing.Any) -> typing.Optional[Family]:
    """Return instance family decor value."""
    return typing.cast(typing.Optional[Family], get_decor(t, 'instances'))


def register_verifier(theorem: Theorem, verifier: Verifier) -> None:
    """Register verifier of theorem."""
    VERIFIERS[theorem] = verifier


def get_verifier(theorem: Theorem) -> Verifier:
    """Return registered verifier of theorem."""
    try:
        return VERIFIERS[Theorem(theorem)]
    except (KeyError, ValueError):
        raise PreconditionError(f'No verifier registered for {theorem}')
