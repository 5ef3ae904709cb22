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
"""Decorators implementation.

Each verifier function has a `__hookpairs__` property storing
a dictionary with decorator values provided by decorators
added to the function.
"""

import inspect
import typing

from .decorator_utils import Family, register_verifier, set_decor
from .types import TDecor, Theorem


def theorem(number: typing.Union[Theorem, int]) \
        -> typing.Callable[[TDecor], TDecor]:
    """
    Theorem verifier decorator.

    Registers the decorated function as the verifier of the theorem,
    the sweep harness looks verifiers up by theorem number.
    """
    def theorem_decorator(t: TDecor) -> TDecor:
        if inspect.isclass(t):
            raise TypeError("@theorem decorator can only be "
                            "applied to functions.")
        try:
            value = Theorem(number)
        except ValueError:
            raise TypeError(f'Unknown theorem in @theorem decorator: '
                            f'{number}')
        set_decor(t, 'theorem', value)
        register_verifier(value, t)
        return t

    return theorem_decorator


def instances(family: Family) -> typing.Callable[[TDecor], TDecor]:
    """Instance family decorator, the family yields verifier arguments."""
    def instances_decorator(t: TDecor) -> TDecor:
        if inspect.isclass(t):
            raise TypeError("@instances decorator can only be "
                            "applied to functions.")
        if not callable(family):
            raise TypeError("Family in @instances decorator must be "
                            "callable.")
        set_decor(t, 'instances', family)
        return t

    return instances_decorator
