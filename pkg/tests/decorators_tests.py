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
import functools
import typing

import pytest

from hookpairs import PreconditionError, Theorem
from hookpairs import instances, theorem
from hookpairs import verify_theorem1, verify_theorem2, verify_theorem3
from hookpairs.decorator_utils import get_decor, get_instances_decor, \
    get_theorem_decor, get_verifier, set_decor
from hookpairs.identities import box_family, shifted_family


def test_verifier_decorators() -> None:
    """
    Check decor values of the registered verifiers.
    """
    assert get_theorem_decor(verify_theorem1) == Theorem.HOOK_PAIRS_SR
    assert get_theorem_decor(verify_theorem2) == Theorem.HOOK_PAIRS_SQ
    assert get_theorem_decor(verify_theorem3) == Theorem.HOOK_PAIRS_SHIFTED

    assert get_instances_decor(verify_theorem1) is box_family
    assert get_instances_decor(verify_theorem2) is box_family
    assert get_instances_decor(verify_theorem3) is shifted_family

    assert get_theorem_decor(box_family) is None


def test_verifier_registry() -> None:
    """
    """
    assert get_verifier(Theorem.HOOK_PAIRS_SR) is verify_theorem1
    assert get_verifier(2) is verify_theorem2  # type: ignore
    assert get_verifier(Theorem(3)) is verify_theorem3

    with pytest.raises(PreconditionError):
        get_verifier(7)  # type: ignore


def test_decor_wrapped_function() -> None:
    """
    Check that decorating a wrapper does not change the wrapped function.
    """
    def verifier() -> None:
        pass

    set_decor(verifier, 'theorem', Theorem.HOOK_PAIRS_SR)

    @functools.wraps(verifier)
    def wrapper() -> None:
        verifier()

    set_decor(wrapper, 'instances', box_family)

    assert get_decor(wrapper, 'theorem') == Theorem.HOOK_PAIRS_SR
    assert get_decor(wrapper, 'instances') is box_family
    assert get_decor(verifier, 'instances') is None


def test_decorators_on_class() -> None:
    """
    """
    with pytest.raises(TypeError) as e:

        @theorem(Theorem.HOOK_PAIRS_SR)
        class Verifier:
            pass

    assert str(e.value) == \
        "@theorem decorator can only be applied to functions."

    with pytest.raises(TypeError) as e:

        @instances(box_family)
        class Family:
            pass

    assert str(e.value) == \
        "@instances decorator can only be applied to functions."


def test_invalid_decorator_arguments() -> None:
    """
    """
    def verifier() -> None:
        pass

    with pytest.raises(TypeError):
        theorem(7)(verifier)

    with pytest.raises(TypeError):
        instances(typing.cast(typing.Any, 5))(verifier)

    assert get_theorem_decor(verifier) is None
    assert get_instances_decor(verifier) is None
