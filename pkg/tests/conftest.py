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
import importlib
import typing

import pytest
from hypothesis import settings

from hookpairs import Theorem, VerificationReport
from hookpairs.report import Failure
from hookpairs.types import Instance

DEFAULT_SEED = 20240917

settings.register_profile('hookpairs', derandomize=True, deadline=None)
settings.load_profile('hookpairs')


def pytest_addoption(parser: pytest.Parser) -> None:
    """Register the seed of the randomized test suites."""
    parser.addoption('--seed', action='store', type=int,
                     default=DEFAULT_SEED,
                     help='Seed of the randomized test suites')


@pytest.fixture
def seed(request: pytest.FixtureRequest) -> int:
    """Return the seed of the randomized test suites."""
    return int(request.config.getoption('--seed', default=DEFAULT_SEED))


def _failing_verify(task: typing.Tuple[int, Instance]) -> VerificationReport:
    """Fail every box instance with n >= 1 and non-empty mu."""
    number, (n, k, mu) = task
    params = {'n': n, 'k': k, 'mu': list(mu.parts)}
    failures: typing.Tuple[Failure, ...] = ()
    if n >= 1 and mu:
        failures = (Failure(check='direct', instance=params, d=None,
                            lhs=[[0, 0, 1]], rhs=[]), )
    return VerificationReport(theorem=Theorem(number), params=params,
                              failures=failures,
                              instances_failed=1 if failures else 0,
                              checks=1)


@pytest.fixture
def failing_sweep(monkeypatch: pytest.MonkeyPatch) -> None:
    """Make sweeps of box theorems fail on every non-empty mu."""
    # the package re-exports the sweep function under the module's name
    monkeypatch.setattr(importlib.import_module('hookpairs.sweep'),
                        '_verify', _failing_verify)
