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
Exhaustive verification of a theorem over a bounded instance family.

Instances are enumerated in a fixed order and results are consumed in
that order whatever the number of workers, so the summary only depends
on the theorem and the bounds.
"""
import logging as LOG
import time
import typing
from multiprocessing import Pool

# Importing identities registers the verifiers
from . import identities  # noqa: F401
from .decorator_utils import get_instances_decor, get_verifier
from .errors import PreconditionError
from .report import VerificationReport
from .types import Instance, SweepBounds, Theorem


def instance_family(theorem: Theorem,
                    bounds: SweepBounds) -> typing.Iterator[Instance]:
    """Return the instances of the theorem's family within bounds."""
    family = get_instances_decor(get_verifier(theorem))
    if family is None:
        raise PreconditionError(f'No instance family for theorem {theorem}')
    return family(bounds)


def _verify(task: typing.Tuple[int, Instance]) -> VerificationReport:
    """Run verifier on one instance (executed in worker processes)."""
    theorem, instance = task
    return typing.cast(VerificationReport,
                       get_verifier(Theorem(theorem))(*instance))


def _bounds_params(theorem: Theorem, bounds: SweepBounds) -> typing.Dict[
        str, typing.Optional[int]]:
    if theorem is Theorem.HOOK_PAIRS_SHIFTED:
        return {'max_lambda': bounds.max_lambda, 'a_span': bounds.a_span}
    return {'max_n': bounds.max_n, 'max_k': bounds.max_k}


def _check_bounds(theorem: Theorem, bounds: SweepBounds) -> None:
    for name, value in _bounds_params(theorem, bounds).items():
        if value is not None and value < 0:
            raise PreconditionError(
                f'Sweep bound {name} must be non-negative: {value}')


def sweep(theorem: typing.Union[Theorem, int],
          bounds: SweepBounds,
          jobs: int = 1) -> VerificationReport:
    """
    Verify theorem on every instance of its family within bounds.

    With jobs > 1 the instances are verified by a process pool. The
    failures of the first failing instance, in enumeration order, are
    reported as the minimal counterexample. Negative bounds raise
    PreconditionError.
    """
    try:
        theorem = Theorem(theorem)
    except ValueError:
        raise PreconditionError(f'Unknown theorem: {theorem}')
    if jobs < 1:
        raise PreconditionError(f'Number of jobs must be positive: {jobs}')
    _check_bounds(theorem, bounds)
    started = time.perf_counter()
    tasks = ((int(theorem), instance)
             for instance in instance_family(theorem, bounds))

    checked = 0
    failed = 0
    checks = 0
    counterexample: typing.Optional[VerificationReport] = None

    def consume(reports: typing.Iterable[VerificationReport]) -> None:
        nonlocal checked, failed, checks, counterexample
        for report in reports:
            checked += 1
            checks += report.checks
            if not report.passed:
                failed += 1
                if counterexample is None:
                    LOG.info('Counterexample for theorem %s: %s', theorem,
                             report.params)
                    counterexample = report

    if jobs == 1:
        consume(map(_verify, tasks))
    else:
        with Pool(jobs) as pool:
            consume(pool.imap(_verify, tasks, chunksize=16))

    elapsed = (time.perf_counter() - started) * 1000.0
    LOG.info('Theorem %s: %d instances, %d failed, %.1f ms with %d jobs',
             theorem, checked, failed, elapsed, jobs)
    return VerificationReport(
        theorem=theorem,
        params=_bounds_params(theorem, bounds),
        failures=counterexample.failures if counterexample else (),
        instances_checked=checked,
        instances_failed=failed,
        checks=checks,
        elapsed_ms=elapsed)
