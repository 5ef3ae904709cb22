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
Verification reports.

A report is the outcome of running a verifier, failing identities are
recorded in it as failures and never raised.
"""
import contextlib
import dataclasses
import logging as LOG
import time
import typing

from .errors import ContainmentError
from .types import Document, Theorem
from .utils import Multiset, dump_document

Subject = typing.Union[Theorem, str]


def encode_value(value: typing.Any) -> typing.Any:
    """Convert value into a plain document value."""
    if isinstance(value, Multiset):
        return value.to_document()
    if isinstance(value, (tuple, list)):
        return [encode_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    return value


@dataclasses.dataclass(frozen=True)
class Failure:
    """Single failed check of a verifier."""

    check: str
    instance: Document
    d: typing.Optional[int]
    lhs: typing.Any
    rhs: typing.Any

    def to_document(self) -> Document:
        """Return failure as document."""
        return {
            'check': self.check,
            'instance': encode_value(self.instance),
            'd': self.d,
            'lhs': encode_value(self.lhs),
            'rhs': encode_value(self.rhs)
        }


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Outcome of a verifier run or of a sweep over many instances."""

    theorem: Subject
    params: Document
    failures: typing.Tuple[Failure, ...] = ()
    instances_checked: int = 1
    instances_failed: int = 0
    checks: int = 0
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        """Check if no failure was recorded."""
        return not self.failures

    def to_document(self, include_timing: bool = False) -> Document:
        """
        Return report as document.

        Timing is left out unless requested, so that documents of
        repeated runs are identical.
        """
        theorem = self.theorem
        document: Document = {
            'theorem': int(theorem) if isinstance(theorem, Theorem)
            else theorem,
            'params': encode_value(self.params),
            'pass': self.passed,
            'failures': [f.to_document() for f in self.failures],
            'instances_checked': self.instances_checked,
            'instances_failed': self.instances_failed,
            'checks': self.checks
        }
        if include_timing:
            document['elapsed_ms'] = round(self.elapsed_ms, 3)
        return document

    def dumps(self, include_timing: bool = False) -> str:
        """Serialize report with sorted keys."""
        return dump_document(self.to_document(include_timing))


class Checker:
    """
    Collects the outcome of the checks of one verifier run.

    Multiset mismatches are recorded by their symmetric difference,
    i.e. `lhs` holds what only the left side has and `rhs` what only
    the right side has. Sequence mismatches are recorded whole.
    """

    def __init__(self, theorem: Subject, params: Document):
        """Start collecting checks."""
        self.theorem = theorem
        self.params = params
        self.failures: typing.List[Failure] = []
        self.checks = 0
        self.__started = time.perf_counter()

    def fail(self, check: str, lhs: typing.Any, rhs: typing.Any,
             d: typing.Optional[int] = None) -> None:
        """Record failure."""
        LOG.debug('Check %s failed for %s (d=%s)', check, self.params, d)
        self.failures.append(
            Failure(check=check, instance=self.params, d=d, lhs=lhs,
                    rhs=rhs))

    def equal(self, check: str, lhs: typing.Any, rhs: typing.Any,
              d: typing.Optional[int] = None) -> bool:
        """Compare two values, recording a failure on mismatch."""
        self.checks += 1
        if isinstance(lhs, Multiset) and isinstance(rhs, Multiset):
            if lhs.total != rhs.total:
                self.fail(check + ':cardinality', lhs.total, rhs.total, d)
                return False
            if lhs != rhs:
                self.fail(check, *lhs.symmetric_difference(rhs), d=d)
                return False
            return True
        if lhs != rhs:
            self.fail(check, lhs, rhs, d)
            return False
        return True

    @contextlib.contextmanager
    def containment(self, check: str,
                    d: typing.Optional[int] = None) -> typing.Iterator[None]:
        """Record failed multiset differences inside the block."""
        try:
            yield
        except ContainmentError as e:
            self.checks += 1
            self.fail(check + ':containment', str(e), None, d)

    def finish(self) -> VerificationReport:
        """Return the report of the collected checks."""
        elapsed = (time.perf_counter() - self.__started) * 1000.0
        return VerificationReport(theorem=self.theorem,
                                  params=self.params,
                                  failures=tuple(self.failures),
                                  instances_failed=1 if self.failures else 0,
                                  checks=self.checks,
                                  elapsed_ms=elapsed)
