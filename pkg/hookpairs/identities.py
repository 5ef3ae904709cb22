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
Leg multisets of broken columns and the hook pair identity verifiers.

Notation: [[N]] is the multiset {0, 1, ..., N - 1}, L(H; d) is the
multiset of legs of the broken column of H in distance d (measured
inside the enclosing region), "fake" legs complete a broken column
beyond the boundary of a partition.

Each verifier checks an identity directly, on the full hook pair
multisets, and through its decomposition into broken columns.
"""
import functools
import logging as LOG
import operator
import typing

from .decorators import instances, theorem
from .errors import PreconditionError
from .partitions import Partition, doubled_shifted, partitions_in_box, \
    strict_partitions_max
from .regions import Region, broken_column, cut_q_a, ferrers, hook_pair, \
    hook_pairs, r_square, rectangle, s_t_decomposition, split_p, \
    split_q_rect, split_sq, sq, sr, sr_tilde
from .report import Checker, VerificationReport
from .staircase_bijection import left_legs, master_bijection, right_legs, \
    staircase_of
from .types import Document, HookPair, Instance, SweepBounds, Theorem
from .utils import Multiset

LegMultiset = Multiset[int]
Side = typing.Sequence[typing.Tuple[Region, Region]]


def interval(size: int) -> LegMultiset:
    """Return [[size]] = {0, 1, ..., size - 1}."""
    if size < 0:
        raise PreconditionError(f'Invalid interval size: {size}')
    return Multiset(range(size))


def _union(multisets: typing.Iterable[LegMultiset]) -> LegMultiset:
    return functools.reduce(operator.add, multisets, Multiset())


def broken_column_legs(region: Region, subregion: Region,
                       d: int) -> LegMultiset:
    """Return L(H; d), legs of the broken column of H measured in G."""
    return Multiset(leg for _, leg in broken_column(region, subregion, d))


def partition_legs(mu: Partition, d: int) -> LegMultiset:
    """Return L(mu; d), legs of the broken column of mu."""
    diagram = ferrers(mu)
    return broken_column_legs(diagram, diagram, d)


def first_index_at_most(mu: Partition, bound: int) -> int:
    """Return min{k : mu_k <= bound}, at most l(mu) + 1."""
    if bound < 0:
        raise PreconditionError(f'Bound must be nonnegative: {bound}')
    return next(i for i in range(1, len(mu) + 2) if mu.part(i) <= bound)


def last_index_at_least(mu: Partition, bound: int) -> int:
    """Return max{k : mu_k >= bound}, 0 if no part reaches bound."""
    if bound < 1:
        raise PreconditionError(f'Bound must be positive: {bound}')
    return sum(1 for p in mu if p >= bound)


def fake_count(mu: Partition, d: int) -> int:
    """Return the number of fake cells of mu's broken column in distance d."""
    return len(mu) + 1 - first_index_at_most(mu, d)


def fake_extended_legs(mu: Partition, d: int) -> LegMultiset:
    """
    Return L_f(mu; d), the broken column of mu completed by fake cells.

    Row i contributes #{i' > i : mu_i' >= mu_i - d}, for rows shorter
    than d + 1 these are the legs of the fake cells.
    """
    if d < 0:
        raise PreconditionError(f'Distance must be nonnegative: {d}')
    parts = mu.parts
    return Multiset(
        sum(1 for lower in parts[i + 1:] if lower >= part - d)
        for i, part in enumerate(parts))


def _check_distance_range(mu: Partition, d: int) -> None:
    if mu and not 0 <= d < mu.first:
        raise PreconditionError(
            f'Distance {d} outside of [0, {mu.first - 1}] for {mu.parts}')


def _box_params(n: int, k: int, mu: Partition) -> Document:
    return {'n': n, 'k': k, 'mu': list(mu.parts)}


def lf_t2(n: int, k: int, mu: Partition, d: int) -> LegMultiset:
    """
    Return L_f(T_2; d).

    These are the legs of the broken column of T_2 (measured inside
    SQ(n, k, mu)) in the rows beside the removed rotated copy of mu,
    completed by [[max{k : mu_k + d >= mu_1}]] fake legs.
    """
    _check_distance_range(mu, d)
    if not mu:
        return Multiset()
    whole = sq(n, k, mu)
    t_2 = s_t_decomposition(n, k, mu).t_2
    beside = t_2.restrict_rows(n - len(mu), n - 1)
    return broken_column_legs(whole, beside, d) \
        + interval(last_index_at_least(mu, mu.first - d))


def _row_wise(checker: Checker, n: int, k: int, mu: Partition) -> None:
    parts = s_t_decomposition(n, k, mu)
    rect = rectangle(n, k)
    whole = sq(n, k, mu)
    for row in range(n):
        checker.equal(f'row-wise:{row}',
                      [hook_pair(rect, c) for c in parts.s_1.row(row)],
                      [hook_pair(whole, c) for c in parts.s_2.row(row)])


def _eq7(checker: Checker, n: int, k: int, mu: Partition, d: int) -> None:
    rect = rectangle(n, k)
    t_1 = s_t_decomposition(n, k, mu).t_1
    covered = last_index_at_least(mu, mu.first - d)
    fake = fake_count(mu, d)
    legs_mu = partition_legs(mu, d)
    legs_t1 = broken_column_legs(rect, t_1, d)
    with checker.containment('T1-legs', d):
        checker.equal('T1-legs', legs_t1, interval(n) - interval(covered), d)
    with checker.containment('eq7', d):
        checker.equal('eq7', legs_mu + legs_t1,
                      (fake_extended_legs(mu, d) + interval(n)) -
                      (interval(fake) + interval(covered)), d)


def _eq8(checker: Checker, n: int, k: int, mu: Partition, d: int) -> None:
    whole = sq(n, k, mu)
    parts = s_t_decomposition(n, k, mu)
    covered = last_index_at_least(mu, mu.first - d)
    fake = fake_count(mu, d)
    extended = lf_t2(n, k, mu, d)
    legs_t2 = broken_column_legs(whole, parts.t_2, d)
    with checker.containment('eq8', d):
        checker.equal('eq8', legs_t2,
                      (extended - interval(covered)) +
                      (interval(n) - interval(fake)), d)
    checker.equal('lf-correspondence', fake_extended_legs(mu, d), extended,
                  d)
    staircase = staircase_of(mu, len(mu))
    checker.equal('lf-left-legs', fake_extended_legs(mu, d),
                  Multiset(left_legs(staircase, d)), d)
    checker.equal('lf-right-legs', extended,
                  Multiset(right_legs(staircase, d)), d)
    checker.equal(
        'per-distance',
        partition_legs(mu, d) +
        broken_column_legs(rectangle(n, k), parts.t_1, d), legs_t2, d)


def eq7_check(n: int, k: int, mu: Partition, d: int) -> VerificationReport:
    """
    Check L(mu; d) + L(T_1; d) in terms of the fake extended column.

    Checks L(T_1; d) = [[n]] - [[A]] and L(mu; d) + L(T_1; d) =
    (L_f(mu; d) + [[n]]) - ([[fake]] + [[A]]) with A = max{k : mu_k >=
    mu_1 - d}. For the empty partition there is no distance to check.
    """
    mu.check_box(n, k)
    _check_distance_range(mu, d)
    checker = Checker('eq7', dict(_box_params(n, k, mu), d=d))
    if mu:
        _eq7(checker, n, k, mu, d)
    return checker.finish()


def eq8_check(n: int, k: int, mu: Partition, d: int) -> VerificationReport:
    """
    Check L(T_2; d) in terms of L_f(T_2; d) and L_f(T_2; d) = L_f(mu; d).

    Checks L(T_2; d) = (L_f(T_2; d) - [[B]]) + ([[n]] - [[fake]]) with
    B = max{k : mu_k + d >= mu_1}, that L_f(mu; d) and L_f(T_2; d) are
    the left and right legs of the staircase of mu, and finally
    L(mu; d) + L(T_1; d) = L(T_2; d).
    """
    mu.check_box(n, k)
    _check_distance_range(mu, d)
    checker = Checker('eq8', dict(_box_params(n, k, mu), d=d))
    if mu:
        _eq8(checker, n, k, mu, d)
    return checker.finish()


def _slice_check(checker: Checker, lhs: Side, rhs: Side) -> None:
    """Compare both sides arm by arm, each side rebuilt from its slices."""
    max_arm = max((hook_pair(region, c).arm for region, subregion in
                   (*lhs, *rhs) for c in subregion.cells),
                  default=-1)
    for name, side in (('lhs', lhs), ('rhs', rhs)):
        rebuilt = Multiset(
            HookPair(d, leg) for d in range(max_arm + 1)
            for region, subregion in side
            for _, leg in broken_column(region, subregion, d))
        checker.equal(
            f'slices-{name}', rebuilt,
            _union(hook_pairs(region, subregion)
                   for region, subregion in side))
    for d in range(max_arm + 1):
        checker.equal(
            'slice',
            _union(broken_column_legs(g, h, d) for g, h in lhs),
            _union(broken_column_legs(g, h, d) for g, h in rhs), d)


def box_family(bounds: SweepBounds) -> typing.Iterator[Instance]:
    """Yield (n, k, mu) with n, k within bounds and mu in the n x k box."""
    if bounds.max_n is None or bounds.max_k is None:
        return
    for n in range(bounds.max_n + 1):
        for k in range(bounds.max_k + 1):
            for mu in partitions_in_box(n, k):
                yield n, k, mu


def shifted_family(bounds: SweepBounds) -> typing.Iterator[Instance]:
    """Yield (a, lambda) for strict lambda and a in lambda_1 + [0, span]."""
    if bounds.max_lambda is None:
        return
    for lam in strict_partitions_max(bounds.max_lambda):
        for a in range(lam.first, lam.first + bounds.a_span + 1):
            yield a, lam


@theorem(Theorem.HOOK_PAIRS_SR)
@instances(box_family)
def verify_theorem1(n: int, k: int, mu: Partition) -> VerificationReport:
    """
    Verify that SR_{n,k}(mu) and SR_{n,k}(mu~) have equal hook pairs.

    The bijective route maps, for every distance d < k, the legs of the
    broken column of SR_{n,k}(mu) with the master bijection onto the
    legs of the broken column of SR_{n,k}(mu~). Both broken columns are
    read bottom to top in region coordinates, for SR_{n,k}(mu~) this is
    the top to bottom reading of its rotated picture.
    """
    mu.check_box(n, k)
    LOG.debug('Verifying SR hook pairs for n=%d k=%d mu=%s', n, k, mu.parts)
    checker = Checker(Theorem.HOOK_PAIRS_SR, _box_params(n, k, mu))
    left_region = sr(n, k, mu)
    right_region = sr_tilde(n, k, mu)
    checker.equal('direct', hook_pairs(left_region), hook_pairs(right_region))

    staircase = staircase_of(mu, n)
    for d in range(k):
        left = tuple(leg for _, leg in broken_column(
            left_region, left_region, d, 'bottom-up'))
        right = tuple(leg for _, leg in broken_column(
            right_region, right_region, d, 'bottom-up'))
        checker.equal('left-legs', left, left_legs(staircase, d), d)
        checker.equal('right-legs', right, right_legs(staircase, d), d)
        checker.equal('bijection', master_bijection(left), right, d)

    _slice_check(checker, [(left_region, left_region)],
                 [(right_region, right_region)])
    return checker.finish()


@theorem(Theorem.HOOK_PAIRS_SQ)
@instances(box_family)
def verify_theorem2(n: int, k: int, mu: Partition) -> VerificationReport:
    """
    Verify that SQ(n, k, mu) has the hook pairs of R_{n,k} and mu.

    The decomposed route checks that S_1 and S_2 agree row by row and
    that the broken columns of mu and T_1 together match the broken
    column of T_2 for every distance d < mu_1.
    """
    mu.check_box(n, k)
    LOG.debug('Verifying SQ hook pairs for n=%d k=%d mu=%s', n, k, mu.parts)
    checker = Checker(Theorem.HOOK_PAIRS_SQ, _box_params(n, k, mu))
    whole = sq(n, k, mu)
    rect = rectangle(n, k)
    diagram = ferrers(mu)
    checker.equal('direct', hook_pairs(whole),
                  hook_pairs(rect) + hook_pairs(diagram))

    _row_wise(checker, n, k, mu)
    for d in range(mu.first):
        _eq7(checker, n, k, mu, d)
        _eq8(checker, n, k, mu, d)

    _slice_check(checker, [(whole, whole)], [(rect, rect),
                                             (diagram, diagram)])
    return checker.finish()


@theorem(Theorem.HOOK_PAIRS_SHIFTED)
@instances(shifted_family)
def verify_theorem3(a: int, lam: Partition) -> VerificationReport:
    """
    Verify the hook pair identity of the diagonal split of SQ(a, mu).

    Here mu is the doubled shifted partition of the strict partition
    lam. The identity is HP_mu(p(mu)) + HP_R(a)(q(R(a))) =
    HP_SQ(q(A)) + HP_SQ(A_2). For every distance d < mu_1 the
    decomposed route checks

        L(p; d) + [[fake]] = L(lower; d) + [[d]],
        L(upper; d) + L(A_2; d) = [[a]] - [[fake]],
        L(A_2; d) = [[a]] - [[a + 1 - min{k : mu_k <= d}]],
        L(q(R(a)); d) = [[a]] - [[d]],

    with lower and upper the parts of q(A) beside and above the removed
    copy of mu, and recombines both sides into
    (L_f(p; d) + [[a]]) - ([[fake]] + [[d]]).
    """
    mu = doubled_shifted(lam)
    if a < lam.first:
        raise PreconditionError(
            f'Side {a} is smaller than lambda_1 = {lam.first}')
    LOG.debug('Verifying shifted hook pairs for a=%d lambda=%s', a,
              lam.parts)
    checker = Checker(Theorem.HOOK_PAIRS_SHIFTED, {
        'a': a,
        'lambda': list(lam.parts),
        'mu': list(mu.parts)
    })
    diagram = ferrers(mu)
    lower_left = split_p(mu)
    square = r_square(a)
    upper_right = split_q_rect(a)
    split = split_sq(a, mu)
    cut = cut_q_a(a, mu)
    checker.equal(
        'direct',
        hook_pairs(diagram, lower_left) + hook_pairs(square, upper_right),
        hook_pairs(split.whole, split.q_a) + hook_pairs(split.whole,
                                                        split.a_2))

    for d in range(mu.first):
        fake = fake_count(mu, d)
        legs_p = broken_column_legs(diagram, lower_left, d)
        legs_q = broken_column_legs(square, upper_right, d)
        legs_lower = broken_column_legs(split.whole, cut.lower, d)
        legs_upper = broken_column_legs(split.whole, cut.upper, d)
        legs_a2 = broken_column_legs(split.whole, split.a_2, d)
        extended = legs_p + interval(fake)
        checker.equal('lf-equality', extended, legs_lower + interval(d), d)
        with checker.containment('upper-remainder', d):
            checker.equal('upper-remainder', legs_upper + legs_a2,
                          interval(a) - interval(fake), d)
        with checker.containment('A2-legs', d):
            checker.equal(
                'A2-legs', legs_a2,
                interval(a) - interval(a + 1 - first_index_at_most(mu, d)),
                d)
        with checker.containment('q-rect-legs', d):
            checker.equal('q-rect-legs', legs_q, interval(a) - interval(d),
                          d)
        with checker.containment('recombination', d):
            expected = (extended + interval(a)) - (interval(fake) +
                                                   interval(d))
            checker.equal('recombination-lhs', legs_p + legs_q, expected, d)
            checker.equal('recombination-rhs', legs_lower + legs_upper +
                          legs_a2, expected, d)

    _slice_check(checker, [(diagram, lower_left), (square, upper_right)],
                 [(split.whole, split.q_a), (split.whole, split.a_2)])
    return checker.finish()
