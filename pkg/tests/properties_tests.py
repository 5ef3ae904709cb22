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
import random
import typing

from hypothesis import given, settings
from hypothesis import strategies as st

from hookpairs import Multiset, Partition, Staircase
from hookpairs import conjugate, doubled_shifted, ferrers, from_frobenius, \
    hook_pairs, inverse_master_bijection, left_legs, master_bijection, \
    mb_split, rectangle, right_legs, run_bounds_left, run_bounds_right, \
    sq, sr, sr_tilde, to_frobenius, verify_lemma, verify_theorem1, \
    verify_theorem2, verify_theorem3

RANDOM_STAIRCASES = 10000
RANDOM_BOXES = 10000


@st.composite
def staircases(draw: st.DrawFn,
               max_height: int = 12,
               max_offset: int = 10) -> Staircase:
    profile = draw(
        st.lists(st.integers(min_value=0, max_value=max_offset),
                 max_size=max_height))
    return Staircase.from_profile(sorted(profile))


@st.composite
def boxed_partitions(
        draw: st.DrawFn,
        max_side: int = 6) -> typing.Tuple[int, int, Partition]:
    n = draw(st.integers(min_value=0, max_value=max_side))
    k = draw(st.integers(min_value=0, max_value=max_side))
    parts = draw(
        st.lists(st.integers(min_value=0, max_value=k), min_size=n,
                 max_size=n))
    return n, k, Partition(tuple(p for p in sorted(parts, reverse=True) if p))


def random_staircase(rng: random.Random) -> Staircase:
    height = rng.randint(0, 40)
    width = rng.randint(0, 60)
    return Staircase.from_profile(
        sorted(rng.randint(0, width) for _ in range(height)))


def random_box(rng: random.Random) -> typing.Tuple[int, int, Partition]:
    n = rng.randint(0, 12)
    k = rng.randint(0, 12)
    parts = sorted((rng.randint(0, k) for _ in range(n)), reverse=True)
    return n, k, Partition(tuple(p for p in parts if p))


@given(staircase=staircases(), d=st.integers(min_value=0, max_value=15))
def test_master_bijection_maps_left_onto_right(staircase: Staircase,
                                               d: int) -> None:
    left = left_legs(staircase, d)
    right = right_legs(staircase, d)
    assert len(left) == len(right) == staircase.height
    assert master_bijection(left) == right
    assert inverse_master_bijection(right) == left
    assert Multiset(left) == Multiset(right)


@given(staircase=staircases(), d=st.integers(min_value=0, max_value=15))
def test_run_bounds_match_leg_runs(staircase: Staircase, d: int) -> None:
    assert run_bounds_left(staircase, d) == mb_split(left_legs(staircase,
                                                               d))
    assert run_bounds_right(staircase, d) == mb_split(
        right_legs(staircase, d))
    assert verify_lemma(staircase, d).passed


@given(instance=boxed_partitions())
@settings(max_examples=50)
def test_theorems_on_boxes(instance: typing.Tuple[int, int,
                                                  Partition]) -> None:
    n, k, mu = instance
    assert verify_theorem1(n, k, mu).passed
    assert verify_theorem2(n, k, mu).passed


@given(parts=st.sets(st.integers(min_value=1, max_value=7)),
       span=st.integers(min_value=0, max_value=3))
@settings(max_examples=50)
def test_theorem3_on_strict_partitions(parts: typing.Set[int],
                                       span: int) -> None:
    lam = Partition(tuple(sorted(parts, reverse=True)))
    assert verify_theorem3(lam.first + span, lam).passed


@given(instance=boxed_partitions(max_side=8))
def test_partition_transforms(instance: typing.Tuple[int, int,
                                                     Partition]) -> None:
    _, _, mu = instance
    assert conjugate(conjugate(mu)) == mu
    assert from_frobenius(to_frobenius(mu)) == mu
    assert len(ferrers(mu)) == mu.size


@given(parts=st.sets(st.integers(min_value=1, max_value=9)))
def test_doubled_shifted_frobenius(parts: typing.Set[int]) -> None:
    lam = Partition(tuple(sorted(parts, reverse=True)))
    form = to_frobenius(doubled_shifted(lam))
    assert form.arms == lam.parts
    assert form.legs == tuple(x - 1 for x in lam.parts)


def test_random_staircases(seed: int) -> None:
    """
    Check the master bijection on seeded random staircases.
    """
    rng = random.Random(seed)
    for _ in range(RANDOM_STAIRCASES):
        staircase = random_staircase(rng)
        d = rng.randint(0, 60)
        left = left_legs(staircase, d)
        right = right_legs(staircase, d)
        assert master_bijection(left) == right, (staircase, d)
        assert inverse_master_bijection(master_bijection(left)) == left
        assert Multiset(left) == Multiset(right)


def test_random_boxes(seed: int) -> None:
    """
    Check cardinalities and the hook pair identities of Theorems 1 and 2
    on seeded random instances.
    """
    rng = random.Random(seed)
    for _ in range(RANDOM_BOXES):
        n, k, mu = random_box(rng)
        rect = hook_pairs(rectangle(n, k))
        left = hook_pairs(sr(n, k, mu))
        right = hook_pairs(sr_tilde(n, k, mu))
        assert left.total == right.total == n * k
        assert left == right, (n, k, mu)

        whole = hook_pairs(sq(n, k, mu))
        diagram = hook_pairs(ferrers(mu))
        assert whole.total == n * k + mu.size
        assert whole == rect + diagram, (n, k, mu)
