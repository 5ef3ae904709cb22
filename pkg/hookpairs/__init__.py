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
"""Export module packages."""

from .decorators import instances, theorem
from .errors import BoxViolationError, ContainmentError, HookPairsError
from .errors import InvalidPartitionError, LiteralParseError
from .errors import MalformedSequenceError, PreconditionError, RegionError
from .identities import eq7_check, eq8_check, fake_extended_legs, interval
from .identities import broken_column_legs, lf_t2, verify_theorem1
from .identities import verify_theorem2, verify_theorem3
from .partitions import FrobeniusForm, Partition, conjugate, doubled_shifted
from .partitions import from_frobenius, is_doubled_shifted, make_partition
from .partitions import partitions_in_box, strict_partitions_max
from .partitions import to_frobenius
from .regions import Region, broken_column, ferrers, hook_pair, hook_pairs
from .regions import rectangle, render_ascii, r_square, s_t_decomposition
from .regions import split_p, split_q_rect, split_sq, sq, sr, sr_tilde
from .regions import cut_q_a
from .report import VerificationReport
from .staircase_bijection import RunDecomposition, Staircase, left_legs
from .staircase_bijection import inverse_master_bijection, master_bijection
from .staircase_bijection import mb_cascade, mb_read, mb_split, right_legs
from .staircase_bijection import run_bounds_left, run_bounds_right
from .staircase_bijection import staircase_of, verify_lemma
from .sweep import sweep
from .types import Cell, HookPair, Shape, SubRegion, SweepBounds, Theorem
from .utils import Multiset

__all__ = [
    'Partition', 'FrobeniusForm', 'make_partition', 'conjugate',
    'to_frobenius', 'from_frobenius', 'doubled_shifted',
    'is_doubled_shifted', 'partitions_in_box', 'strict_partitions_max',
    'Region', 'Cell', 'HookPair', 'Multiset', 'rectangle', 'r_square',
    'ferrers', 'sr', 'sr_tilde', 'sq', 'hook_pair', 'hook_pairs',
    'broken_column', 'split_p', 'split_q_rect', 'split_sq', 'cut_q_a',
    's_t_decomposition', 'render_ascii', 'Staircase', 'RunDecomposition',
    'staircase_of', 'left_legs', 'right_legs', 'mb_split', 'mb_cascade',
    'mb_read', 'master_bijection', 'inverse_master_bijection',
    'run_bounds_left', 'run_bounds_right', 'verify_lemma', 'interval',
    'broken_column_legs', 'fake_extended_legs', 'lf_t2', 'eq7_check',
    'eq8_check', 'verify_theorem1', 'verify_theorem2', 'verify_theorem3',
    'sweep', 'VerificationReport', 'SweepBounds', 'Theorem', 'Shape',
    'SubRegion', 'theorem', 'instances', 'HookPairsError',
    'InvalidPartitionError', 'BoxViolationError', 'RegionError',
    'MalformedSequenceError', 'PreconditionError', 'ContainmentError',
    'LiteralParseError'
]

__version__ = "0.1.0"
