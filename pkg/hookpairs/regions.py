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
Cell set regions and hook pairs measured inside enclosing regions.

Coordinates: rows grow downward and columns rightward, the base
rectangle occupies rows 0..n-1 and columns 0..k-1. Glued copies of
partitions extend to negative columns (left) and negative rows (top).
"""
import collections
import dataclasses
import functools
import logging as LOG
import typing

from .errors import PreconditionError, RegionError
from .partitions import Partition, is_doubled_shifted
from .types import Cell, HookPair, RowOrder
from .utils import Multiset

HookPairMultiset = Multiset[HookPair]


@dataclasses.dataclass(frozen=True)
class Region:
    """
    Finite row- and column-convex set of cells.

    Convexity makes arm and leg lengths a difference of coordinates:
    the arm of a cell is the distance to the last cell of its row, the
    leg is the distance to the last cell of its column.
    """

    cells: typing.FrozenSet[Cell] = frozenset()

    def __post_init__(self) -> None:
        """Normalize cells and check convexity."""
        object.__setattr__(self, 'cells',
                           frozenset(Cell(*c) for c in self.cells))
        for name, extents, key in (('row', self.row_extents, 0),
                                   ('column', self.col_extents, 1)):
            sizes = collections.Counter(c[key] for c in self.cells)
            for line, (lo, hi) in extents.items():
                if sizes[line] != hi - lo + 1:
                    raise RegionError(
                        f'Region is not {name}-convex at {name} {line}')

    def __repr__(self) -> str:
        """Return instance representation."""
        return f'<{type(self).__name__} cells: {len(self.cells)}>'

    def __contains__(self, cell: object) -> bool:
        """Check if cell belongs to region."""
        return cell in self.cells

    def __iter__(self) -> typing.Iterator[Cell]:
        """Return iterator over cells in row major order."""
        return iter(sorted(self.cells))

    def __len__(self) -> int:
        """Return number of cells."""
        return len(self.cells)

    def __or__(self, other: 'Region') -> 'Region':
        """Return union of regions."""
        return Region(self.cells | other.cells)

    def __sub__(self, other: 'Region') -> 'Region':
        """Return cells of self which are not in other."""
        return Region(self.cells - other.cells)

    def __le__(self, other: 'Region') -> bool:
        """Check if region is a subregion of other."""
        return self.cells <= other.cells

    @functools.cached_property
    def row_extents(self) -> typing.Dict[int, typing.Tuple[int, int]]:
        """Return mapping from row to its (first, last) column."""
        extents: typing.Dict[int, typing.Tuple[int, int]] = {}
        for row, col in self.cells:
            lo, hi = extents.get(row, (col, col))
            extents[row] = (min(lo, col), max(hi, col))
        return extents

    @functools.cached_property
    def col_extents(self) -> typing.Dict[int, typing.Tuple[int, int]]:
        """Return mapping from column to its (first, last) row."""
        extents: typing.Dict[int, typing.Tuple[int, int]] = {}
        for row, col in self.cells:
            lo, hi = extents.get(col, (row, row))
            extents[col] = (min(lo, row), max(hi, row))
        return extents

    def row(self, row: int) -> typing.List[Cell]:
        """Return cells of a row, left to right."""
        if row not in self.row_extents:
            return []
        lo, hi = self.row_extents[row]
        return [Cell(row, col) for col in range(lo, hi + 1)]

    def rows(self) -> typing.List[int]:
        """Return occupied row indices, top to bottom."""
        return sorted(self.row_extents)

    def restrict_rows(self, first: int, last: int) -> 'Region':
        """Return cells with first <= row <= last."""
        return Region(
            frozenset(c for c in self.cells if first <= c.row <= last))


def region_of(cells: typing.Iterable[typing.Tuple[int, int]]) -> Region:
    """Make region from (row, col) pairs."""
    return Region(frozenset(Cell(r, c) for r, c in cells))


def _rows(spans: typing.Iterable[typing.Tuple[int, int, int]]) -> Region:
    """Make region from (row, first col, last col) spans."""
    return region_of((row, col) for row, lo, hi in spans
                     for col in range(lo, hi + 1))


def rectangle(n: int, k: int) -> Region:
    """Return the rectangle R_{n,k} with n rows and k columns."""
    if n < 0 or k < 0:
        raise PreconditionError(f'Invalid rectangle {n}x{k}')
    return _rows((r, 0, k - 1) for r in range(n))


def r_square(a: int) -> Region:
    """Return R(a), the a x (a + 1) rectangle."""
    return rectangle(a, a + 1)


def ferrers(mu: Partition) -> Region:
    """Return the Ferrers diagram of partition."""
    return _rows((r, 0, p - 1) for r, p in enumerate(mu))


def sr(n: int, k: int, mu: Partition) -> Region:
    """
    Return SR_{n,k}(mu).

    A copy of mu is removed from the top-left corner of R_{n,k} and glued
    to its right, first row to first row. Every row has k cells.
    """
    mu.check_box(n, k)
    LOG.debug('Building SR region n=%d k=%d mu=%s', n, k, mu.parts)
    return _rows((r, mu.part(r + 1), mu.part(r + 1) + k - 1)
                 for r in range(n))


def sr_tilde(n: int, k: int, mu: Partition) -> Region:
    """
    Return SR_{n,k}(mu~).

    A 180 degree rotated copy of mu is removed from the bottom-right
    corner of R_{n,k} and glued to its left, last row to last row.
    """
    mu.check_box(n, k)
    LOG.debug('Building SR~ region n=%d k=%d mu=%s', n, k, mu.parts)
    return _rows((r, -mu.part(n - r), k - 1 - mu.part(n - r))
                 for r in range(n))


def _rotated_top(k: int, mu: Partition) -> Region:
    """Rotated copy of mu on top of R_{n,k}, last column to column k-1."""
    return _rows((-t, k - mu.part(t), k - 1) for t in range(1, len(mu) + 1))


def sq(n: int, k: int, mu: Partition) -> Region:
    """
    Return SQ(n, k, mu).

    This is SR_{n,k}(mu~) with another rotated copy of mu glued on top,
    its last column glued to the last column of the rectangle.
    """
    mu.check_box(n, k)
    LOG.debug('Building SQ region n=%d k=%d mu=%s', n, k, mu.parts)
    return sr_tilde(n, k, mu) | _rotated_top(k, mu)


def hook_pair(region: Region, cell: Cell) -> HookPair:
    """Return the hook pair of cell measured inside region."""
    if cell not in region:
        raise RegionError(f'Cell {tuple(cell)} is not in {region!r}')
    row, col = cell
    return HookPair(arm=region.row_extents[row][1] - col,
                    leg=region.col_extents[col][1] - row)


def _check_subregion(region: Region, subregion: Region) -> None:
    if not subregion <= region:
        raise RegionError(f'{subregion!r} is not a subregion of {region!r}')


def hook_pairs(region: Region,
               subregion: typing.Optional[Region] = None) -> HookPairMultiset:
    """Return HP_G(H), the hook pairs of H measured inside G."""
    if subregion is None:
        subregion = region
    _check_subregion(region, subregion)
    return Multiset(hook_pair(region, c) for c in subregion.cells)


def broken_column(
        region: Region,
        subregion: Region,
        d: int,
        order: RowOrder = 'top-down') -> typing.List[typing.Tuple[Cell, int]]:
    """
    Return the broken column of H in distance d, measured inside G.

    The result lists the cells of H whose arm (in G) is d, together
    with their legs (in G), ordered from the top row to the bottom row
    or, with order 'bottom-up', from the bottom row to the top row.
    """
    if d < 0:
        raise PreconditionError(f'Distance must be nonnegative: {d}')
    _check_subregion(region, subregion)
    result = []
    for row in subregion.rows():
        cell = Cell(row, region.row_extents[row][1] - d)
        if cell in subregion:
            result.append((cell, hook_pair(region, cell).leg))
    if order == 'bottom-up':
        result.reverse()
    return result


def split_p(mu: Partition) -> Region:
    """Return p(mu), the cells of mu on or below the main diagonal."""
    return Region(frozenset(c for c in ferrers(mu).cells if c.col <= c.row))


def split_q_rect(a: int) -> Region:
    """Return q(R(a)), the cells of R(a) strictly above the diagonal."""
    if a < 0:
        raise PreconditionError(f'Invalid side: {a}')
    return _rows((r, r + 1, a) for r in range(a))


class SquareSplit(typing.NamedTuple):
    """Diagonal split of SQ(a, mu) := SQ(a, a + 1, mu)."""

    q_a: Region
    a_2: Region
    whole: Region


def _check_square(a: int, mu: Partition) -> None:
    if not is_doubled_shifted(mu):
        raise PreconditionError(
            f'Partition {mu.parts} is not doubled shifted')
    if a < 0 or a < mu.first - 1:
        raise PreconditionError(
            f'Side {a} is smaller than mu_1 - 1 = {mu.first - 1}')


def split_sq(a: int, mu: Partition) -> SquareSplit:
    """Split SQ(a, mu) into q(A), the rotated copy A_2 on top, and SQ."""
    _check_square(a, mu)
    whole = sq(a, a + 1, mu)
    return SquareSplit(
        q_a=Region(frozenset(c for c in whole.cells if c.col > c.row >= 0)),
        a_2=Region(frozenset(c for c in whole.cells if c.row < 0)),
        whole=whole)


class QACut(typing.NamedTuple):
    """q(A) cut along the top row of the removed rotated copy of mu."""

    lower: Region
    upper: Region


def cut_q_a(a: int, mu: Partition) -> QACut:
    """
    Cut q(A) into the rows beside the removed copy of mu and the rest.

    `lower` holds the cells of q(A) in rows a - l(mu)..a - 1, `upper`
    the cells in rows 0..a - l(mu) - 1.
    """
    q_a = split_sq(a, mu).q_a
    top = a - len(mu)
    return QACut(lower=q_a.restrict_rows(top, a - 1),
                 upper=q_a.restrict_rows(0, top - 1))


class STDecomposition(typing.NamedTuple):
    """Split of R_{n,k} into S_1, T_1 and of SQ(n, k, mu) into S_2, T_2."""

    s_1: Region
    t_1: Region
    s_2: Region
    t_2: Region


def s_t_decomposition(n: int, k: int, mu: Partition) -> STDecomposition:
    """
    Return the S_1/T_1 and S_2/T_2 decomposition.

    S_1 consists of the first k - mu_1 columns of R_{n,k} and a copy of
    mu reflected upside down at the bottom. S_2 consists of the rotated
    copy of mu left of SQ(n, k, mu) and the next k - mu_1 columns.
    Row r of S_1 and row r of S_2 have the same hook pairs.
    """
    mu.check_box(n, k)
    rect = rectangle(n, k)
    whole = sq(n, k, mu)
    s_1 = _rows((r, 0, k - mu.first + mu.part(n - r) - 1) for r in range(n))
    s_2 = Region(frozenset(c for c in whole.cells
                           if c.row >= 0 and c.col < k - mu.first))
    return STDecomposition(s_1=s_1, t_1=rect - s_1, s_2=s_2, t_2=whole - s_2)


def render_ascii(region: Region) -> str:
    """Render region over its bounding box with '#' and '.'."""
    if not region.cells:
        return ''
    rows = [c.row for c in region.cells]
    cols = [c.col for c in region.cells]
    return '\n'.join(''.join('#' if (r, c) in region.cells else '.'
                             for c in range(min(cols),
                                            max(cols) + 1))
                     for r in range(min(rows),
                                    max(rows) + 1))
