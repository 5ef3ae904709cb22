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
import json
import typing

import pytest

from hookpairs import __version__
from hookpairs.cli import EXIT_INVALID, EXIT_OK, EXIT_VIOLATION, main

STAIRCASE_LITERAL = 'v:2,1,2,2,1,2;h:1,2,1,1,2'


def run(capsys: pytest.CaptureFixture[str],
        *argv: str) -> typing.Tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check construction and rendering of diagrams.
    """
    code, out, _ = run(capsys, 'construct', '--shape', 'sr', '--n', '4',
                       '--k', '6', '--mu', '5,2,1', '--render')
    assert code == EXIT_OK
    assert out == '.....######\n..######...\n.######....\n######.....\n'

    code, out, _ = run(capsys, 'construct', '--shape', 'rect', '--n', '2',
                       '--k', '3', '--render')
    assert code == EXIT_OK
    assert out == '###\n###\n'

    code, out, _ = run(capsys, 'construct', '--shape', 'sq', '--n', '1',
                       '--k', '2', '--mu', '2')
    assert code == EXIT_OK
    assert json.loads(out) == {
        'cells': [[-1, 0], [-1, 1], [0, -2], [0, -1]],
        'size': 4
    }


def test_construct_invalid(capsys: pytest.CaptureFixture[str]) -> None:
    """
    """
    code, _, err = run(capsys, 'construct', '--shape', 'sr', '--n', '2',
                       '--k', '2', '--mu', '3')
    assert code == EXIT_INVALID
    assert err == 'hookpairs: error: Partition (3,) does not fit into ' \
        'the 2x2 rectangle\n'

    code, _, _ = run(capsys, 'construct', '--shape', 'sr', '--n', '2',
                     '--k', '2', '--mu', '1,2')
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'construct', '--shape', 'hexagon')
    assert code == EXIT_INVALID


def test_hook_pairs(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check hook pair and broken column documents.
    """
    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'sr', '--n', '2',
                       '--k', '2', '--mu', '1')
    assert code == EXIT_OK
    assert out == '[[0,0,2],[1,0,1],[1,1,1]]\n'

    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'rect', '--n', '1',
                       '--k', '2')
    assert out == '[[0,0,1],[1,0,1]]\n'

    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'sr', '--n', '10',
                       '--k', '8', '--mu', '7,7,5,4,4,3,3,1', '--d', '2')
    assert code == EXIT_OK
    assert out == '[[0,1],[1,3],[2,4],[3,1],[4,1]]\n'


def test_hook_pairs_subregions(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check hook pairs of the named subregions.
    """
    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'ferrers', '--mu',
                       '2', '--sub', 'p')
    assert code == EXIT_OK
    assert out == '[[1,0,1]]\n'

    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'sq', '--n', '1',
                       '--k', '2', '--mu', '2', '--sub', 'A2')
    assert out == '[[0,0,1],[1,0,1]]\n'

    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'sq', '--n', '1',
                       '--k', '2', '--mu', '2', '--sub', 'qA')
    assert out == '[]\n'

    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'rect', '--n', '1',
                       '--k', '2', '--sub', 'q-rect')
    assert out == '[[0,0,1]]\n'

    code, out, _ = run(capsys, 'hook-pairs', '--shape', 'rect', '--n', '2',
                       '--k', '2', '--mu', '1', '--sub', 'T1')
    assert out == '[[0,1,1]]\n'

    code, _, err = run(capsys, 'hook-pairs', '--shape', 'sq', '--n', '2',
                       '--k', '2', '--sub', 'S1')
    assert code == EXIT_INVALID
    assert err.startswith('hookpairs: error: Subregion S1')

    code, _, _ = run(capsys, 'hook-pairs', '--shape', 'ferrers', '--mu',
                     '2,2', '--sub', 'p')
    assert code == EXIT_INVALID


def test_bijection(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check the master bijection on leg sequences.
    """
    code, out, _ = run(capsys, 'bijection', '--legs', '0,1,2,1,2,2,3,4,1,2')
    assert code == EXIT_OK
    assert out == '0,1,2,1,2,3,4,2,1,2\n'

    code, out, _ = run(capsys, 'bijection', '--legs', '0,1,2')
    assert out == '0,1,2\n'

    code, out, _ = run(capsys, 'bijection', '--legs', '0,1,2,1,2,3,4,2,1,2',
                       '--inverse')
    assert out == '0,1,2,1,2,2,3,4,1,2\n'

    code, _, _ = run(capsys, 'bijection', '--legs', '0,2')
    assert code == EXIT_INVALID


def test_bijection_staircase(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check the master bijection on the legs of a staircase.
    """
    code, out, _ = run(capsys, 'bijection', '--staircase', STAIRCASE_LITERAL,
                       '--d', '2')
    assert code == EXIT_OK
    assert json.loads(out) == {
        'left': [0, 1, 2, 1, 2, 2, 3, 4, 1, 2],
        'right': [0, 1, 2, 1, 2, 3, 4, 2, 1, 2],
        'output': [0, 1, 2, 1, 2, 3, 4, 2, 1, 2],
        'pass': True
    }

    code, out, _ = run(capsys, 'bijection', '--staircase', STAIRCASE_LITERAL,
                       '--d', '2', '--inverse')
    assert json.loads(out)['output'] == [0, 1, 2, 1, 2, 2, 3, 4, 1, 2]

    code, _, _ = run(capsys, 'bijection', '--staircase', STAIRCASE_LITERAL)
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'bijection', '--legs', '0,1', '--d', '1')
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'bijection', '--legs', '0,1', '--staircase',
                     STAIRCASE_LITERAL)
    assert code == EXIT_INVALID


def test_verify(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check verification of single theorem instances.
    """
    code, out, _ = run(capsys, 'verify', '--theorem', '1', '--n', '4', '--k',
                       '6', '--mu', '5,2,1')
    assert code == EXIT_OK
    document = json.loads(out)
    assert document['pass'] is True
    assert document['theorem'] == 1
    assert document['params'] == {'n': 4, 'k': 6, 'mu': [5, 2, 1]}
    assert 'elapsed_ms' not in document

    code, out, _ = run(capsys, 'verify', '--theorem', '2', '--n', '4', '--k',
                       '6', '--mu', '4,2,1', '--timing')
    assert code == EXIT_OK
    assert 'elapsed_ms' in json.loads(out)

    code, out, _ = run(capsys, 'verify', '--theorem', '3', '--a', '21',
                       '--lambda', '21,20,19,12,11,10,8,7,6,5,4,3')
    assert code == EXIT_OK
    assert json.loads(out)['pass'] is True


def test_verify_invalid(capsys: pytest.CaptureFixture[str]) -> None:
    """
    """
    code, _, err = run(capsys, 'verify', '--theorem', '3', '--a', '2',
                       '--lambda', '3')
    assert code == EXIT_INVALID
    assert err.startswith('hookpairs: error: ')

    code, _, _ = run(capsys, 'verify', '--theorem', '3', '--lambda', '3')
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'verify', '--theorem', '1', '--n', '2')
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'verify', '--theorem', '4', '--n', '2', '--k',
                     '2')
    assert code == EXIT_INVALID


def test_sweep(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check sweep summaries and their stability.
    """
    code, out, _ = run(capsys, 'sweep', '--theorem', '1', '--max-n', '4',
                       '--max-k', '4')
    assert code == EXIT_OK
    assert json.loads(out)['instances_checked'] == 251

    code, repeated, _ = run(capsys, 'sweep', '--theorem', '1', '--max-n',
                            '4', '--max-k', '4', '--jobs', '2')
    assert repeated == out

    code, out, _ = run(capsys, 'sweep', '--theorem', '2', '--max-n', '0',
                       '--max-k', '0')
    assert code == EXIT_OK
    assert json.loads(out)['instances_checked'] == 1

    code, out, _ = run(capsys, 'sweep', '--theorem', '3', '--max-lambda',
                       '4', '--a-span', '2')
    assert code == EXIT_OK
    assert json.loads(out)['instances_checked'] == 48


def test_sweep_invalid(capsys: pytest.CaptureFixture[str],
                       monkeypatch: pytest.MonkeyPatch) -> None:
    """
    """
    code, _, _ = run(capsys, 'sweep', '--theorem', '1', '--max-n', '2')
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'sweep', '--theorem', '3')
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, 'sweep', '--theorem', '1', '--max-n', '1',
                     '--max-k', '1', '--jobs', '0')
    assert code == EXIT_INVALID

    for bounds in (['--theorem', '1', '--max-n', '-3', '--max-k', '2'],
                   ['--theorem', '2', '--max-n', '2', '--max-k', '-1'],
                   ['--theorem', '3', '--max-lambda', '-1'],
                   ['--theorem', '3', '--max-lambda', '2', '--a-span',
                    '-5']):
        code, out, err = run(capsys, 'sweep', *bounds)
        assert code == EXIT_INVALID
        assert out == ''
        assert 'must be non-negative' in err

    monkeypatch.setenv('HOOKPAIRS_JOBS', 'many')
    code, _, err = run(capsys, 'sweep', '--theorem', '1', '--max-n', '1',
                       '--max-k', '1')
    assert code == EXIT_INVALID
    assert 'HOOKPAIRS_JOBS' in err


@pytest.mark.usefixtures('failing_sweep')
def test_sweep_violation(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Check the exit code and summary of a sweep with a counterexample.
    """
    code, out, _ = run(capsys, 'sweep', '--theorem', '1', '--max-n', '2',
                       '--max-k', '2')
    assert code == EXIT_VIOLATION
    document = json.loads(out)
    assert document['pass'] is False
    assert document['instances_failed'] == 10
    assert document['failures'][0]['instance'] == {
        'n': 1,
        'k': 1,
        'mu': [1]
    }


def test_invalid_log_level(capsys: pytest.CaptureFixture[str],
                           monkeypatch: pytest.MonkeyPatch) -> None:
    """
    """
    monkeypatch.setenv('HOOKPAIRS_LOG_LEVEL', 'chatty')
    code, out, err = run(capsys, 'construct', '--shape', 'rect', '--n', '1',
                         '--k', '1')
    assert code == EXIT_INVALID
    assert out == ''
    assert 'HOOKPAIRS_LOG_LEVEL' in err

    monkeypatch.setenv('HOOKPAIRS_LOG_LEVEL', 'info')
    code, _, _ = run(capsys, 'construct', '--shape', 'rect', '--n', '1',
                     '--k', '1')
    assert code == EXIT_OK


def test_version_and_usage(capsys: pytest.CaptureFixture[str]) -> None:
    """
    """
    code, out, _ = run(capsys, '--version')
    assert code == EXIT_OK
    assert out == f'hookpairs {__version__}\n'

    code, _, err = run(capsys)
    assert code == EXIT_INVALID
    assert 'usage: hookpairs' in err
