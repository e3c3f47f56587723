import io
import json
import os

import pytest

from . import cli
from . import sss
from . import test_util

RS_7_7_3 = 'rs:q=7,n=7,k=3'


def run_cli(argv):
    stdout = io.StringIO()
    stderr = io.StringIO()
    status = cli.run(argv, stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


def run_json(argv):
    status, out, err = run_cli(argv)
    assert status == 0, err
    return json.loads(out)


def test_emit_golden():
    status, out, _ = run_cli(['code', 'emit', '--code', RS_7_7_3])
    assert status == 0
    test_util.check_golden_contents(
        os.path.join(test_util.testdata_root, 'cli', 'rs_7_7_3.mat'), out)


def test_code_info():
    result = run_json(['code', 'info', '--spec', RS_7_7_3])
    assert result == {
        'field': '7',
        'n': 7,
        'k': 3,
        'd': 5,
        'd_star': 5,
        'family': 'ReedSolomon',
        'genus': 0,
        'k_lower': 3,
        'seed': 0,
    }


def test_code_info_from_matrix_file(tmpdir):
    path = os.path.join(str(tmpdir), 'c.mat')
    with open(path, 'w') as f:
        f.write('# repetition\n2 3 1\n1 1 1\n')
    result = run_json(['code', 'info', '--code', path])
    assert (result['n'], result['k'], result['d']) == (3, 1, 3)
    assert result['d_star'] is None
    assert 'family' not in result


def test_matrix_parse_error(tmpdir):
    path = os.path.join(str(tmpdir), 'bad.mat')
    with open(path, 'w') as f:
        f.write('7 3 1\n1 2 9\n')
    status, out, err = run_cli(['code', 'info', '--code', path])
    assert status == 1
    assert out == ''
    assert 'line 2' in err


def test_star_of_emitted_files(tmpdir):
    path = os.path.join(str(tmpdir), 'rs.mat')
    assert run_cli(['code', 'emit', '--code', RS_7_7_3,
                    '--output', path])[0] == 0
    result = run_json(['star', '--a', path, '--b', path])
    assert (result['n'], result['dim']) == (7, 5)
    status, out, _ = run_cli(['star', '--a', path, '--b', path, '--emit'])
    assert status == 0
    assert out.startswith('# seed 0\n7 7 5\n')


def test_code_transforms():
    status, out, _ = run_cli(['code', 'dual', '--code', RS_7_7_3])
    assert status == 0 and '7 7 4\n' in out
    status, out, _ = run_cli(
        ['code', 'shorten', '--code', RS_7_7_3, '--coords', '0,1'])
    assert status == 0 and '7 5 1\n' in out
    status, out, _ = run_cli(
        ['code', 'puncture', '--code', RS_7_7_3, '--coords', '6'])
    assert status == 0 and '7 6 3\n' in out
    status, out, _ = run_cli(['code', 'subcode', '--code', RS_7_7_3,
                              '--dim', '2', '--seed', '5'])
    assert status == 0 and out.startswith('# seed 5\n7 7 2\n')
    assert run_json(['code', 'gamma', '--code', RS_7_7_3]) == {
        'k': 3, 'dim_square': 5, 'gamma': 0, 'seed': 0}
    result = run_json(['code', 'degenerate', '--code', 'rs:q=7,n=7,k=7'])
    assert result['degenerate']
    assert len(result['components']) == 7


def test_field_ops():
    assert run_json(['field', '--field', '4', '--op', 'mul', '--a', '2',
                     '--b', '2'])['result'] == 3
    assert run_json(['field', '--field', '7', '--op', 'inv',
                     '--a', '3'])['result'] == 5
    info = run_json(['field', '--field', '2^2', '--op', 'info'])
    assert info['modulus'] == [1, 1, 1]
    assert info['primitive_element'] == 2
    assert run_json(['field', '--field', '3', '--op',
                     'enumerate'])['elements'] == [0, 1, 2]


def test_field_inverse_of_zero():
    status, _, err = run_cli(['field', '--field', '7', '--op', 'inv',
                              '--a', '0'])
    assert status == 1
    assert 'error' in err


def test_decode():
    result = run_json(['decode', '--code', RS_7_7_3, '--t', '2',
                       '--y', '1,2,0,1,3,6,3'])
    assert result['status'] == 'Decoded'
    assert result['guarantee'] == 'Full'
    assert result['codeword'] == [1, 0, 0, 1, 3, 6, 3]
    assert result['error'] == [0, 2, 0, 0, 0, 0, 0]


def test_decode_with_aux():
    result = run_json(['decode', '--code', RS_7_7_3, '--aux',
                       'rs:q=7,n=7,k=4', '--t', '3', '--y', '0,0,0,0,0,0,0'])
    assert result['guarantee'] == 'Relaxed'
    assert result['status'] == 'Decoded'


def test_decode_usage_errors():
    assert run_cli(['decode', '--code', RS_7_7_3, '--y', '0,0,0,0,0,0,0'
                    ])[0] == 2
    status, _, err = run_cli(['decode', '--code', RS_7_7_3, '--t', '3',
                              '--y', '0,0,0,0,0,0,0'])
    assert status == 1
    assert 'radius' in err


@pytest.mark.parametrize('seed', ['-1', str(2**64), 'x'])
def test_bad_seed(seed):
    assert run_cli(['code', 'info', '--code', RS_7_7_3, '--seed',
                    seed])[0] == 2


def test_distinguish():
    result = run_json(['distinguish', '--code', 'herm:q0=3,m=13'])
    assert result['verdict'] == 'Structured'
    assert result['slack'] == 3
    result = run_json(['distinguish', '--code', RS_7_7_3, '--audit'])
    assert result['code']['verdict'] == 'Structured'
    assert result['dual']['k'] == 4


def test_random_square_experiment(monkeypatch):
    monkeypatch.setenv('STARCODE_THREADS', '1')
    argv = ['experiment', 'random-square', '--q', '7', '--n', '8', '--k', '3',
            '--trials', '20', '--seed', '4']
    first = run_cli(argv)
    assert first[0] == 0
    assert run_cli(argv) == first
    result = json.loads(first[1])
    assert result['seed'] == 4
    assert sum(row['count'] for row in result['rows']) == 20
    status, out, _ = run_cli(argv + ['--format', 'csv'])
    assert status == 0
    lines = out.splitlines()
    assert lines[0].startswith('count,dim_square,')
    assert len(lines) == 1 + len(result['rows'])


def test_random_square_control():
    result = run_json([
        'experiment', 'random-square', '--q', '7', '--n', '7', '--k', '3',
        '--trials', '10', '--control', RS_7_7_3
    ])
    assert result['rows'] == [{'dim_square': 5, 'count': 10}]
    assert result['mass_at_generic'] == 0.0


def test_relaxed_decode_experiment():
    result = run_json([
        'experiment', 'relaxed-decode', '--code', RS_7_7_3, '--t', '2',
        '--weight', '2', '--trials', '10'
    ])
    assert result['failures'] == 0
    assert result['guarantee'] == 'Full'
    assert run_cli(['experiment', 'relaxed-decode', '--code', RS_7_7_3
                    ])[0] == 2


def test_share_round_trip(tmpdir):
    spec = 'shamir:q=7,n=7,k=3'
    p1 = os.path.join(str(tmpdir), 'p1.json')
    p2 = os.path.join(str(tmpdir), 'p2.json')
    prod = os.path.join(str(tmpdir), 'prod.json')
    assert run_cli(['share', 'deal', '--code', spec, '--secret', '5',
                    '--seed', '1', '--output', p1])[0] == 0
    with open(p1, 'r') as f:
        data = json.load(f)
    assert data['seed'] == 1
    assert sss.packet_from_json(data).secret_index == 6
    result = run_json(['share', 'reconstruct', '--code', spec, '--packet', p1,
                       '--players', '0,2,4'])
    assert result == {
        'players': [0, 2, 4], 'threshold': 3, 'secret': 5, 'seed': 0}
    result = run_json(['share', 'reconstruct', '--code', spec, '--packet', p1,
                       '--players', '0,2'])
    assert result['secret'] == 'Insufficient'

    small = 'shamir:q=7,n=6,k=2'
    assert run_cli(['share', 'deal', '--code', small, '--secret', '3',
                    '--seed', '2', '--output', p1])[0] == 0
    assert run_cli(['share', 'deal', '--code', small, '--secret', '4',
                    '--seed', '3', '--output', p2])[0] == 0
    assert run_cli(['share', 'multiply', '--code', small, '--packet', p1,
                    '--packet2', p2, '--output', prod])[0] == 0
    result = run_json(['share', 'reconstruct', '--code', small, '--packet',
                       prod, '--players', '1,2,3'])
    assert result['secret'] == 5


def test_share_bad_packet(tmpdir):
    path = os.path.join(str(tmpdir), 'p.json')
    with open(path, 'w') as f:
        f.write('{"code": "x", "secret_index": 1}')
    status, _, err = run_cli(['share', 'reconstruct', '--code',
                              'shamir:q=7,n=7,k=3', '--packet', path])
    assert status == 1
    assert 'shares' in err


def test_share_audit():
    result = run_json(['share', 'audit', '--code', 'shamir:q=7,n=7,k=3',
                       '--r-max', '2'])
    assert [row['expected_count'] for row in result['rows']] == [49, 7, 1]
    assert all(row['uniform'] for row in result['rows'])


def test_hull():
    result = run_json(['hull', '--code', RS_7_7_3, '--points'])
    assert result['dim_i2'] == 1
    assert result['hull_count'] == 8
    assert len(result['points']) == 8
    assert result['hull_equals_curve'] is True
    assert result['exact_sequence'] is True
    assert len(result['ideal_basis']) == 1


def test_text_format():
    status, out, _ = run_cli(['code', 'gamma', '--code', RS_7_7_3,
                              '--format', 'text'])
    assert status == 0
    assert out == 'dim_square: 5\ngamma: 0\nk: 3\nseed: 0\n'


def test_log_output(tmpdir):
    path = os.path.join(str(tmpdir), 'log.txt')
    status, _, _ = run_cli(['code', 'info', '--code', RS_7_7_3, '-d',
                            '--log-output', path])
    assert status == 0


@pytest.mark.parametrize('players', ['0,1,9', '0,1,6'])
def test_share_reconstruct_unknown_players(tmpdir, players):
    spec = 'shamir:q=7,n=7,k=3'
    path = os.path.join(str(tmpdir), 'p.json')
    assert run_cli(['share', 'deal', '--code', spec, '--secret', '2',
                    '--output', path])[0] == 0
    status, out, err = run_cli(['share', 'reconstruct', '--code', spec,
                                '--packet', path, '--players', players])
    assert status == 1
    assert out == ''
    assert 'player' in err
