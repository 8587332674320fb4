import json
from unittest.mock import patch

import pytest

from mil import __version__
from mil.bundled import CheckedValue, Reproduction, problem_path
from mil.cli import build_parser, main
from mil.report import NOT_SPLIT_FLAG


class TestParser:
    """Tests for the argument parser"""

    def test_common_flags(self):
        """Test -v and --json are accepted after every subcommand"""
        args = build_parser().parse_args(['lc', 'a3.json', '-v', '--json', 'out.json', '--from', '-5'])
        assert args.command == 'lc'
        assert args.verbose
        assert args.json == 'out.json'
        assert args.k_from == -5
        assert args.k_to is None

    def test_unknown_example(self):
        """Test reproduce only accepts bundled example ids"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(['reproduce', 's3'])

    def test_version(self, capsys):
        """Test --version prints the package version"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(['--version'])
        assert __version__ in capsys.readouterr().out


class TestMain:
    """Tests for the command line entry point"""

    def test_classify(self, clean_env, capsys):
        """Test classify prints the group summary"""
        assert main(['classify', problem_path('s2')]) == 0
        out = capsys.readouterr().out
        assert 's2: classify over F_3, n = 2' in out
        assert 'order 2' in out

    def test_classify_from_sys_argv(self, clean_env, capsys):
        """Test main reads sys.argv when no arguments are given"""
        with patch('sys.argv', ['mil', 'classify', problem_path('a3')]):
            assert main() == 0
        assert 'order 3' in capsys.readouterr().out

    def test_json_output(self, clean_env, tmp_path):
        """Test --json writes the report"""
        path = tmp_path / 'report.json'
        assert main(['lc', problem_path('a3'), '--from', '-4', '--to', '-3', '--json', str(path)]) == 0
        data = json.loads(path.read_text())
        assert [s['rank_H'] for s in data['strands']] == [1, 1]
        assert data['omega'] == {'3': 1, '4': 1}
        assert data['a_invariant'] == -3
        assert data['flags'] == [NOT_SPLIT_FLAG]

    def test_invariants(self, clean_env, tmp_path):
        """Test invariants reports the Hilbert function, generators and relations"""
        path = tmp_path / 'report.json'
        assert main(['invariants', problem_path('a3'), '--max-degree', '3', '--json', str(path)]) == 0
        data = json.loads(path.read_text())
        assert data['invariant_hilbert'] == [1, 1, 2, 4]
        assert [d for _, d in data['generators']] == [1, 2, 3, 3]
        assert all(r['holds'] for r in data['relations'])

    def test_a_invariant(self, clean_env, capsys):
        """Test a-invariant reports the method used"""
        assert main(['a-invariant', problem_path('klein3')]) == 0
        assert 'a-invariant -5 (presentation)' in capsys.readouterr().out

    def test_verify(self, clean_env, tmp_path):
        """Test verify passes every check on S_2"""
        path = tmp_path / 'report.json'
        assert main(['verify', problem_path('s2'), '--json', str(path)]) == 0
        checks = json.loads(path.read_text())['checks']
        assert checks['socle class is independent of the splitting']
        assert all(checks.values())

    def test_reproduce(self, clean_env, capsys):
        """Test reproduce prints PASS lines"""
        assert main(['reproduce', 's2']) == 0
        assert 'PASS with 8 checked values' in capsys.readouterr().out

    def test_mismatch_exit_code(self, clean_env, mocker, caplog):
        """Test a failed comparison exits with 4"""
        failing = Reproduction('s2', [CheckedValue('a-invariant', -3, -2)])
        mocker.patch('mil.cli.reproduce', return_value=failing)
        assert main(['reproduce', 's2']) == 4
        assert 'mismatches found' in caplog.text

    def test_missing_file(self, clean_env, tmp_path, caplog):
        """Test unreadable input exits with 2"""
        assert main(['classify', str(tmp_path / 'absent.json')]) == 2
        assert 'ParseError' in caplog.text

    def test_refused(self, clean_env, caplog):
        """Test transvection groups without a presentation exit with 3"""
        assert main(['a-invariant', problem_path('braun')]) == 3
        assert 'TransvectionsPresent' in caplog.text

    def test_resource_cap(self, clean_env, monkeypatch):
        """Test an exhausted pair budget exits with 5"""
        monkeypatch.setenv('MIL_PAIR_BUDGET', '0')
        assert main(['classify', problem_path('klein6')]) == 5

    def test_bad_configuration(self, clean_env, monkeypatch, caplog):
        """Test a malformed setting exits with 2"""
        monkeypatch.setenv('MIL_ORDER_CAP', 'many')
        assert main(['classify', problem_path('s2')]) == 2
        assert 'MIL_ORDER_CAP' in caplog.text

    def test_verbose_logs_traceback(self, clean_env, caplog):
        """Test -v logs the failure with its traceback"""
        assert main(['a-invariant', problem_path('braun'), '-v']) == 3
        assert any(record.exc_info for record in caplog.records)
