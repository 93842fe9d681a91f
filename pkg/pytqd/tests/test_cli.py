# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/10 16:30
# @Last Modified by: wqshen

import os
import json
import pytest
from pytqd.cache import ReportCache
from pytqd.cli import EXIT_FAILED, EXIT_INCOMPLETE, EXIT_INPUT, EXIT_OK, main
from pytqd.group import make_cyclic, make_dihedral
from pytqd.specs import SpecError, parse_cocycle_spec, parse_group_spec


class TestSpecs:

    def test_groups(self):
        assert parse_group_spec('cyclic:4').order == 4
        assert parse_group_spec('dihedral:3').order == 6
        assert parse_group_spec('quaternion').order == 8
        assert parse_group_spec('product:cyclic:2,cyclic:3').order == 6
        assert parse_group_spec('product:cyclic:2,product:cyclic:2,cyclic:2').order == 8
        assert parse_group_spec('trivial').is_trivial

    @pytest.mark.parametrize('spec', ['bogus', 'cyclic:x', 'cyclic:0', 'symmetric:7', 'product:cyclic:2'])
    def test_bad_groups(self, spec):
        with pytest.raises(SpecError):
            parse_group_spec(spec)

    def test_cocycles(self):
        assert parse_cocycle_spec('cyclic:1', make_cyclic(4)).r == 4
        assert parse_cocycle_spec('trivial', make_dihedral(3)).r == 1
        with pytest.raises(SpecError):
            parse_cocycle_spec('cyclic:1', make_dihedral(3))
        with pytest.raises(SpecError):
            parse_cocycle_spec('cyclic:5', make_cyclic(4))

    def test_files(self, tmp_path):
        table = tmp_path / 'z2.tbl'
        table.write_text('order 2\n0 1\n1 0\n')
        G = parse_group_spec(f'file:{table}')
        assert G.order == 2
        cocycle = tmp_path / 'z2.w'
        cocycle.write_text('r 2\n1 1 1 1\n')
        assert parse_cocycle_spec(f'file:{cocycle}', G)(1, 1, 1) == 1


class TestCache:

    def test_put_get(self, tmp_path):
        cache = ReportCache(str(tmp_path), format_version=1)
        key = ReportCache.key(group='cyclic:2', n=2)
        assert key == ReportCache.key(n=2, group='cyclic:2')
        assert cache.get(key) is None
        cache.put(key, {'braid_order': 4}, job={'group': 'cyclic:2'})
        assert cache.get(key) == {'braid_order': 4}
        assert not os.path.exists(cache.lock_path)
        assert ReportCache(str(tmp_path), format_version=2).get(key) is None

    def test_field_order_survives(self, tmp_path):
        cache = ReportCache(str(tmp_path), format_version=1)
        cache.put('k', {'group': 'cyclic:2', 'braid_order': 4, 'complete': True})
        assert list(cache.get('k')) == ['group', 'braid_order', 'complete']

    def test_stale_lock_is_removed(self, tmp_path):
        cache = ReportCache(str(tmp_path), format_version=1)
        os.makedirs(cache.directory, exist_ok=True)
        with open(cache.lock_path, 'w') as f:
            f.write('2147483647')
        assert cache.lock_owner() == 2147483647
        assert cache.lock_is_stale()
        cache.put('k', {'braid_order': 4})
        assert cache.get('k') == {'braid_order': 4}
        assert not os.path.exists(cache.lock_path)

    def test_own_lock_is_not_stale(self, tmp_path):
        cache = ReportCache(str(tmp_path), format_version=1)
        with open(cache.lock_path, 'w') as f:
            f.write(str(os.getpid()))
        assert not cache.lock_is_stale()


class TestCommandLine:

    def test_group_info(self, capsys):
        assert main(['group', 'info', 'quaternion', '--format', 'json']) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload['order'] == 8
        assert payload['p'] == 2
        assert payload['nilpotency_class'] == 2

    def test_image_pure(self, capsys):
        code = main(['image', 'pure', '--group', 'cyclic:2', '--cocycle', 'trivial', '-n', '2',
                     '--format', 'json'])
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload['pure_order'] == 2
        assert payload['pure_order_p_power']

    def test_report_is_cached(self, tmp_path, capsys):
        args = ['report', '--group', 'cyclic:2', '-n', '2', '--format', 'json', '--cache', str(tmp_path)]
        assert main(args) == EXIT_OK
        cold = capsys.readouterr().out
        assert main(args) == EXIT_OK
        assert capsys.readouterr().out == cold
        assert json.loads(cold)['braid_order'] == 4
        assert len([p for p in os.listdir(tmp_path) if p.endswith('.json')]) == 1

    def test_report_is_cached_text(self, tmp_path, capsys):
        args = ['report', '--group', 'cyclic:2', '-n', '2', '--cache', str(tmp_path)]
        assert main(args) == EXIT_OK
        cold = capsys.readouterr().out
        assert main(args) == EXIT_OK
        warm = capsys.readouterr().out
        print(warm)
        assert warm == cold
        fields = [line.split()[0] for line in warm.splitlines() if line.strip()]
        assert fields.index('group') < fields.index('associator_sign')

    def test_budget_exit(self):
        code = main(['image', 'braid', '--group', 'cyclic:2', '--cocycle', 'cyclic:1', '-n', '3',
                     '--max-elements', '2'])
        assert code == EXIT_INCOMPLETE

    def test_input_errors(self):
        assert main(['image', 'braid', '--group', 'nonsense']) == EXIT_INPUT
        assert main(['image', 'braid', '--group', 'cyclic:2', '-n', '1']) == EXIT_INPUT

    def test_selftest(self, capsys):
        assert main(['selftest', '--group', 'cyclic:2', '--cocycle', 'cyclic:1']) == EXIT_OK
        assert 'associativity' in capsys.readouterr().out

    def test_selftest_corrupted_cocycle(self, tmp_path, capsys):
        path = tmp_path / 'bad.w'
        path.write_text('r 3\n1 1 1 1\n')
        assert main(['selftest', '--group', 'cyclic:3', '--cocycle', f'file:{path}']) == EXIT_FAILED
        assert '(1, 1, 1, 1)' in capsys.readouterr().out

    def test_trivial_group_image(self, capsys):
        assert main(['image', 'braid', '--group', 'trivial', '-n', '5', '--format', 'json']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)['braid_order'] == 1

    def test_group_info_cyclic(self, capsys):
        assert main(['group', 'info', 'cyclic:4', '--format', 'json']) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert (payload['order'], payload['p'], payload['nilpotency_class']) == (4, 2, 1)

    def test_coxeter(self, capsys):
        assert main(['coxeter', '-n', '3', '-k', '5', '--format', 'json']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)['finite'] is True
        assert main(['coxeter', '-n', '3', '-k', '4', '--format', 'json']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)['finite'] is True
        assert main(['coxeter', '-n', '5', '-k', '5', '--format', 'json']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)['finite'] is False
        assert main(['coxeter', '-n', '4', '-k', '4', '--grid']) == EXIT_OK
        print(capsys.readouterr().out)

    def test_rep_emit(self, tmp_path):
        assert main(['rep', 'emit', '--group', 'cyclic:2', '-n', '3', '--pure', '--out', str(tmp_path)]) == EXIT_OK
        names = sorted(os.listdir(tmp_path))
        assert names == ['A_1_2.monop', 'A_1_3.monop', 'A_2_3.monop', 'beta_1.monop', 'beta_2.monop']

    def test_filtration(self, tmp_path):
        path = tmp_path / 'z4.filt'
        path.write_text('group cyclic:4\nlevel 1: 0 2\nlevel 2: 0\naut: 0 3 2 1\n')
        assert main(['filtration', str(path)]) == EXIT_OK
        assert main(['filtration', str(tmp_path / 'missing.filt')]) == EXIT_INPUT


if __name__ == '__main__':
    pytest.main(['-q', __file__])
