import json
from os import path
from pathlib import Path

from vertex_dwpf.app import main, build_parser, build_verifier, EXIT_PASS, EXIT_FAIL, EXIT_USAGE
from vertex_dwpf.model.RunConfig import RunConfig
from vertex_dwpf.service.ConfigManager import DEFAULT_CONFIG

data_dir = Path(path.dirname(__file__), 'service', 'data')


def test_version(capsys):
    assert EXIT_PASS == main(['--version'])
    assert 'vertex-dwpf 0.1.0' in capsys.readouterr().out


def test_missing_command():
    assert EXIT_USAGE == main([])


def test_verify_large_N_is_usage_error(tmp_path, capsys):
    assert EXIT_USAGE == main(['verify', '--home', str(tmp_path), '--model', 'da', '--N', '5'])
    assert '--model plugin' in capsys.readouterr().err


def test_verify_passes(tmp_path):
    out = tmp_path / 'report.json'
    code = main(['verify', '--home', str(tmp_path), '--model', 'da', '--N', '2', '--L', '1-2',
                 '--checks', 'ybe,prop4,factorization,prop3', '--trials', '2', '--ybe-samples', '3',
                 '--out', str(out)])
    assert EXIT_PASS == code

    document = json.loads(out.read_text())
    assert 'da' == document['config']['model']
    # prop3 is skipped on a single vertex
    assert [('ybe', None), ('prop4', 1), ('factorization', 1), ('factorization', 2), ('prop3', 2)] == \
           [(check['name'], check['model'].get('L')) for check in document['checks']]
    assert all(check['pass'] for check in document['checks'])


def test_verify_ps_csv(tmp_path, capsys):
    code = main(['verify', '--home', str(tmp_path), '--model', 'ps', '--r', '1', '--s', '0', '--L', '2',
                 '--checks', 'rs-independence', '--rs', '0:0,1:0', '--trials', '2', '--format', 'csv',
                 '--threads', '2'])
    assert EXIT_PASS == code
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith('name,L,samples')
    assert lines[1].startswith('rs-independence,2,')


def test_verify_failure_exit_code(tmp_path):
    plugin = tmp_path / 'plugin.json'
    plugin.write_text(json.dumps({'N': 5, 'n': 1, 'entries': [
        {'iota1': 1, 'iota2': 1, 'kappa2': 1, 'kappa1': 1, 'formula': 'x'},
        {'iota1': 1, 'iota2': 5, 'kappa2': 1, 'kappa1': 5, 'formula': 'x'},
        {'iota1': 5, 'iota2': 5, 'kappa2': 5, 'kappa1': 5, 'formula': 'x'},
    ]}))
    code = main(['verify', '--home', str(tmp_path), '--model', 'plugin', '--plugin', str(plugin), '--L', '1',
                 '--checks', 'prop4', '--trials', '2', '--out', str(tmp_path / 'report.json')])
    assert EXIT_FAIL == code


def test_environment_seed(tmp_path, monkeypatch):
    monkeypatch.setenv('DWPF_SEED', '11')
    out = tmp_path / 'report.json'
    assert EXIT_PASS == main(['verify', '--home', str(tmp_path), '--seed', '5', '--checks', 'prop4', '--trials',
                              '1', '--out', str(out)])
    assert 11 == json.loads(out.read_text())['config']['seed']


def test_config_file_is_read(tmp_path):
    out = tmp_path / 'report.json'
    home = data_dir / 'home'
    assert EXIT_PASS == main(['verify', '--home', str(home), '--checks', 'prop4', '--out', str(out)])

    document = json.loads(out.read_text())
    assert 7 == document['config']['seed']
    assert 3 == document['checks'][0]['samples'] // 2


def test_bad_config_is_usage_error():
    assert EXIT_USAGE == main(['verify', '--home', str(data_dir / 'bad_home')])


def test_compute_zero_parameters(tmp_path, capsys):
    out = tmp_path / 'values.json'
    code = main(['compute', '--home', str(tmp_path), '--model', 'da', '--N', '2', '--params',
                 str(data_dir / 'params_zero_l1.json'), '--format', 'json', '--out', str(out)])
    assert EXIT_PASS == code
    assert 'Z[contract]' in capsys.readouterr().out

    rows = json.loads(out.read_text())
    assert {'enumerate', 'contract', 'factorized'} == {row['method'] for row in rows}
    for row in rows:
        assert 1 == row['L']
        assert abs(row['value_re'] - 1) < 1e-15
        assert abs(row['value_im']) < 1e-15


def test_compute_infeasible_method(tmp_path, capsys):
    config_dir = tmp_path / 'config'
    config_dir.mkdir()
    (config_dir / 'vertex-dwpf.yaml').write_text('caps:\n  enumeration_assignments: 10\n')

    code = main(['compute', '--home', str(tmp_path), '--model', 'ps', '--L', '2', '--methods',
                 'enumerate,contract'])
    assert EXIT_PASS == code
    assert 'Method infeasible, skipped [method=enumerate, L=2]' in capsys.readouterr().out


def test_compute_missing_params_file(tmp_path):
    assert EXIT_USAGE == main(['compute', '--home', str(tmp_path), '--params', str(tmp_path / 'none.json')])


def test_bench(tmp_path):
    out = tmp_path / 'bench.csv'
    assert EXIT_PASS == main(['bench', '--home', str(tmp_path), '--L', '1-2', '--methods', 'contract,factorized',
                              '--out', str(out)])
    lines = out.read_text().splitlines()
    assert 'method,L,seconds,value_re,value_im,note' == lines[0]
    assert 5 == len(lines)


def test_plugin_export(tmp_path, capsys):
    assert EXIT_PASS == main(['plugin-load', '--home', str(tmp_path), '--export', '3'])
    document = json.loads(capsys.readouterr().out)
    assert 3 == document['N']
    assert 19 == len(document['entries'])


def test_plugin_export_unknown_N(tmp_path):
    assert EXIT_USAGE == main(['plugin-load', '--home', str(tmp_path), '--export', '5'])


def test_plugin_load(tmp_path, capsys):
    assert EXIT_PASS == main(['plugin-load', '--home', str(tmp_path), '--plugin',
                              str(data_dir / 'plugin_n5_valid.json')])
    out = capsys.readouterr().out
    assert 'N=5, n=2' in out
    assert 'c_plus (1, 5, 1, 5): present' in out


def test_plugin_load_index_out_of_range(tmp_path):
    assert EXIT_USAGE == main(['plugin-load', '--home', str(tmp_path), '--plugin',
                               str(data_dir / 'plugin_n5_index6.json')])


def test_init(tmp_path):
    assert EXIT_PASS == main(['init', '--home', str(tmp_path)])
    assert (tmp_path / 'config' / 'vertex-dwpf.yaml').exists()


def test_build_verifier_threads():
    args = build_parser().parse_args(['verify', '--model', 'da', '--N', '3', '--threads', '3'])
    run_config = RunConfig.from_arguments(args, DEFAULT_CONFIG, {}).validate()
    verifier = build_verifier(run_config)
    assert 3 == verifier.engine.threads
