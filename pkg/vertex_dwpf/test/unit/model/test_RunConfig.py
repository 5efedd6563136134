import pytest

from vertex_dwpf.app import build_parser
from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.RunConfig import RunConfig, parse_L, parse_rs_list, parse_complex
from vertex_dwpf.service.ConfigManager import DEFAULT_CONFIG

PARSER = build_parser()


def run_config(argv, environ=None):
    args = PARSER.parse_args(argv)
    return RunConfig.from_arguments(args, DEFAULT_CONFIG, environ or {})


def test_parse_L():
    assert [2] == parse_L('2')
    assert [1, 2, 3] == parse_L('1-3')
    assert [1, 2, 4] == parse_L('1,2,4')
    assert [1, 2, 5] == parse_L('1-2,5')


def test_parse_L_invalid():
    with pytest.raises(ConfigError):
        parse_L('a')
    with pytest.raises(ConfigError):
        parse_L('')


def test_parse_rs_list():
    assert [(0, 0), (2, 1)] == parse_rs_list('0:0,2:1')
    with pytest.raises(ConfigError):
        parse_rs_list('0-0')


def test_parse_complex():
    assert 0.5 + 0.2j == parse_complex('0.5+0.2j', 'eta')
    assert parse_complex(None, 'eta') is None
    with pytest.raises(ConfigError):
        parse_complex('one', 'eta')


def test_defaults():
    config = run_config(['verify']).validate()
    assert 'da' == config.model
    assert 2 == config.N
    assert 1 == config.n
    assert [2] == config.L_values
    assert ['all'] == config.checks
    assert 20240229 == config.seed
    assert 1e-9 == config.policy().rel_tol
    assert 'json' == config.output_format


def test_flags_override_config():
    config = run_config(['verify', '--seed', '5', '--tol', '1e-7', '--trials', '4', '--threads', '3']).validate()
    assert 5 == config.seed
    assert 1e-7 == config.policy().rel_tol
    assert 4 == config.dwpf_samples
    assert 3 == config.threads
    assert 25 == DEFAULT_CONFIG['sampling']['dwpf_samples']


def test_environment_seed_overrides_flag():
    config = run_config(['verify', '--seed', '5'], {'DWPF_SEED': '99'}).validate()
    assert 99 == config.seed


def test_environment_seed_invalid():
    with pytest.raises(ConfigError):
        run_config(['verify'], {'DWPF_SEED': 'abc'})


def test_eta_only_with_ps():
    with pytest.raises(ConfigError):
        run_config(['verify', '--model', 'da', '--eta', '0.5']).validate()
    assert 0.5 == run_config(['verify', '--model', 'ps', '--eta', '0.5']).validate().eta


def test_n_not_with_ps():
    with pytest.raises(ConfigError):
        run_config(['verify', '--model', 'ps', '--n', '1']).validate()


def test_rs_only_with_ps():
    with pytest.raises(ConfigError):
        run_config(['verify', '--model', 'da', '--r', '1']).validate()


def test_da_needs_builtin_N():
    with pytest.raises(ConfigError):
        run_config(['verify', '--model', 'da', '--N', '5']).validate()
    with pytest.raises(ConfigError):
        run_config(['verify', '--model', 'da', '--N', '1']).validate()


def test_plugin_needs_file():
    with pytest.raises(ConfigError):
        run_config(['verify', '--model', 'plugin']).validate()


def test_L_positive():
    with pytest.raises(ConfigError):
        run_config(['verify', '--L', '0-2']).validate()


def test_unknown_method():
    with pytest.raises(ConfigError):
        run_config(['compute', '--methods', 'contract,guess']).validate()


def test_to_dict():
    config = run_config(['verify', '--model', 'ps', '--r', '1', '--s', '1', '--L', '1-2']).validate()
    document = config.to_dict()
    assert 'ps' == document['model']
    assert 1 == document['r']
    assert [1, 2] == document['L']
    assert [1.0, 0.0] == document['eta']
    assert 'N' not in document
