import argparse
import itertools
import json
import logging
import os
import sys
from os import getcwd
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd

from vertex_dwpf import __version__
from vertex_dwpf.exceptions import CapacityError, ConfigError, CoprimalityError, DWPFError, IndexRangeError, \
    PluginFormatError
from vertex_dwpf.model.LatticeSpec import LatticeSpec
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model.RunConfig import RunConfig
from vertex_dwpf.model.weights import da_tables
from vertex_dwpf.model.weights.DAWeightTable import DAWeightTable
from vertex_dwpf.model.weights.PSWeightTable import PSWeightTable
from vertex_dwpf.model.weights.WeightTable import WeightTable
from vertex_dwpf.service.Benchmark import Benchmark
from vertex_dwpf.service.CheckRunner import CheckJob, CheckRunner
from vertex_dwpf.service.ClosedForms import ClosedForms
from vertex_dwpf.service.ConfigManager import ConfigManager
from vertex_dwpf.service.LatticeEngine import LatticeEngine
from vertex_dwpf.service.ParameterFileLoader import ParameterFileLoader
from vertex_dwpf.service.PluginTableLoader import PluginTableLoader
from vertex_dwpf.service.ReportWriter import ReportWriter
from vertex_dwpf.service.Verifier import Verifier

logger = logging.getLogger(__name__)

DEFAULT_DWPF_HOME = Path(getcwd())

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ALL_CHECKS = {
    'da': ['ybe', 'symmetries', 'column-structure', 'prop4', 'factorization', 'engines', 'prop1', 'prop2',
           'prop3', 'closed-form-recursion', 'permutation', 'freezing'],
    'ps': ['ybe', 'symmetries', 'prop4', 'factorization', 'engines', 'prop1', 'prop2', 'prop3',
           'closed-form-recursion', 'permutation', 'freezing', 'rs-independence'],
    'plugin': ['conjecture-probe'],
}

# checks that do not depend on the lattice size run once
SIZE_INDEPENDENT_CHECKS = {'ybe', 'symmetries', 'column-structure', 'prop4'}

# checks that run once at the largest requested size
LARGEST_SIZE_CHECKS = {'conjecture-probe', 'mutation'}

RECURSION_CHECKS = {'prop3', 'closed-form-recursion'}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='vertex-dwpf',
                                     description='Domain wall partition functions of the Deguchi-Akutsu and '
                                                 'Perk-Schultz vertex models: lattice evaluation, factorized '
                                                 'closed forms and machine checks.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--home', type=Path, default=DEFAULT_DWPF_HOME,
                        help='Directory holding config/vertex-dwpf.yaml [default: the current directory].')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging.')

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument('--model', choices=['da', 'ps', 'plugin'], default='da', help='Model family [default: da].')
    model.add_argument('--N', type=int, help='Number of states of a Deguchi-Akutsu table (2, 3 or 4).')
    model.add_argument('--n', type=int, help='Exponent of the root of unity rho = e^(2 pi i n / N) [default: 1].')
    model.add_argument('--r', type=int, help='Perk-Schultz grading: |B_plus| = r + 1 [default: 0].')
    model.add_argument('--s', type=int, help='Perk-Schultz grading: |B_minus| = s + 1 [default: 0].')
    model.add_argument('--eta', type=str, help='Perk-Schultz crossing parameter, e.g. 1 or 0.5+0.2j [default: 1].')
    model.add_argument('--plugin', type=Path, help='Plugin table file (JSON) for --model plugin.')
    model.add_argument('--L', type=str, help="Lattice sizes, e.g. '2', '1-3' or '1,2,4' [default: 2].")
    model.add_argument('--seed', type=int, help='Sampling seed; DWPF_SEED overrides it.')
    model.add_argument('--trials', type=int, help='Random draws per lattice check.')
    model.add_argument('--ybe-samples', type=int, dest='ybe_samples', help='Random Yang-Baxter instances.')
    model.add_argument('--tol', type=float, help='Relative tolerance for comparisons [default: 1e-9].')
    model.add_argument('--threads', type=int, help='Threads for running checks concurrently.')
    model.add_argument('--out', type=Path, help='Write the report to this file instead of standard output.')
    model.add_argument('--format', choices=['json', 'csv'], help='Report format.')

    verify = subparsers.add_parser('verify', parents=[common, model], help='Run verification checks.')
    verify.add_argument('--checks', type=str, default='all',
                        help="'all' or a comma separated list of: ybe, prop1, prop2, prop3, prop4, factorization, "
                             "engines, permutation, freezing, closed-form-recursion, column-structure, "
                             "symmetries, rs-independence, mutation, conjecture-probe.")
    verify.add_argument('--rs', type=str, help="Gradings for rs-independence, e.g. '0:0,0:1,1:0,1:1'.")

    compute = subparsers.add_parser('compute', parents=[common, model], help='Compute Z by several methods.')
    compute.add_argument('--params', type=Path, help='Parameter file {u, v, alpha, beta} with [re, im] pairs.')
    compute.add_argument('--methods', type=str, help='Comma separated: enumerate, contract, factorized.')

    bench = subparsers.add_parser('bench', parents=[common, model], help='Time the methods over lattice sizes.')
    bench.add_argument('--methods', type=str, help='Comma separated: enumerate, contract, factorized.')

    plugin = subparsers.add_parser('plugin-load', parents=[common, model],
                                   help='Load and validate a plugin table, or export a built-in one.')
    plugin.add_argument('--probe', action='store_true', help='Run the full check suite against the table.')
    plugin.add_argument('--export', type=int, help='Write the built-in table for this N in plugin format.')

    subparsers.add_parser('init', parents=[common], help='Write an example configuration file.')

    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def build_verifier(run_config: RunConfig) -> Verifier:
    policy = run_config.policy()
    engine = LatticeEngine(enumeration_cap=run_config.enumeration_cap, memory_bytes=run_config.memory_bytes,
                          threads=run_config.threads)
    return Verifier(engine=engine, closed_forms=ClosedForms(policy), policy=policy, ybe_tol=run_config.ybe_tol,
                    zero_tol=run_config.zero_tol, seed=run_config.seed, ybe_samples=run_config.ybe_samples,
                    dwpf_samples=run_config.dwpf_samples, field_radius=run_config.field_radius)


def build_table(run_config: RunConfig) -> WeightTable:
    if run_config.model == 'da':
        return DAWeightTable.builtin(run_config.N, run_config.n)
    elif run_config.model == 'ps':
        return PSWeightTable.create(run_config.r, run_config.s, run_config.eta)
    else:
        table = PluginTableLoader().read_file(run_config.plugin_file)
        if run_config.n_given and run_config.n != table.rho.n:
            table = DAWeightTable(RootOfUnity(run_config.n, table.N), table.formulas, source='plugin')
        return table


def build_jobs(run_config: RunConfig, verifier: Verifier, table: WeightTable) -> List[CheckJob]:
    names = run_config.checks
    if names == ['all']:
        names = ALL_CHECKS[run_config.model]

    jobs = []
    L_max = max(run_config.L_values)
    for name in names:
        if name in SIZE_INDEPENDENT_CHECKS:
            sizes = [None]
        elif name in LARGEST_SIZE_CHECKS:
            sizes = [L_max]
        else:
            sizes = run_config.L_values

        for L in sizes:
            if name in RECURSION_CHECKS and L is not None and L < 2:
                logger.info(f'Skipping recursion check on a single vertex [check={name}, L={L}]')
                continue

            model = table.describe()
            if L is not None:
                model['L'] = L

            if name == 'rs-independence':
                if not isinstance(table, PSWeightTable):
                    raise ConfigError(f'rs-independence applies to the Perk-Schultz model [model={run_config.model}]')
                run = (lambda size: lambda: verifier.check_rs_independence(run_config.rs_list, size,
                                                                            eta=run_config.eta))(L)
            else:
                run = verifier.checks_for(table, [name], L if L is not None else 1)[name]
            jobs.append(CheckJob(name, model, run))
    return jobs


def cmd_verify(run_config: RunConfig) -> int:
    verifier = build_verifier(run_config)
    table = build_table(run_config)
    jobs = build_jobs(run_config, verifier, table)

    reports = CheckRunner(run_config.threads).run(jobs)
    text = ReportWriter(run_config.output_format).write(reports, run_config.to_dict(), run_config.out)
    if run_config.out is None:
        sys.stdout.write(text)

    failed = [report.name for report in reports if not report.passed]
    if failed:
        logger.warning(f'Checks failed [checks={failed}]')
        return EXIT_FAIL
    return EXIT_PASS


def compute_params(run_config: RunConfig, table: WeightTable, L: int, rng: np.random.Generator) -> ModelParams:
    if run_config.params_file is not None:
        rho = table.rho if isinstance(table, DAWeightTable) else None
        eta = table.eta if isinstance(table, PSWeightTable) else None
        return ParameterFileLoader().read_file(run_config.params_file, rho=rho, eta=eta)

    if isinstance(table, DAWeightTable):
        return ModelParams.random_da(rng, L, table.rho, run_config.field_radius)
    return ModelParams.random_ps(rng, L, table.eta)


def cmd_compute(run_config: RunConfig) -> int:
    verifier = build_verifier(run_config)
    table = build_table(run_config)
    engine = verifier.engine
    methods = {
        'enumerate': lambda params: engine.dwpf_enumerate(LatticeSpec(params, table)),
        'contract': lambda params: engine.dwpf_contract(LatticeSpec(params, table)),
        'factorized': lambda params: verifier.factorized(table, params),
    }

    sizes = [None] if run_config.params_file is not None else run_config.L_values
    if run_config.params_file is None:
        print(f'Random parameters [seed={run_config.seed}]')
    rng = np.random.default_rng(run_config.seed)

    rows = []
    for L in sizes:
        params = compute_params(run_config, table, L, rng)
        values = {}
        for method in run_config.methods:
            try:
                values[method] = complex(methods[method](params))
                print(f'Z[{method}] = {values[method]:.15g} [L={params.L}]')
            except CapacityError as e:
                print(f'Method infeasible, skipped [method={method}, L={params.L}]: {e}')
            rows.append({'L': params.L, 'method': method, 'value_re': values[method].real if method in values
                         else np.nan, 'value_im': values[method].imag if method in values else np.nan})

        for first, second in itertools.combinations(values, 2):
            a, b = values[first], values[second]
            difference = abs(a - b) / max(abs(a), abs(b), run_config.policy().abs_floor)
            print(f'relative difference [{first}, {second}] = {difference:.3g}')

    if run_config.out is not None:
        ReportWriter.write_table(pd.DataFrame(rows), run_config.out, run_config.output_format)
    return EXIT_PASS


def cmd_bench(run_config: RunConfig, output_format: str) -> int:
    verifier = build_verifier(run_config)
    table = build_table(run_config)
    df = Benchmark(verifier).run(table, run_config.L_values, run_config.methods,
                                 np.random.default_rng(run_config.seed))
    text = ReportWriter.write_table(df, run_config.out, output_format)
    if run_config.out is None:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_plugin_load(run_config: RunConfig) -> int:
    if run_config.export_N is not None:
        document = da_tables.to_plugin_document(run_config.export_N, run_config.n)
        text = json.dumps(document, indent=2) + '\n'
        if run_config.out is not None:
            with open(run_config.out, 'w') as f:
                f.write(text)
            logger.info(f'Exported built-in table [N={run_config.export_N}, file={run_config.out}]')
        else:
            sys.stdout.write(text)
        return EXIT_PASS

    table = PluginTableLoader().read_file(run_config.plugin_file)
    print(f'Loaded plugin table [N={table.N}, n={table.rho.n}, rho={table.rho.value:.6g}, entries={len(table)}]')
    entries = set(table.entries())
    for label, idx in [('c_plus', table.c_plus_index), ('a_plus', table.a_plus_index),
                       ('a_minus', table.a_minus_index)]:
        print(f'{label} {idx}: {"present" if idx in entries else "missing"}')

    if not run_config.probe:
        return EXIT_PASS

    report = build_verifier(run_config).run_conjecture_probe(table, max(run_config.L_values))
    text = ReportWriter(run_config.output_format).write([report], run_config.to_dict(), run_config.out)
    if run_config.out is None:
        sys.stdout.write(text)
    return EXIT_PASS if report.passed else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    configure_logging(args.verbose)

    if args.command == 'init':
        ConfigManager(args.home).write_example_config()
        return EXIT_PASS

    try:
        config = ConfigManager(args.home).read_config_or_defaults()
        run_config = RunConfig.from_arguments(args, config, os.environ).validate()

        if args.command == 'verify':
            return cmd_verify(run_config)
        elif args.command == 'compute':
            return cmd_compute(run_config)
        elif args.command == 'bench':
            return cmd_bench(run_config, args.format or 'csv')
        else:
            return cmd_plugin_load(run_config)
    except (ConfigError, PluginFormatError, IndexRangeError, CoprimalityError) as e:
        parser.print_usage(sys.stderr)
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except DWPFError as e:
        logger.error(e)
        return EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
