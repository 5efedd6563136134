from __future__ import annotations
import copy
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.TolerancePolicy import TolerancePolicy

logger = logging.getLogger(__name__)

MODELS = ['da', 'ps', 'plugin']
BUILTIN_N = [2, 3, 4]
METHODS = ['enumerate', 'contract', 'factorized']
FORMATS = ['json', 'csv']

SEED_VARIABLE = 'DWPF_SEED'


def parse_L(text: str) -> List[int]:
    """
    Parses lattice sizes written as '2', '1-3' or '1,2,4'.
    :param text: The text to parse.
    :return: The sizes in the order given.
    """
    if text is None or str(text).strip() == '':
        raise ConfigError(f'Invalid value [L={text!r}]')

    values = []
    try:
        for part in str(text).split(','):
            if '-' in part:
                low, high = part.split('-')
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(part))
    except ValueError as e:
        raise ConfigError(f'Lattice sizes must be integers or ranges [L={text!r}]') from e

    if not values:
        raise ConfigError(f'Empty range of lattice sizes [L={text!r}]')
    return values


def parse_list(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [item.strip() for item in text.split(',') if item.strip() != '']


def parse_rs_list(text: Optional[str]) -> Optional[List[Tuple[int, int]]]:
    """
    Parses gradings written as '0:0,1:1,2:1'.
    """
    if text is None:
        return None
    rs_list = []
    for item in parse_list(text):
        try:
            r, s = item.split(':')
            rs_list.append((int(r), int(s)))
        except ValueError as e:
            raise ConfigError(f'Gradings must be written r:s [rs={text!r}]') from e
    return rs_list


def parse_complex(text: Optional[str], name: str) -> Optional[complex]:
    if text is None:
        return None
    try:
        return complex(str(text).replace(' ', ''))
    except ValueError as e:
        raise ConfigError(f'Invalid complex number [{name}={text!r}]') from e


class RunConfig:
    """
    The merged settings of one command line run: packaged defaults, then the YAML file, then flags, then the
    DWPF_SEED environment variable for the seed.
    """

    def __init__(self, command: str, config: Dict[str, Any], model: str = 'da', N: int = None, n: int = None,
                 r: int = None, s: int = None, eta: complex = None, L_values: Sequence[int] = (2,),
                 checks: Sequence[str] = ('all',), params_file: Path = None, plugin_file: Path = None,
                 out: Path = None, output_format: str = 'json', methods: Sequence[str] = None,
                 rs_list: Sequence[Tuple[int, int]] = None, probe: bool = False, export_N: int = None):
        if config is None:
            raise ConfigError('Invalid value [config=None]')

        self._command = command
        self._config = copy.deepcopy(config)
        self._model = model
        self._N = N
        self._n = n
        self._r = r
        self._s = s
        self._eta = eta
        self._L_values = list(L_values)
        self._checks = list(checks)
        self._params_file = Path(params_file) if params_file is not None else None
        self._plugin_file = Path(plugin_file) if plugin_file is not None else None
        self._out = Path(out) if out is not None else None
        self._output_format = output_format
        self._methods = list(methods) if methods is not None else list(METHODS)
        self._rs_list = list(rs_list) if rs_list is not None else None
        self._probe = probe
        self._export_N = export_N

    @classmethod
    def from_arguments(cls, args, config: Dict[str, Any], environ: Mapping[str, str]) -> RunConfig:
        """
        Builds a run configuration from parsed command line arguments over a configuration read from YAML.
        :param args: The argparse namespace.
        :param config: The configuration dictionary, defaults already filled in.
        :param environ: The environment, consulted for DWPF_SEED.
        :return: The run configuration (not yet validated).
        """
        config = copy.deepcopy(config)

        if getattr(args, 'tol', None) is not None:
            config['tolerance']['rel_tol'] = args.tol
        if getattr(args, 'trials', None) is not None:
            config['sampling']['dwpf_samples'] = args.trials
        if getattr(args, 'ybe_samples', None) is not None:
            config['sampling']['ybe_samples'] = args.ybe_samples
        if getattr(args, 'threads', None) is not None:
            config['runner']['threads'] = args.threads
        if getattr(args, 'seed', None) is not None:
            config['sampling']['seed'] = args.seed

        if environ.get(SEED_VARIABLE) is not None:
            try:
                config['sampling']['seed'] = int(environ[SEED_VARIABLE])
            except ValueError as e:
                raise ConfigError(f'Invalid seed in environment [{SEED_VARIABLE}={environ[SEED_VARIABLE]!r}]') from e
            logger.debug(f'Seed taken from environment [seed={config["sampling"]["seed"]}]')

        L_text = getattr(args, 'L', None)
        return cls(command=args.command,
                   config=config,
                   model=getattr(args, 'model', 'da'),
                   N=getattr(args, 'N', None),
                   n=getattr(args, 'n', None),
                   r=getattr(args, 'r', None),
                   s=getattr(args, 's', None),
                   eta=parse_complex(getattr(args, 'eta', None), 'eta'),
                   L_values=parse_L(L_text) if L_text is not None else (2,),
                   checks=parse_list(getattr(args, 'checks', None)) or ['all'],
                   params_file=getattr(args, 'params', None),
                   plugin_file=getattr(args, 'plugin', None),
                   out=getattr(args, 'out', None),
                   output_format=getattr(args, 'format', None) or 'json',
                   methods=parse_list(getattr(args, 'methods', None)),
                   rs_list=parse_rs_list(getattr(args, 'rs', None)),
                   probe=getattr(args, 'probe', False),
                   export_N=getattr(args, 'export', None))

    def validate(self) -> RunConfig:
        """
        Checks that the settings are mutually consistent.
        :return: This run configuration.
        """
        if self._model not in MODELS:
            raise ConfigError(f'Unknown model [model={self._model}, available={MODELS}]')

        if self._eta is not None and self._model != 'ps':
            raise ConfigError(f'eta only applies to the Perk-Schultz model [model={self._model}, eta={self._eta}]')
        if self._n is not None and self._model == 'ps':
            raise ConfigError(f'n only applies to Deguchi-Akutsu tables [model={self._model}, n={self._n}]')
        if (self._r is not None or self._s is not None) and self._model != 'ps':
            raise ConfigError(f'r and s only apply to the Perk-Schultz model [model={self._model}, r={self._r}, '
                              f's={self._s}]')
        if self._model == 'ps' and self._N is not None:
            raise ConfigError(f'The Perk-Schultz model is selected by r and s, not N [N={self._N}]')
        if self._model == 'ps' and (self.r < 0 or self.s < 0):
            raise ConfigError(f'Invalid grading [r={self.r}, s={self.s}]')

        if self._model == 'da':
            if self.N >= 5:
                raise ConfigError(f'No built-in table for this number of states, use --model plugin --plugin FILE '
                                  f'[N={self.N}]')
            if self.N not in BUILTIN_N:
                raise ConfigError(f'Invalid number of states [N={self.N}, available={BUILTIN_N}]')
        if self._model == 'plugin' and self._plugin_file is None and self._command != 'plugin-load':
            raise ConfigError('The plugin model requires a plugin file [plugin=None]')
        if self._command == 'plugin-load' and self._plugin_file is None and self._export_N is None:
            raise ConfigError('plugin-load requires --plugin or --export')
        if self._export_N is not None and self._export_N not in BUILTIN_N:
            raise ConfigError(f'Only built-in tables can be exported [N={self._export_N}, available={BUILTIN_N}]')

        if any(L < 1 for L in self._L_values):
            raise ConfigError(f'Lattice sizes must be positive [L={self._L_values}]')
        if self._output_format not in FORMATS:
            raise ConfigError(f'Unknown output format [format={self._output_format}, available={FORMATS}]')
        unknown = [m for m in self._methods if m not in METHODS]
        if unknown:
            raise ConfigError(f'Unknown methods [methods={unknown}, available={METHODS}]')
        if self._rs_list is not None and any(r < 0 or s < 0 for r, s in self._rs_list):
            raise ConfigError(f'Invalid grading [rs={self._rs_list}]')

        if self.threads < 1:
            raise ConfigError(f'Invalid number of threads [threads={self.threads}]')
        if self.dwpf_samples < 1 or self.ybe_samples < 1:
            raise ConfigError(f'Sample counts must be positive [dwpf_samples={self.dwpf_samples}, '
                              f'ybe_samples={self.ybe_samples}]')

        # constructs and validates the tolerances
        self.policy()
        return self

    @property
    def command(self) -> str:
        return self._command

    @property
    def model(self) -> str:
        return self._model

    @property
    def N(self) -> int:
        return 2 if self._N is None else self._N

    @property
    def n(self) -> int:
        return 1 if self._n is None else self._n

    @property
    def n_given(self) -> bool:
        return self._n is not None

    @property
    def r(self) -> int:
        return 0 if self._r is None else self._r

    @property
    def s(self) -> int:
        return 0 if self._s is None else self._s

    @property
    def eta(self) -> complex:
        return 1.0 if self._eta is None else self._eta

    @property
    def L_values(self) -> List[int]:
        return list(self._L_values)

    @property
    def checks(self) -> List[str]:
        return list(self._checks)

    @property
    def params_file(self) -> Optional[Path]:
        return self._params_file

    @property
    def plugin_file(self) -> Optional[Path]:
        return self._plugin_file

    @property
    def out(self) -> Optional[Path]:
        return self._out

    @property
    def output_format(self) -> str:
        return self._output_format

    @property
    def methods(self) -> List[str]:
        return list(self._methods)

    @property
    def rs_list(self) -> List[Tuple[int, int]]:
        if self._rs_list is not None:
            return list(self._rs_list)
        return [(0, 0), (0, 1), (1, 0), (1, 1)]

    @property
    def probe(self) -> bool:
        return self._probe

    @property
    def export_N(self) -> Optional[int]:
        return self._export_N

    @property
    def seed(self) -> int:
        return int(self._config['sampling']['seed'])

    @property
    def dwpf_samples(self) -> int:
        return int(self._config['sampling']['dwpf_samples'])

    @property
    def ybe_samples(self) -> int:
        return int(self._config['sampling']['ybe_samples'])

    @property
    def field_radius(self) -> float:
        return float(self._config['sampling']['field_radius'])

    @property
    def threads(self) -> int:
        return int(self._config['runner']['threads'])

    @property
    def ybe_tol(self) -> float:
        return float(self._config['tolerance']['ybe_tol'])

    @property
    def zero_tol(self) -> float:
        return float(self._config['tolerance']['zero_tol'])

    @property
    def enumeration_cap(self) -> float:
        return float(self._config['caps']['enumeration_assignments'])

    @property
    def memory_bytes(self) -> float:
        return float(self._config['caps']['memory_bytes'])

    def policy(self) -> TolerancePolicy:
        return TolerancePolicy(rel_tol=self._config['tolerance']['rel_tol'],
                               abs_floor=self._config['tolerance']['abs_floor'])

    def to_dict(self) -> Dict[str, Any]:
        """
        The settings that determine a run's results, for the report header.
        """
        document = {
            'command': self._command,
            'model': self._model,
            'L': self.L_values,
            'checks': self.checks,
            'seed': self.seed,
            'tolerance': dict(self._config['tolerance']),
            'caps': dict(self._config['caps']),
            'sampling': dict(self._config['sampling']),
        }
        if self._model == 'ps':
            document.update({'r': self.r, 's': self.s, 'eta': [complex(self.eta).real, complex(self.eta).imag]})
        elif self._model == 'da':
            document.update({'N': self.N, 'n': self.n})
        else:
            document['plugin'] = str(self._plugin_file)
        if self._params_file is not None:
            document['params'] = str(self._params_file)
        return document
