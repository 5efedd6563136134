import json
import logging
from pathlib import Path
from typing import List

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.RootOfUnity import RootOfUnity

logger = logging.getLogger(__name__)


class ParameterFileLoader:
    """
    Reads line parameters from JSON documents {u, v, alpha, beta}, each a list of [re, im] pairs.
    alpha and beta may be omitted (all zero).
    """

    def read_file(self, params_file: Path, rho: RootOfUnity = None, eta: complex = None) -> ModelParams:
        if params_file is None:
            raise ConfigError('Invalid value [params_file=None]')

        params_file = Path(params_file)
        if not params_file.exists():
            raise ConfigError(f'Parameter file [{params_file}] does not exist')

        try:
            with open(params_file) as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f'Parameter file is not valid JSON [file={params_file}, error={e}]') from e

        params = self.read_document(document, rho, eta)
        logger.info(f'Read parameters [file={params_file}, L={params.L}]')
        return params

    def read_document(self, document: dict, rho: RootOfUnity = None, eta: complex = None) -> ModelParams:
        if not isinstance(document, dict):
            raise ConfigError(f'Parameter document must be an object [type={type(document).__name__}]')

        missing = [field for field in ['u', 'v'] if field not in document]
        if missing:
            raise ConfigError(f'Parameter document is missing fields [missing={missing}]')

        values = {field: self._complex_list(document[field], field)
                  for field in ['u', 'v', 'alpha', 'beta'] if field in document}
        return ModelParams(rho=rho, eta=eta, **values)

    def _complex_list(self, pairs, field: str) -> List[complex]:
        if not isinstance(pairs, list):
            raise ConfigError(f'Parameter must be a list of [re, im] pairs [{field}={pairs!r}]')

        values = []
        for pair in pairs:
            if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(p, (int, float)) for p in pair):
                raise ConfigError(f'Parameter must be a list of [re, im] pairs [{field}={pairs!r}]')
            values.append(complex(pair[0], pair[1]))
        return values
