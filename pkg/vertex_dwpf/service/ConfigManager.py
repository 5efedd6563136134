import copy
import logging
import shutil
from datetime import datetime
from os import path
from pathlib import Path
from typing import Any, Dict

import yaml

from vertex_dwpf.exceptions import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    'tolerance': {
        'rel_tol': 1e-9,
        'abs_floor': 1e-12,
        'ybe_tol': 1e-10,
        'zero_tol': 1e-8,
    },
    'caps': {
        'enumeration_assignments': 1e8,
        'memory_bytes': 2 * 1024 ** 3,
    },
    'sampling': {
        'seed': 20240229,
        'ybe_samples': 100,
        'dwpf_samples': 25,
        'field_radius': 0.9,
    },
    'runner': {
        'threads': 1,
    },
}


class ConfigManager:

    def __init__(self, dwpf_home: Path):
        if dwpf_home is None:
            raise ConfigError('Invalid value [dwpf_home=None]')

        self._dwpf_home = Path(dwpf_home)
        self._config_file = self._dwpf_home / 'config' / 'vertex-dwpf.yaml'

    @property
    def config_file(self) -> Path:
        return self._config_file

    def read_config(self) -> Dict[str, Any]:
        """
        Reads the config file and returns a dictionary of the values, with defaults for missing keys.
        :return: A dictionary of the values.
        """
        if not self._config_file.exists():
            raise ConfigError(f'Config file [{self._config_file}] does not exist')

        with open(self._config_file) as file:
            try:
                config = yaml.load(file, Loader=yaml.FullLoader)
            except yaml.YAMLError as e:
                raise ConfigError(f'Could not parse config file [{self._config_file}]: {e}') from e

        if config is None:
            config = {}
        if not isinstance(config, dict):
            raise ConfigError(f'Config file [{self._config_file}] must contain a mapping')

        return self._with_defaults(config)

    def read_config_or_defaults(self) -> Dict[str, Any]:
        if self._config_file.exists():
            return self.read_config()
        logger.debug(f'No config file [{self._config_file}], using defaults')
        return copy.deepcopy(DEFAULT_CONFIG)

    def _with_defaults(self, config: Dict[str, Any]) -> Dict[str, Any]:
        merged = copy.deepcopy(DEFAULT_CONFIG)
        for section, values in config.items():
            if section not in merged:
                logger.warning(f'Ignoring unknown config section [{section}]')
                continue
            if not isinstance(values, dict):
                raise ConfigError(f'Config section must be a mapping [{section}={values!r}]')
            for key, value in values.items():
                if key not in merged[section]:
                    logger.warning(f'Ignoring unknown config key [{section}.{key}]')
                    continue
                merged[section][key] = value
        return merged

    def write_example_config(self):
        """
        Writes an example configuration file to the previously set home directory.
        :return: None.
        """
        backup_timepart = datetime.now().strftime('%Y%m%d-%H%M%S')

        if self._config_file.exists():
            backup_config = f'{self._config_file}.{backup_timepart}.bak'
            logger.warning(f'File [{self._config_file}] exists, backing up to [{backup_config}]')
            shutil.copy(self._config_file, backup_config)

        self._config_file.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy(Path(path.dirname(__file__)) / 'config' / 'vertex-dwpf.yaml', self._config_file)
        logger.info(f'Wrote example configuration to [{self._config_file}]')
