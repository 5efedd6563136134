import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from vertex_dwpf.exceptions import PluginFormatError, IndexRangeError
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model.weights.DAWeightTable import DAWeightTable
from vertex_dwpf.model.weights.FormulaCompiler import FormulaCompiler, DEFAULT_COMPILER

logger = logging.getLogger(__name__)

INDEX_FIELDS = ['iota1', 'iota2', 'kappa2', 'kappa1']

MIN_PLUGIN_N = 5


class PluginTableLoader:
    """
    Reads external Deguchi-Akutsu weight tables from JSON documents {N, n, entries: [{iota1, iota2, kappa2,
    kappa1, formula}]}.
    """

    def __init__(self, compiler: FormulaCompiler = DEFAULT_COMPILER):
        self._compiler = compiler

    def read_file(self, plugin_file: Path, allow_builtin_sizes: bool = False) -> DAWeightTable:
        if plugin_file is None:
            raise PluginFormatError('Invalid value [plugin_file=None]')

        plugin_file = Path(plugin_file)
        if not plugin_file.exists():
            raise PluginFormatError(f'Plugin file [{plugin_file}] does not exist')

        try:
            with open(plugin_file) as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            raise PluginFormatError(f'Plugin file is not valid JSON [file={plugin_file}, error={e}]') from e

        table = self.read_document(document, allow_builtin_sizes)
        logger.info(f'Loaded plugin table [file={plugin_file}, N={table.N}, n={table.rho.n}, entries={len(table)}]')
        return table

    def read_document(self, document: Dict[str, Any], allow_builtin_sizes: bool = False) -> DAWeightTable:
        if not isinstance(document, dict):
            raise PluginFormatError(f'Plugin document must be an object [type={type(document).__name__}]')

        missing = [field for field in ['N', 'entries'] if field not in document]
        if missing:
            raise PluginFormatError(f'Plugin document is missing fields [missing={missing}]')

        return self.register_plugin_table(document['N'], document['entries'], document.get('n', 1),
                                          allow_builtin_sizes)

    def register_plugin_table(self, N: int, entries: List[Dict[str, Any]], n: int = 1,
                              allow_builtin_sizes: bool = False) -> DAWeightTable:
        """
        Builds a table from entry definitions. No correctness of the weights is assumed.
        :param N: The number of states, at least 5 (2 to 4 only with allow_builtin_sizes).
        :param entries: A list of {iota1, iota2, kappa2, kappa1, formula} definitions.
        :param n: The exponent of the root of unity rho = e^{2 pi i n / N}.
        :param allow_builtin_sizes: Accept the sizes that have built-in tables, for self-tests.
        :return: The weight table.
        """
        if not isinstance(N, int) or isinstance(N, bool):
            raise PluginFormatError(f'N must be an integer [N={N!r}]')
        if not isinstance(n, int) or isinstance(n, bool):
            raise PluginFormatError(f'n must be an integer [n={n!r}]')

        minimum = 2 if allow_builtin_sizes else MIN_PLUGIN_N
        if N < minimum:
            raise IndexRangeError(f'Plugin tables need N >= {minimum} [N={N}]')

        if not isinstance(entries, list):
            raise PluginFormatError(f'Entries must be a list [entries={type(entries).__name__}]')

        rho = RootOfUnity(n, N)
        formulas = {}
        for position, entry in enumerate(entries):
            if not isinstance(entry, dict):
                raise PluginFormatError(f'Entry must be an object [position={position}]')
            missing = [field for field in INDEX_FIELDS + ['formula'] if field not in entry]
            if missing:
                raise PluginFormatError(f'Entry is missing fields [position={position}, missing={missing}]')

            idx = tuple(entry[field] for field in INDEX_FIELDS)
            if not all(isinstance(i, int) and not isinstance(i, bool) for i in idx):
                raise PluginFormatError(f'Entry indices must be integers [position={position}, idx={idx}]')
            if any(i < 1 or i > N for i in idx):
                raise IndexRangeError(f'Index out of range [position={position}, idx={idx}, N={N}]')
            if idx in formulas:
                raise PluginFormatError(f'Duplicate entry [position={position}, idx={idx}]')

            formulas[idx] = entry['formula']

        table = DAWeightTable(rho, formulas, source='plugin', compiler=self._compiler)
        if not table.has_required_entries():
            logger.warning(f'Plugin table lacks c_plus, a_plus or a_minus [N={N}, entries={len(table)}]')
        return table


def register_plugin_table(N: int, entries: List[Dict[str, Any]], n: int = 1,
                          allow_builtin_sizes: bool = False) -> DAWeightTable:
    return PluginTableLoader().register_plugin_table(N, entries, n, allow_builtin_sizes)
