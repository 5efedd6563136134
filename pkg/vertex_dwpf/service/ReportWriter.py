import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.VerificationReport import VerificationReport

logger = logging.getLogger(__name__)

FORMATS = ['json', 'csv']

CSV_COLUMNS = ['name', 'L', 'samples', 'max_residual', 'mean_residual', 'tolerance', 'pass', 'notes']


class ReportWriter:
    """
    Serializes verification reports as a JSON document {config, checks} or as a CSV table with one row per check.
    """

    def __init__(self, output_format: str = 'json', include_timestamp: bool = False):
        if output_format not in FORMATS:
            raise ConfigError(f'Unknown output format [format={output_format}, available={FORMATS}]')
        self._format = output_format
        self._include_timestamp = include_timestamp

    def to_dataframe(self, reports: List[VerificationReport]) -> pd.DataFrame:
        rows = []
        for report in reports:
            row = report.to_dict()
            row['L'] = report.model.get('L')
            row['notes'] = '; '.join(row['notes'])
            rows.append(row)
        return pd.DataFrame(rows, columns=CSV_COLUMNS)

    def to_document(self, reports: List[VerificationReport], config: Dict[str, Any]) -> Dict[str, Any]:
        document = {
            'config': config,
            'checks': [report.to_dict() for report in reports],
        }
        if self._include_timestamp:
            document['generated'] = datetime.now().isoformat()
        return document

    def render(self, reports: List[VerificationReport], config: Dict[str, Any]) -> str:
        if self._format == 'json':
            return json.dumps(self.to_document(reports, config), indent=2, sort_keys=True) + '\n'
        else:
            return self.to_dataframe(reports).to_csv(index=False)

    def write(self, reports: List[VerificationReport], config: Dict[str, Any], out: Optional[Path]) -> str:
        """
        Renders the reports and writes them to out, if given.
        :return: The rendered text.
        """
        text = self.render(reports, config)
        if out is not None:
            with open(out, 'w') as f:
                f.write(text)
            logger.info(f'Wrote {len(reports)} reports to [{out}]')
        return text

    @staticmethod
    def write_table(df: pd.DataFrame, out: Optional[Path], output_format: str = 'csv') -> str:
        """
        Writes a table of computed values or timings.
        """
        if output_format == 'json':
            text = df.to_json(orient='records', indent=2) + '\n'
        else:
            text = df.to_csv(index=False)

        if out is not None:
            with open(out, 'w') as f:
                f.write(text)
            logger.info(f'Wrote table with {len(df)} rows to [{out}]')
        return text
