"""
Render reports as JSON documents or TSV tables.
"""

import io
import json

import numpy as np
import pandas as pd

SCHEMA = "nilcoh/1"


def _plain(value):
    """Convert numpy scalars and tuples for json"""
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"Cannot serialise {type(value).__name__}")


class TextOutput:
    """Format command reports for display or saving"""

    @staticmethod
    def build_report(command, config, status, provenance, payload):
        """
        Assemble the versioned report document.

        Parameters:
        command (str): Subcommand name
        config (dict): Resolved run configuration
        status (str): 'ok', 'pass' or 'fail'
        provenance (dict): Report section -> producing operation
        payload (dict): Command specific sections

        Returns:
        dict: Report
        """
        report = {
            'schema': SCHEMA,
            'command': command,
            'config': config,
            'status': status,
            'provenance': provenance,
        }
        report.update(payload)
        return report

    @staticmethod
    def format_json(report):
        return json.dumps(report, sort_keys=True, indent=2, default=_plain) + "\n"

    @staticmethod
    def format_tsv(sections):
        """
        One table per section.

        Parameters:
        sections (list): (name, reference, rows) with rows a list of flat dicts

        Returns:
        str: Tables separated by blank lines
        """
        output = []
        for name, reference, rows in sections:
            buffer = io.StringIO()
            buffer.write(f"# section: {name} ({reference})\n")
            frame = pd.DataFrame(rows)
            for column in frame.columns:
                frame[column] = frame[column].map(
                    lambda v: ",".join(str(x) for x in v) if isinstance(v, (list, tuple)) else v)
            frame.to_csv(buffer, sep="\t", index=False)
            output.append(buffer.getvalue())
        return "\n".join(output)
