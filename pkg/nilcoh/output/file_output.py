"""
Write rendered reports to a file or to stdout.
"""

import logging
import os
import sys

logger = logging.getLogger(__name__)


class FileOutput:
    """Handle writing reports"""

    def __init__(self, path=None):
        """
        Parameters:
        path (str, optional): Target file; stdout when omitted or '-'
        """
        self.path = None if path in (None, '-') else path

    def _ensure_output_folder(self):
        folder = os.path.dirname(self.path)
        if folder:
            os.makedirs(folder, exist_ok=True)

    def write(self, content):
        """
        Write content and return where it went.

        Returns:
        str: File path, or '<stdout>'
        """
        if self.path is None:
            sys.stdout.write(content)
            sys.stdout.flush()
            return '<stdout>'
        self._ensure_output_folder()
        with open(self.path, 'w') as f:
            f.write(content)
        logger.info("Saved report to %s", self.path)
        return self.path
