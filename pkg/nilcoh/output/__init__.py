"""
Report rendering and file handling.
"""

from .text_output import TextOutput
from .file_output import FileOutput
