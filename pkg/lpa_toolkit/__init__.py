"""
Leavitt path algebra toolkit - symbolic arithmetic in L_K(E), graded ideals
and graph properties, with a command-line interface
"""

import os
from pathlib import Path

from lpa_toolkit.algebra.field import Field, parse_field
from lpa_toolkit.services.exceptions import ValidationError


PROJECT_ROOT = Path(__file__).parent.parent

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Config:
    """Configuration read from LPA_* environment variables, each with a default"""

    def __init__(self):
        self.field: Field = parse_field(self._env('LPA_FIELD', 'q'))

        self.log_level = self._env('LPA_LOG_LEVEL', 'WARNING').upper()
        if self.log_level not in _LOG_LEVELS:
            raise ValidationError(f"LPA_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}, got {self.log_level!r}")

        depth = self._env('LPA_DESINGULARIZE_DEPTH', '3')
        if not depth.isdigit() or int(depth) < 1:
            raise ValidationError(f"LPA_DESINGULARIZE_DEPTH must be a positive integer, got {depth!r}")
        self.desingularize_depth = int(depth)

        diagnostics = self._env('LPA_LATTICE_DIAGNOSTICS', '0')
        if diagnostics not in ('0', '1'):
            raise ValidationError(f"LPA_LATTICE_DIAGNOSTICS must be 0 or 1, got {diagnostics!r}")
        self.lattice_diagnostics = diagnostics == '1'

    def _env(self, var_name: str, default: str) -> str:
        """Environment variable, or the default when unset or blank"""
        value = os.environ.get(var_name, '').strip()
        return value or default
