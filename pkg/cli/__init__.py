"""
Command-line surface: run configuration, dispatch and report emission.
"""

from cli.models import (
    Command,
    OutputFormat,
    LatticeChoice,
    RunConfig,
    BudgetReport,
    BlockRequirementReport,
)
from cli.emit import emit, render, load_report
from cli.runner import execute, run, report_error

__all__ = [
    'Command',
    'OutputFormat',
    'LatticeChoice',
    'RunConfig',
    'BudgetReport',
    'BlockRequirementReport',
    'emit',
    'render',
    'load_report',
    'execute',
    'run',
    'report_error',
]
