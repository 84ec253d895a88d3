"""
Sign scanning of Z(t), Gram-block classification and certification of zero counts.
"""

from scanner.models import ScanPolicy, SignBracket, ScanGrid, GramBlock, CertificationReport
from scanner.scan import scan, scan_interval, count_zeros
from scanner.blocks import classify_blocks, rosser_ok, parity_ok
from scanner.certify import certify

__all__ = [
    'ScanPolicy',
    'SignBracket',
    'ScanGrid',
    'GramBlock',
    'CertificationReport',
    'scan',
    'scan_interval',
    'count_zeros',
    'classify_blocks',
    'rosser_ok',
    'parity_ok',
    'certify',
]
