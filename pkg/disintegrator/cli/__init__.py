# CLI Module
from .main import cli
from .parsing import parse_bits, parse_point, parse_range, parse_region, probe_regions
from .reports import ErrorObject, Report, RunConfig, exit_code_of

__all__ = [
    "cli",
    "parse_bits", "parse_point", "parse_range", "parse_region", "probe_regions",
    "ErrorObject", "Report", "RunConfig", "exit_code_of",
]
