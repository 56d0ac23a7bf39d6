from seminormal.cli.config import EMIT_OBJECTS, OutputFormat, RunConfig
from seminormal.cli.main import build_parser, main, parse_config, run_shape

__all__ = [
    "EMIT_OBJECTS",
    "OutputFormat",
    "RunConfig",
    "build_parser",
    "main",
    "parse_config",
    "run_shape",
]
