"""Command-line surface, JSON serialization, SVG plots and the HTTP server."""

from .cli import cmd_cubic, cmd_family, cmd_serve, main
from .records import (SCHEMA_CUBICS, SCHEMA_ERROR, SCHEMA_FAMILY,
                      SCHEMA_PROBLEM, SCHEMA_RECORD, dumps, load_problem,
                      parse_problem_obj)

__all__ = ["cmd_family", "cmd_cubic", "cmd_serve", "main", "dumps",
           "load_problem", "parse_problem_obj", "SCHEMA_PROBLEM",
           "SCHEMA_RECORD", "SCHEMA_FAMILY", "SCHEMA_CUBICS", "SCHEMA_ERROR"]
