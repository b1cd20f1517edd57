from .path_utils import assemble_project_path, get_project_root
from .singleton import Singleton
from .utils import (escape_code_brackets,
                    make_json_serializable,
                    round_significant,
                    parse_vector)
from .parallel import resolve_threads, parallel_map

__all__ = [
    "assemble_project_path",
    "get_project_root",
    "Singleton",
    "escape_code_brackets",
    "make_json_serializable",
    "round_significant",
    "parse_vector",
    "resolve_threads",
    "parallel_map",
]
