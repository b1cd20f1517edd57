from pathlib import Path
import os


def get_project_root() -> str:
    return str(Path(__file__).resolve().parents[2])


def assemble_project_path(path: str) -> str:
    """Resolve a path relative to the project root directory"""
    if not os.path.isabs(path):
        candidate = os.path.join(get_project_root(), path)
        # prefer a path that exists relative to the working directory
        if os.path.exists(path) and not os.path.exists(candidate):
            return os.path.abspath(path)
        path = candidate
    return path
