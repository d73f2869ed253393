# utils/file_ops.py

import os
import shutil

import yaml

from ..exceptions import ReportFormatError


def atomic_write_yaml(path: str, data: dict) -> None:
    """Write YAML atomically to avoid partial reports."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    temp_path = f"{path}.tmp"
    with open(temp_path, 'w') as f:
        yaml.safe_dump(data, f, sort_keys=False)
    safe_rename(temp_path, path)


def atomic_read_yaml(path: str) -> dict:
    """Read a YAML report or fixture.

    Raises:
        ReportFormatError: If the file is missing or is not a YAML mapping.
    """
    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ReportFormatError(f"Failed to read {path}: {e}")
    if not isinstance(data, dict):
        raise ReportFormatError(f"{path} does not hold a YAML mapping")
    return data


def dump_yaml(data: dict) -> str:
    return yaml.safe_dump(data, sort_keys=False)


def safe_rename(src: str, dst: str) -> None:
    """Atomic rename with a fallback for cross-device renames."""
    try:
        os.replace(src, dst)
    except OSError:
        shutil.move(src, dst)

