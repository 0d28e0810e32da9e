
import os
import sys
import json
import yaml
import pandas as pd
from typing import Any, Dict, List

from src.logger import logging
from src.exception import CustomException


def _ensure_parent(file_path: str) -> None:
    parent = os.path.dirname(file_path)
    if parent:
        os.makedirs(parent, exist_ok=True)


def load_json(file_path: str) -> Dict:
    """
    Load a JSON file.

    Args:
        file_path: Path to the JSON file

    Returns:
        dict: Parsed JSON data

    Raises:
        CustomException: If file not found or loading fails
    """
    try:
        logging.info(f"Loading JSON file from: {file_path}")

        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")

        with open(file_path, 'r') as f:
            data = json.load(f)

        logging.info(f"Successfully loaded JSON file: {file_path}")
        return data

    except Exception as e:
        raise CustomException(e, sys)


def dump_json(data: Any, indent: int = 2) -> str:
    """
    Serialise data to a deterministic JSON string (sorted keys, trailing newline).

    Args:
        data: JSON-compatible object
        indent: Indentation for pretty printing

    Returns:
        str: JSON text
    """
    try:
        return json.dumps(data, indent=indent, sort_keys=True) + "\n"
    except Exception as e:
        raise CustomException(e, sys)


def save_json(data: Dict, file_path: str, indent: int = 2) -> None:
    """
    Save data to a JSON file.

    Args:
        data: Dictionary to save
        file_path: Path where to save the JSON file
        indent: Indentation for pretty printing

    Raises:
        CustomException: If saving fails
    """
    try:
        logging.info(f"Saving JSON file to: {file_path}")

        _ensure_parent(file_path)

        with open(file_path, 'w') as f:
            f.write(dump_json(data, indent=indent))

        logging.info(f"Successfully saved JSON file: {file_path}")

    except Exception as e:
        raise CustomException(e, sys)


def load_yaml(file_path: str) -> Dict:
    """
    Load a YAML file.

    Args:
        file_path: Path to the YAML file

    Returns:
        dict: Parsed YAML mapping (empty dict for an empty file)

    Raises:
        CustomException: If file not found or parsing fails
    """
    try:
        logging.info(f"Loading YAML file from: {file_path}")

        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")

        with open(file_path, 'r') as f:
            data = yaml.safe_load(f) or {}

        logging.info(f"Successfully loaded YAML file: {file_path}")
        return data

    except Exception as e:
        raise CustomException(e, sys)


def load_text_file(file_path: str) -> List[str]:
    """
    Load a text file and return its non-empty lines.

    Args:
        file_path: Path to the text file

    Returns:
        list: List of stripped, non-empty lines from the file

    Raises:
        CustomException: If file not found or loading fails
    """
    try:
        logging.info(f"Loading text file from: {file_path}")

        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")

        with open(file_path, 'r') as f:
            lines = [line.strip() for line in f.readlines()]
        lines = [line for line in lines if line]

        logging.info(f"Successfully loaded {len(lines)} lines from: {file_path}")
        return lines

    except Exception as e:
        raise CustomException(e, sys)


def save_text_file(text: str, file_path: str) -> None:
    """
    Write text to a file, creating parent directories as needed.

    Args:
        text: Content to write
        file_path: Destination path
    """
    try:
        _ensure_parent(file_path)
        with open(file_path, 'w') as f:
            f.write(text)
        logging.info(f"Wrote {len(text)} characters to: {file_path}")
    except Exception as e:
        raise CustomException(e, sys)


def frame_to_csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    """
    Render rows as CSV text with a fixed column order.

    Args:
        rows: List of flat dictionaries
        columns: Column order of the output

    Returns:
        str: CSV text (header included, no index column)
    """
    try:
        df = pd.DataFrame(rows, columns=columns)
        return df.to_csv(index=False, lineterminator="\n")
    except Exception as e:
        raise CustomException(e, sys)
