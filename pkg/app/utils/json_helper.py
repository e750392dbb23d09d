import json
from typing import Dict, Any, List, Union
import logging

from pydantic import BaseModel

from app.core.exceptions import InvalidBaseModelError

logger = logging.getLogger(__name__)


class JsonHelper:
    """
    Utility class for JSON operations
    """
    @staticmethod
    def to_json(data: Union[BaseModel, Dict[str, Any], List[Any]]) -> str:
        """
        Deterministic JSON: sorted keys, fixed separators, trailing newline

        Args:
            data: Payload or pydantic model to serialize

        Returns:
            JSON text that is byte-identical for equal payloads
        """
        if isinstance(data, BaseModel):
            data = data.model_dump(mode="json")
        return json.dumps(data, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"

    @staticmethod
    def read_series_file(file_path: str) -> Dict[str, Any]:
        """
        Read a base series in the emitted series format

        Args:
            file_path: JSON file with "max_deg", "coefficients" and optionally "exact"

        Returns:
            Dict with "coefficients" (degree -> value), "max_deg" and "exact"
        """
        try:
            with open(file_path, "r") as f:
                payload = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Error reading series file {file_path}: {str(e)}")
            raise InvalidBaseModelError(f"cannot read {file_path}: {e}", {"path": file_path})
        if not isinstance(payload, dict) or "coefficients" not in payload or "max_deg" not in payload:
            raise InvalidBaseModelError(
                f"{file_path} is not a series file with max_deg and coefficients", {"path": file_path}
            )
        try:
            coefficients = {int(degree): int(value) for degree, value in payload["coefficients"]}
            max_deg = int(payload["max_deg"])
        except (TypeError, ValueError) as e:
            raise InvalidBaseModelError(f"malformed coefficients in {file_path}: {e}", {"path": file_path})
        return {"coefficients": coefficients, "max_deg": max_deg, "exact": bool(payload.get("exact", False))}
