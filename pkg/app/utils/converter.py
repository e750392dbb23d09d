from typing import Any, Dict, List, Optional
import io
import logging

import pandas as pd

from app.models.series import LaurentWindow

logger = logging.getLogger(__name__)


class Converter:
    """
    Utility class for converting computed series into payloads and tables
    """
    @staticmethod
    def series_fields(series: LaurentWindow) -> Dict[str, Any]:
        """
        Schema fields of a series: window bounds and nonzero [degree, value] pairs

        Args:
            series: The series to serialize

        Returns:
            Dict with min_deg, max_deg and coefficients (plus weights when bigraded)
        """
        fields: Dict[str, Any] = {
            "min_deg": series.min_deg,
            "max_deg": series.max_deg,
            "coefficients": [[d, c] for d, c in series.coefficients()],
        }
        if series.bigraded:
            fields["weights"] = [[d, w, c] for d, w, c in series.terms()]
        return fields

    @staticmethod
    def coefficients_to_frame(coefficients: List[List[int]], weights: Optional[List[List[int]]] = None) -> pd.DataFrame:
        """
        Flatten [degree, value] pairs (or [degree, weight, value] triples) into a table
        """
        if weights:
            return pd.DataFrame(weights, columns=["degree", "weight", "value"])
        return pd.DataFrame(coefficients, columns=["degree", "value"])

    @staticmethod
    def payload_to_csv(payload: Dict[str, Any]) -> str:
        """
        CSV rendering of a series-valued payload

        Args:
            payload: A payload with "coefficients" and optionally "weights"

        Returns:
            CSV text with a header row and "\\n" line endings
        """
        frame = Converter.coefficients_to_frame(payload.get("coefficients", []), payload.get("weights"))
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
