from typing import Dict, List, Sequence
import logging

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)


class MatrixHelper:
    """
    Exact linear algebra over the rationals
    """
    @staticmethod
    def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
        """
        Rank of an integer matrix, computed over QQ

        Args:
            rows: Matrix rows, each of length ncols
            ncols: Number of columns

        Returns:
            The rank (0 for an empty matrix)
        """
        if not rows or ncols == 0:
            return 0
        matrix = DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(rows), ncols), ZZ)
        return matrix.to_field().rank()

    @staticmethod
    def rank_of_sparse(rows: List[Dict[int, int]], ncols: int) -> int:
        """
        Rank of a matrix given as sparse rows {column: value}
        """
        dense = []
        for row in rows:
            if not row:
                continue
            line = [0] * ncols
            for column, value in row.items():
                line[column] = value
            dense.append(line)
        return MatrixHelper.rank(dense, ncols)
