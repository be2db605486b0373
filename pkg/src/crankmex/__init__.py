"""Partition crank and mex statistics with exact q-series verification."""

from .partitions import (
    EMPTY,
    FrobeniusSymbol,
    Partition,
    PartitionError,
    conjugate,
    crank,
    enumerate_partitions,
    frobenius,
    from_frobenius,
    mex,
    parse_partition,
)
from .qseries import Series, ZSeries, XYSeries

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "FrobeniusSymbol",
    "Partition",
    "PartitionError",
    "Series",
    "XYSeries",
    "ZSeries",
    "conjugate",
    "crank",
    "enumerate_partitions",
    "frobenius",
    "from_frobenius",
    "mex",
    "parse_partition",
]
