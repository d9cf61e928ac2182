"""Exact distributions and stochastic-order checks for random extremes of
dependent Kumaraswamy-G samples."""

from .baseline import Baseline
from .copula import Generator
from .extremes import ExtremeModel, NDist, Side
from .kwg import KwGParams, ParamVector
from .orders import OrderKind, OrderReport, Verdict, check_order

__all__ = [
    "Baseline",
    "Generator",
    "ExtremeModel",
    "NDist",
    "Side",
    "KwGParams",
    "ParamVector",
    "OrderKind",
    "OrderReport",
    "Verdict",
    "check_order",
]
