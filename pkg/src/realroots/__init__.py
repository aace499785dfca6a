"""Certified real-root counting, isolation and interval evaluation."""

from .evaluation import certified_sign, enclose, interval_eval_rational
from .intervals import RatInterval
from .isolation import IsolatedRoot, find_root, isolate_roots, refine
from .sturm import SturmChain, count_roots, sturm_chain

__all__ = [
    "IsolatedRoot",
    "RatInterval",
    "SturmChain",
    "certified_sign",
    "count_roots",
    "enclose",
    "find_root",
    "interval_eval_rational",
    "isolate_roots",
    "refine",
    "sturm_chain",
]
