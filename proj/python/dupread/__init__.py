"""Codes correcting tandem duplications in sliding-window composition read
vectors: read/derivative transforms, the duplication channel, both code
constructions, and the asymptotic-rate engine."""

from ._dupread import *  # noqa: F401,F403
from ._dupread import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
