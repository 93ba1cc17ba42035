"""Exact transfinite ordinal arithmetic centred on the Hessenberg natural sum."""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .syntax import parse_ordinal, print_ordinal

__all__ = list(_core_all) + ["parse_ordinal", "print_ordinal"]
__version__ = "0.1.0"
