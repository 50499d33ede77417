"""Coding schemes over the amplitude damping channel.

Thin wrapper around the compiled extension; see the project README for the
full C++ API and the command-line interface.
"""

from ._adclab import *  # noqa: F401,F403
from ._adclab import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
