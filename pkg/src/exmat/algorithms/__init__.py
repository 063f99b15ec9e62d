"""Algorithms for ExMat."""

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

from . import bijection
from . import exchange
from . import gf2
from . import partitions
from . import union

from .bijection import *
from .exchange import *
from .gf2 import *
from .partitions import *
from .union import *

__all__ = (bijection.__all__ +
           exchange.__all__ +
           gf2.__all__ +
           partitions.__all__ +
           union.__all__)
