"""Utility functions for various purposes relating to the uses of ExMat."""

#  _    _ _______ _____ _       _____
# | |  | |__   __|_   _| |     / ____|
# | |  | |  | |    | | | |    | (___
# | |  | |  | |    | | | |     \___ \
# | |__| |  | |   _| |_| |____ ____) |
#  \____/   |_|  |_____|______|_____/

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

from . import data_utils
from . import generic_utils
from . import graph_utils

from .data_utils import *
from .generic_utils import *
from .graph_utils import *

__all__ = (generic_utils.__all__ +
           graph_utils.__all__ +
           ['FormatError'])
