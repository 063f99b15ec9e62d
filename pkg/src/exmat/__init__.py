r"""

$$$$$$$$\            $$\      $$\            $$\
$$  _____|           $$$\    $$$ |           $$ |
$$ |      $$\   $$\  $$$$\  $$$$ | $$$$$$\ $$$$$$\
$$$$$\    \$$\ $$  | $$\$$\$$ $$ | \____$$\\_$$  _|
$$  __|    \$$$$  /  $$ \$$$  $$ | $$$$$$$ | $$ |
$$ |       $$  $$<   $$ |\$  /$$ |$$  __$$ | $$ |$$\
$$$$$$$$\ $$  /\$$\  $$ | \_/ $$ |\$$$$$$$ | \$$$$  |
\________|\__/  \__| \__|     \__| \_______|  \____/

ExMat - Python package for matroid base exchange.

Constructive symmetric, partition and serial base exchange for matroids
given by independence oracles, the subset bijection built on serial
exchange, brute-force oracles for small instances, and an exhaustive check
of the infinite-graph counterexample on finite truncations.
"""

from __future__ import absolute_import

# import top-level submodules
from . import algorithms
from . import cli
from . import counterexample
from . import matroid
from . import models
from . import oracle
from . import utils

try:
    from exmat._version import version as __version__
except ImportError:
    __version__ = '0.0.0'

# import top-level attributes
from .algorithms import *
from .counterexample import *
from .matroid import *
from .models import *
from .oracle import *
from .utils import *

__all__ = (
    algorithms.__all__
    + counterexample.__all__
    + matroid.__all__
    + models.__all__
    + oracle.__all__
    + utils.__all__
) + ["__version__"]


def __dir__():
    return __all__
