from ._phylo import *  # noqa: F401,F403
from ._phylo import __doc__  # noqa: F401
