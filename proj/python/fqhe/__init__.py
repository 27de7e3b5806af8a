from ._fqhe import *  # noqa: F401,F403
from ._fqhe import __doc__  # noqa: F401
