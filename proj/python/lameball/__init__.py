from ._lameball import *  # noqa: F401,F403
from ._lameball import __doc__  # noqa: F401
