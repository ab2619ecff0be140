from .fermat import *  # noqa: F401,F403
from .projective import *  # noqa: F401,F403
from .presets import *  # noqa: F401,F403
