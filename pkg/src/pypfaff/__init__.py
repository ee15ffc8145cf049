__version__ = '0.1.0'

__all__ = []

from . import exceptions
from .exceptions import *  # noqa F403
from . import config
from .config import *  # noqa F403
from . import combinatorics
from .combinatorics import *  # noqa F403
from . import coords
from .coords import *  # noqa F403
from . import tropical
from .tropical import *  # noqa F403
from . import algebra
from .algebra import *  # noqa F403
from . import fan
from .fan import *  # noqa F403

__all__ += exceptions.__all__
__all__ += config.__all__
__all__ += combinatorics.__all__
__all__ += coords.__all__
__all__ += tropical.__all__
__all__ += algebra.__all__
__all__ += fan.__all__
