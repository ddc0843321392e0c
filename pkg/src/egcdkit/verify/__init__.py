# flake8: noqa

from .checks import *
from .oracle import *
from .suites import *
from .trace import *
