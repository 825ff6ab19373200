from .coding import *
from .guessing import *
