from .independence import *
from .simplex import *
from .fracchrom import *
from .logform import *
from .rates import *
