from .graph_core import *
from .confusion import *
