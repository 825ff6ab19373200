from .report import *
from .commands import *
from .main import *
