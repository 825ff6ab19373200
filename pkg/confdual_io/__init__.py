from .file_io import *
from .graph_io import *
from .code_io import *
