"""Optimal minimum cost covariate adjustment sets, found as minimum cuts of a flow network."""

from .errors import *
from .utils import *
from .graphs import *
from .efficiency import *
from .flow import *
from .optimize import *
from .oracle import *
from .io import read_problem, write_problem, parse_problem, serialize_problem

__version__ = '0.1.0'
