import os, random, numpy as np
from dataclasses import dataclass, replace

from .type_check import ispositiveinteger

MAX_BITS_ENV = 'CONFDUAL_MAX_BITS'

@dataclass(frozen=True)
class Caps(object):
	'''
	size and time limits guarding every exact computation

	max_bits:				total bits sum(t) of a confusion graph
	max_vertices:			vertices of an explicit undirected graph (products, materialized confusion graphs)
	lp_max_vertices:		vertices accepted by the fractional chromatic LP
	coloring_max_vertices:	vertices accepted by the exact chromatic search
	bfold_exact_vertices:	largest graph whose b-fold chromatic number is searched exactly
	max_fold:				largest b accepted by the b-fold bound
	exhaustive_max_bits:	largest sum(t) scanned exhaustively by strategy and code verification
	timeout:				seconds per solver call, None for no limit
	'''
	max_bits: int = 20
	max_vertices: int = 1 << 20
	lp_max_vertices: int = 1 << 12
	coloring_max_vertices: int = 1 << 10
	bfold_exact_vertices: int = 32
	max_fold: int = 4
	exhaustive_max_bits: int = 20
	timeout: float = None

def get_default_caps(environ=None, debug=True):
	'''
	default caps, the bit cap can be overridden by the CONFDUAL_MAX_BITS environment variable
	'''
	if environ is None: environ = os.environ
	caps = Caps()
	if MAX_BITS_ENV in environ:
		max_bits = int(environ[MAX_BITS_ENV])
		if debug: assert ispositiveinteger(max_bits), '%s must be a positive integer' % MAX_BITS_ENV
		caps = replace(caps, max_bits=max_bits)
	return caps

def update_caps(caps, **overrides):
	'''
	return a copy of caps with the given non-None fields replaced
	'''
	overrides = {key: value for key, value in overrides.items() if value is not None}
	for key, value in overrides.items():
		if key != 'timeout': assert ispositiveinteger(value), 'cap %s must be a positive integer' % key
		else: assert value > 0, 'the timeout must be positive'
	return replace(caps, **overrides)

def prepare_seed(rand_seed):
	np.random.seed(rand_seed)
	random.seed(rand_seed)

def make_rng(seed):
	'''
	a numpy random generator, deterministic for a given seed
	'''
	return np.random.RandomState(seed)
