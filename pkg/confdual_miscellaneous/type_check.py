# this file includes functions checking the datatype and value of input variables
import os, sys, numpy as np
from fractions import Fraction

############################################################# basic and customized datatype
# note:
#       the boolean value True and False are the scalar value 1 and 0 respectively
def isstring(string_test):
	if sys.version_info[0] < 3:
		return isinstance(string_test, basestring)
	else:
		return isinstance(string_test, str)

def islist(list_test):
	return isinstance(list_test, list)

def islogical(logical_test):
	return isinstance(logical_test, bool)

def isnparray(nparray_test):
	return isinstance(nparray_test, np.ndarray)

def istuple(tuple_test):
	return isinstance(tuple_test, tuple)

def isdict(dict_test):
	return isinstance(dict_test, dict)

def isset(set_test):
	return isinstance(set_test, (set, frozenset))

def issequence(sequence_test):
	'''
	a list or a tuple
	'''
	return islist(sequence_test) or istuple(sequence_test)

############################################################# value
def isinteger(integer_test):
	if isnparray(integer_test): return False
	if isinstance(integer_test, (int, np.integer)): return True
	if isinstance(integer_test, Fraction): return integer_test.denominator == 1
	try: return isinstance(integer_test, float) and int(integer_test) == integer_test
	except (ValueError, OverflowError): return False

def isfloat(float_test):
	return isinstance(float_test, float)

def ispositiveinteger(integer_test):
	return isinteger(integer_test) and integer_test > 0

def isnonnegativeinteger(integer_test):
	return isinteger(integer_test) and integer_test >= 0

def isrational(rational_test):
	'''
	an exact rational: python integer or Fraction, floats are not exact and therefore rejected
	'''
	if islogical(rational_test): return False
	return isinstance(rational_test, (int, np.integer, Fraction))

def isnonnegativerational(rational_test):
	return isrational(rational_test) and rational_test >= 0

def isprobability(probability_test):
	try: return (isrational(probability_test) or isfloat(probability_test)) and 0 <= probability_test <= 1
	except TypeError: return False

############################################################# list
def islistofnonnegativeinteger(list_test):
	if not issequence(list_test): return False
	return all(isnonnegativeinteger(tmp) for tmp in list_test) and len(list_test) > 0

def islistofpositiveinteger(list_test):
	if not issequence(list_test): return False
	return all(ispositiveinteger(tmp) for tmp in list_test) and len(list_test) > 0

############################################################# combinatorial objects
def isblocklengths(t_test, n=None):
	'''
	a tuple of nonnegative integers (bits per node), with length n if n is given
	'''
	if not issequence(t_test): return False
	if n is not None and len(t_test) != n: return False
	return all(isnonnegativeinteger(tmp) for tmp in t_test)

def isbittuple(blocks_test, t):
	'''
	a tuple of per-node blocks where block j is an integer in [0, 2^t_j)
	'''
	if not issequence(blocks_test) or len(blocks_test) != len(t): return False
	return all(isnonnegativeinteger(block) and block < (1 << bits) for block, bits in zip(blocks_test, t))

def isvertexset(set_test, vertex_count):
	'''
	an iterable of vertex indices in [0, vertex_count)
	'''
	try: return all(isnonnegativeinteger(v) and v < vertex_count for v in set_test)
	except TypeError: return False

############################################################# path
# note:
#		empty path is not valid, a path of whitespace ' ' is valid
def is_path_valid(pathname):
	try:
		if not isstring(pathname) or not pathname: return False
	except TypeError: return False
	else: return True

def is_path_creatable(pathname):
	'''
	if any previous level of parent folder exists, returns true
	'''
	if not is_path_valid(pathname): return False
	pathname = os.path.normpath(pathname)
	pathname = os.path.dirname(os.path.abspath(pathname))

	# recursively to find the previous level of parent folder existing
	while not is_path_exists(pathname):
		pathname_new = os.path.dirname(os.path.abspath(pathname))
		if pathname_new == pathname: return False
		pathname = pathname_new
	return os.access(pathname, os.W_OK)

def is_path_exists(pathname):
	try: return is_path_valid(pathname) and os.path.exists(pathname)
	except OSError: return False

def is_path_exists_or_creatable(pathname):
	try: return is_path_exists(pathname) or is_path_creatable(pathname)
	except OSError: return False

def isfolder(pathname):
	'''
	if '.' exists in the subfolder, the function still justifies it as a folder. e.g., /mnt/dome/adhoc_0.5x/abc is a folder
	if '.' exists after all slashes, the function will not justify is as a folder. e.g., /mnt/dome/adhoc_0.5x is NOT a folder
	'''
	if is_path_valid(pathname):
		pathname = os.path.normpath(pathname)
		if pathname == './' or pathname == '.': return True
		name = os.path.splitext(os.path.basename(pathname))[0]
		ext = os.path.splitext(pathname)[1]
		return len(name) > 0 and len(ext) == 0
	else: return False

def isscalar_like(scalar_test):
	'''
	an integer, a Fraction or a float
	'''
	return (isrational(scalar_test) or isfloat(scalar_test)) and not islogical(scalar_test)
