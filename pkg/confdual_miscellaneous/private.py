# this file includes private functions for internal use only
import copy, os
from fractions import Fraction

from .type_check import issequence, isstring, isblocklengths, isrational
from .conversion import str2rational

################################################################## conversion ##################################################################
def safe_path(input_path, warning=True, debug=True):
	'''
	convert path to a valid OS format, e.g., empty string '' to '.', remove redundant '/' at the end from 'aa/' to 'aa'
	'''
	if debug: assert isstring(input_path), 'path is not a string: %s' % input_path
	safe_data = copy.copy(input_path)
	safe_data = os.path.normpath(safe_data)
	return safe_data

def safe_block_lengths(input_t, n, warning=True, debug=True):
	'''
	copy a block length vector to a tuple of python integers

	parameters:
		input_t:		a list or tuple of nonnegative integers
		n:				the number of nodes of the associated graph

	outputs:
		t:				tuple of int
	'''
	if debug: assert isblocklengths(input_t, n), 'the block lengths %s do not match a graph with %d nodes' % (str(input_t), n)
	return tuple(int(bits) for bits in input_t)

def safe_weight_vector(input_vector, n, warning=True, debug=True):
	'''
	copy a direction (or weight) vector to a tuple of Fraction, strings such as '1/2' are accepted

	parameters:
		input_vector:	a list or tuple of rationals (or rational strings)
		n:				the number of nodes of the associated graph

	outputs:
		vector:			tuple of Fraction
	'''
	if debug:
		assert issequence(input_vector) and len(input_vector) == n, 'the weight vector does not have %d entries' % n
		assert all(isrational(entry) or isstring(entry) for entry in input_vector), 'the weight vector must hold exact rationals'
	vector = tuple(str2rational(entry) if isstring(entry) else Fraction(entry) for entry in input_vector)
	if debug: assert all(entry >= 0 for entry in vector), 'the weight vector has a negative entry'
	return vector
