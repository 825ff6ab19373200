# this file define a set of functions which converting data type, mostly between
# the integer label of a confusion graph vertex and its per-node blocks
from fractions import Fraction

from .type_check import isstring, isinteger, issequence, isrational, isblocklengths, isbittuple, isscalar_like

######################################################### block layout #########################################################
# node j owns the bit positions [sum(t[:j]), sum(t[:j+1])) counted from the most significant bit,
# so the vertex label of (x_1, ..., x_n) is the big-endian concatenation x_1 x_2 ... x_n
def block_shifts(t, debug=True):
	'''
	shift of the least significant bit of every block in the vertex label

	parameters:
		t:			block lengths

	outputs:
		shifts:		tuple, block j is (v >> shifts[j]) & ((1 << t[j]) - 1)
	'''
	if debug: assert isblocklengths(t), 'the block lengths are not correct'
	total_bits = sum(t)
	shifts, used = [], 0
	for bits in t:
		used += bits
		shifts.append(total_bits - used)
	return tuple(shifts)

def block_masks(t, debug=True):
	'''
	bit mask of every block in the vertex label
	'''
	shifts = block_shifts(t, debug=debug)
	return tuple(((1 << bits) - 1) << shift for bits, shift in zip(t, shifts))

def vertex2blocks(vertex, t, debug=True):
	'''
	split a vertex label into its per-node blocks

	parameters:
		vertex:		integer in [0, 2^sum(t))
		t:			block lengths

	outputs:
		blocks:		tuple of integers, block j in [0, 2^t_j)
	'''
	if debug: assert isinteger(vertex) and 0 <= vertex < (1 << sum(t)), 'vertex %s is out of range' % str(vertex)
	shifts = block_shifts(t, debug=debug)
	return tuple((vertex >> shift) & ((1 << bits) - 1) for bits, shift in zip(t, shifts))

def blocks2vertex(blocks, t, debug=True):
	'''
	concatenate per-node blocks into a vertex label
	'''
	if debug: assert isbittuple(blocks, t), 'the blocks %s do not fit the block lengths %s' % (str(blocks), str(t))
	vertex = 0
	for block, bits in zip(blocks, t): vertex = (vertex << bits) | block
	return vertex

def bitstring2vertex(bitstring, t, debug=True):
	'''
	convert a string of bits such as '100' (x_1 first) to a vertex label
	'''
	if debug:
		assert isstring(bitstring) and all(character in '01' for character in bitstring), 'the bit string %s is not correct' % str(bitstring)
		assert len(bitstring) == sum(t), 'the bit string %s does not have %d bits' % (bitstring, sum(t))
	return int(bitstring, 2) if bitstring else 0

def vertex2bitstring(vertex, t, debug=True):
	'''
	convert a vertex label to a string of bits, x_1 first
	'''
	total_bits = sum(t)
	if debug: assert isinteger(vertex) and 0 <= vertex < (1 << total_bits), 'vertex %s is out of range' % str(vertex)
	return format(vertex, '0%db' % total_bits) if total_bits > 0 else ''

def project_vertex(vertex, nodes, t, debug=True):
	'''
	concatenate the blocks of the given nodes (in the given order) into an integer, i.e., x(A_j) for nodes = A_j
	'''
	blocks = vertex2blocks(vertex, t, debug=debug)
	key = 0
	for node in nodes: key = (key << t[node]) | blocks[node]
	return key

######################################################### hex encoding #########################################################
def block2hex(block, bits, debug=True):
	'''
	hex string of a block with a fixed number of digits, the empty string for a zero-length block
	'''
	if debug: assert isinteger(block) and 0 <= block < (1 << bits), 'block %s does not fit %d bits' % (str(block), bits)
	digits = (bits + 3) // 4
	return format(block, '0%dx' % digits) if digits > 0 else ''

def blocks2hex(blocks, widths, debug=True):
	'''
	hex string of a tuple of blocks, blocks are separated by '.'
	'''
	if debug: assert issequence(blocks) and len(blocks) == len(widths), 'blocks do not match their widths'
	return '.'.join(block2hex(block, bits, debug=debug) for block, bits in zip(blocks, widths))

def hex2blocks(hex_string, widths, debug=True):
	'''
	inverse of blocks2hex
	'''
	if debug: assert isstring(hex_string), 'the hex string is not a string'
	if len(widths) == 0:
		if debug: assert hex_string == '', 'an empty observation must be encoded as an empty string'
		return tuple()
	parts = hex_string.split('.')
	if debug: assert len(parts) == len(widths), 'the hex string %s does not have %d blocks' % (hex_string, len(widths))
	blocks = tuple(int(part, 16) if part else 0 for part in parts)
	if debug: assert all(block < (1 << bits) for block, bits in zip(blocks, widths)), 'the hex string %s overflows its blocks' % hex_string
	return blocks

######################################################### rational related #########################################################
def str2rational(string, debug=True):
	'''
	convert a string such as '3', '1/2' or '0.25' to an exact Fraction
	'''
	if debug: assert isstring(string), 'the source string is not a string'
	return Fraction(string.strip())

def parse_vector(string, debug=True):
	'''
	convert a comma separated string such as '1,1/2,0' to a tuple of Fraction
	'''
	if debug: assert isstring(string), 'the vector is not a string'
	items = [item for item in string.split(',') if item.strip()]
	return tuple(str2rational(item, debug=debug) for item in items)

def parse_integer_vector(string, debug=True):
	'''
	convert a comma separated string such as '1,0,2' to a tuple of int
	'''
	vector = parse_vector(string, debug=debug)
	if debug: assert all(entry.denominator == 1 for entry in vector), 'the vector %s is not integral' % string
	return tuple(int(entry) for entry in vector)

def rational2str(value, debug=True):
	'''
	canonical string of an exact rational: '3' or '1/2'
	'''
	if debug: assert isrational(value), 'the value %s is not an exact rational' % str(value)
	value = Fraction(value)
	if value.denominator == 1: return str(value.numerator)
	return '%d/%d' % (value.numerator, value.denominator)

def convert_secs2time(seconds):
	'''
	format second to human readable way
	'''
	assert isscalar_like(seconds), 'input should be a scalar to represent number of seconds'
	m, s = divmod(int(seconds), 60)
	h, m = divmod(m, 60)
	return '[%d:%02d:%02d]' % (h, m, s)
