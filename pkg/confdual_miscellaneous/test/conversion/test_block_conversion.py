import pytest
from fractions import Fraction

import init_paths
from confdual_miscellaneous import block_shifts, block_masks, vertex2blocks, blocks2vertex, bitstring2vertex, vertex2bitstring, project_vertex
from confdual_miscellaneous import blocks2hex, hex2blocks, str2rational, parse_vector, parse_integer_vector, rational2str, convert_secs2time
from confdual_miscellaneous import CHECK_EQ_LIST_ORDERED

def test_block_layout():
	print('check that node 1 owns the most significant bits')
	assert CHECK_EQ_LIST_ORDERED(block_shifts((1, 1, 1)), [2, 1, 0])
	assert CHECK_EQ_LIST_ORDERED(block_shifts((2, 0, 1)), [1, 1, 0])
	assert CHECK_EQ_LIST_ORDERED(block_masks((1, 2)), [0b100, 0b011])
	assert vertex2blocks(0b100, (1, 1, 1)) == (1, 0, 0)
	assert vertex2blocks(0b10110, (2, 0, 3)) == (2, 0, 6)
	assert blocks2vertex((2, 0, 6), (2, 0, 3)) == 0b10110

	print('check the empty tuple space')
	assert vertex2blocks(0, (0,)) == (0,)
	assert vertex2bitstring(0, (0,)) == ''
	assert bitstring2vertex('', (0,)) == 0

	print('check the inverses on every label')
	t = (1, 2, 1)
	for vertex in range(1 << sum(t)):
		assert blocks2vertex(vertex2blocks(vertex, t), t) == vertex
		assert bitstring2vertex(vertex2bitstring(vertex, t), t) == vertex
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_bitstring():
	assert vertex2bitstring(5, (1, 1, 1)) == '101'
	assert vertex2bitstring(1, (2, 2)) == '0001'
	assert bitstring2vertex('011', (1, 1, 1)) == 3
	with pytest.raises(AssertionError): bitstring2vertex('01', (1, 1, 1))
	with pytest.raises(AssertionError): vertex2bitstring(8, (1, 1, 1))

def test_project_vertex():
	t = (1, 2, 1)
	vertex = blocks2vertex((1, 2, 0), t)
	assert project_vertex(vertex, (1, 2), t) == 0b100
	assert project_vertex(vertex, (0, 2), t) == 0b10
	assert project_vertex(vertex, (), t) == 0

def test_hex_blocks():
	assert blocks2hex((1, 10, 0), (1, 4, 0)) == '1.a.'
	assert blocks2hex((300,), (9,)) == '12c'
	assert hex2blocks('1.a.', (1, 4, 0)) == (1, 10, 0)
	assert hex2blocks('', ()) == ()
	assert hex2blocks('', (0,)) == (0,)
	with pytest.raises(AssertionError): hex2blocks('f', (2,))
	with pytest.raises(AssertionError): hex2blocks('1.1', (1,))

def test_rational_strings():
	assert str2rational('3') == 3
	assert str2rational(' 1/2 ') == Fraction(1, 2)
	assert str2rational('0.25') == Fraction(1, 4)
	assert parse_vector('1,1/2,0') == (Fraction(1), Fraction(1, 2), Fraction(0))
	assert parse_integer_vector('2,0,1') == (2, 0, 1)
	with pytest.raises(AssertionError): parse_integer_vector('1/2')
	with pytest.raises(ValueError): parse_vector('1,a')
	assert rational2str(Fraction(4, 2)) == '2'
	assert rational2str(Fraction(3, 6)) == '1/2'
	assert rational2str(7) == '7'
	with pytest.raises(AssertionError): rational2str(0.5)
	assert convert_secs2time(3725) == '[1:02:05]'
	print('\n\nDONE! SUCCESSFUL!!\n')

if __name__ == '__main__':
	test_block_layout()
	test_bitstring()
	test_project_vertex()
	test_hex_blocks()
	test_rational_strings()
