import pytest

import init_paths
from confdual_graph import parse_graph, serialize_graph, make_side_information_graph, random_digraph, complete_digraph, SideInformationGraph
from confdual_miscellaneous import GraphParseError, CHECK_EQ_LIST_ORDERED

FIG2_TEXT = '# two receivers know message 1\nn 3\ne 2 1\ne 3 1\ne 1 2\ne 1 3\ne 2 3\n'

def test_parse_graph():
	print('check the in-neighborhoods of the three node example')
	graph = parse_graph(FIG2_TEXT)
	assert graph.n == 3
	assert graph.in_sets == (frozenset({1, 2}), frozenset({0}), frozenset({0, 1}))
	assert graph.num_edges == 5

	print('check a single node without side information')
	graph = parse_graph('n 1')
	assert graph.n == 1 and graph.in_sets == (frozenset(),)

	print('check CRLF line endings and duplicate edges')
	graph = parse_graph('n 2\r\ne 1 2\r\ne 1 2\r\n')
	assert graph.in_sets == (frozenset(), frozenset({0}))
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_parse_graph_errors():
	cases = [('n 2\ne 1 1\n', 2, 'self-loop'), ('e 1 2\nn 2\n', 1, 'before'), ('n 2\ne 1 3\n', 2, 'out of range'), ('n 2\nn 3\n', 2, 'twice'),
		('n two\n', 1, 'malformed'), ('n 2\ne 1\n', 2, 'malformed'), ('n 2\nx 1 2\n', 2, 'unknown'), ('n 0\n', 1, 'malformed')]
	for text, line_number, fragment in cases:
		with pytest.raises(GraphParseError) as error: parse_graph(text)
		assert error.value.line_number == line_number
		assert fragment in str(error.value)

	with pytest.raises(GraphParseError) as error: parse_graph('# nothing\n')
	assert error.value.line_number is None
	assert str(error.value).startswith('graph_core: ')

def test_serialize_round_trip():
	graphs = [parse_graph(FIG2_TEXT), complete_digraph(4), make_side_information_graph(2, [])]
	graphs += [random_digraph(n, 0.5, seed) for n in range(1, 6) for seed in range(3)]
	for graph in graphs:
		text = serialize_graph(graph, comment='round trip')
		assert text.startswith('# round trip\n')
		assert parse_graph(text) == graph
		assert CHECK_EQ_LIST_ORDERED(parse_graph(text).edges(), graph.edges())
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_graph_validation():
	with pytest.raises(AssertionError): SideInformationGraph(n=2, in_sets=(frozenset({0}), frozenset()))
	with pytest.raises(AssertionError): SideInformationGraph(n=2, in_sets=(frozenset({2}), frozenset()))
	with pytest.raises(AssertionError): SideInformationGraph(n=0, in_sets=())

if __name__ == '__main__':
	test_parse_graph()
	test_parse_graph_errors()
	test_serialize_round_trip()
	test_graph_validation()
