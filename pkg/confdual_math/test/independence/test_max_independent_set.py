import itertools, networkx as nx, pytest
from fractions import Fraction

import init_paths
from confdual_graph import random_graph, cycle_graph, complete_graph, edgeless_graph, make_undirected_graph, build_confusion_graph, to_explicit
from confdual_graph import parse_graph, complete_digraph, random_digraph
from confdual_math import max_independent_set, confusion_alpha, max_weight_independent_set, brute_force_alpha, is_independent
from confdual_math import greedy_independent_set, greedy_clique, clique_cover_bound
from confdual_miscellaneous import make_rng, bitstring2vertex, SolverTimeout, CapExceededError, CHECK_EQ_LIST_ORDERED

def networkx_alpha(graph):
	undirected = nx.Graph()
	undirected.add_nodes_from(range(graph.vertex_count))
	undirected.add_edges_from(graph.edges())
	complement = nx.complement(undirected)
	return max(len(clique) for clique in nx.find_cliques(complement))

def three_node_confusion():
	return build_confusion_graph(parse_graph('n 3\ne 2 1\ne 3 1\ne 1 2\ne 1 3\ne 2 3\n'), (1, 1, 1))

def test_small_examples():
	print('the three node example')
	confusion = three_node_confusion()
	certificate = confusion_alpha(confusion)
	assert certificate.alpha == 2
	assert is_independent(to_explicit(confusion), certificate.witness)
	assert is_independent(to_explicit(confusion), [bitstring2vertex('000', (1, 1, 1)), bitstring2vertex('111', (1, 1, 1))])
	assert not is_independent(to_explicit(confusion), [0, bitstring2vertex('100', (1, 1, 1))])

	print('the 3-cube')
	cube = to_explicit(build_confusion_graph(complete_digraph(3), (1, 1, 1)))
	certificate = max_independent_set(cube)
	assert certificate.alpha == 4
	assert CHECK_EQ_LIST_ORDERED(certificate.witness, [0, 3, 5, 6])

	print('complete, edgeless and cycle graphs')
	assert max_independent_set(complete_graph(5)).alpha == 1
	assert max_independent_set(edgeless_graph(6)).alpha == 6
	assert max_independent_set(cycle_graph(5)).alpha == 2
	assert max_independent_set(cycle_graph(8)).alpha == 4
	assert is_independent(complete_graph(3), [])
	assert is_independent(complete_graph(3), [2])
	with pytest.raises(AssertionError): is_independent(complete_graph(3), [3])
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_oracle_equivalence():
	for m, seed in itertools.product(range(1, 15), range(3)):
		graph = random_graph(m, [0.2, 0.5, 0.8][seed], seed + 10 * m)
		certificate = max_independent_set(graph)
		alpha, witness = brute_force_alpha(graph)
		assert certificate.alpha == alpha == networkx_alpha(graph)
		assert is_independent(graph, certificate.witness) and len(certificate.witness) == certificate.alpha
		assert is_independent(graph, witness)

def test_confusion_alpha_matches_unrooted_search():
	for n, seed in itertools.product(range(1, 4), range(4)):
		graph = random_digraph(n, 0.5, seed)
		t = tuple(1 + (seed + j) % 2 for j in range(n))
		if sum(t) > 6: continue
		explicit = to_explicit(build_confusion_graph(graph, t))
		rooted = confusion_alpha(build_confusion_graph(graph, t))
		assert rooted.alpha == max_independent_set(explicit).alpha == networkx_alpha(explicit)
		assert 0 in rooted.witness

def test_translation_closure():
	confusion = build_confusion_graph(random_digraph(3, 0.5, 4), (1, 2, 1))
	explicit = to_explicit(confusion)
	witness = confusion_alpha(confusion).witness
	rng = make_rng(0)
	for c in rng.randint(0, confusion.vertex_count, size=10):
		assert is_independent(explicit, [x ^ int(c) for x in witness])

def test_greedy_helpers():
	cycle = cycle_graph(6)
	assert greedy_independent_set(cycle) == [0, 2, 4]
	assert greedy_clique(complete_graph(4), 2) == [2, 0, 1, 3]
	assert clique_cover_bound(complete_graph(4)) == 1
	assert clique_cover_bound(edgeless_graph(5)) == 5
	assert clique_cover_bound(edgeless_graph(5), limit=2) == 3
	assert clique_cover_bound(cycle, mask=0b000111) == 2

def test_max_weight_independent_set():
	cycle = cycle_graph(5)
	assert max_weight_independent_set(cycle, [1] * 5)[0] == 2
	weight, witness = max_weight_independent_set(cycle, [0, 0, Fraction(3, 2), 0, 0])
	assert weight == Fraction(3, 2) and witness == (2,)
	weight, witness = max_weight_independent_set(cycle, [0, 0, Fraction(3, 2), 0, 0], maximal=True)
	assert 2 in witness and is_independent(cycle, witness) and len(witness) == 2
	weight, witness = max_weight_independent_set(make_undirected_graph(3, [(0, 1), (1, 2)]), [1, 3, 1])
	assert weight == 3 and witness == (1,)
	assert max_weight_independent_set(complete_graph(3), [0, 0, 0]) == (0, ())

	for seed in range(10):
		graph = random_graph(9, 0.4, seed)
		assert max_weight_independent_set(graph, [1] * 9)[0] == max_independent_set(graph).alpha
		rng = make_rng(seed)
		weights = [Fraction(int(a), int(b)) for a, b in zip(rng.randint(0, 5, size=9), rng.randint(1, 4, size=9))]
		best = max(sum((weights[v] for v in subset), Fraction(0)) for size in range(10) for subset in itertools.combinations(range(9), size) if is_independent(graph, subset))
		weight, witness = max_weight_independent_set(graph, weights)
		assert weight == best == sum((weights[v] for v in witness), Fraction(0))
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_caps_and_timeout():
	with pytest.raises(CapExceededError): max_independent_set(cycle_graph(8), max_vertices=7)
	with pytest.raises(SolverTimeout) as error: max_independent_set(random_graph(120, 0.1, 1), timeout=1e-9)
	assert 'incomplete' in str(error.value)

def test_deep_searches():
	print('the searches go as deep as the independence number without exhausting the interpreter stack')
	graph = edgeless_graph(1500)
	certificate = max_independent_set(graph)
	assert certificate.alpha == 1500 and certificate.witness == tuple(range(1500))
	weight, witness = max_weight_independent_set(graph, [1] * 1500)
	assert weight == 1500 and len(witness) == 1500

	print('five bits per node on the complete graph of three nodes')
	certificate = confusion_alpha(build_confusion_graph(complete_digraph(3), (5, 5, 5)))
	assert certificate.alpha == 1024
	assert certificate.witness[0] == 0
	print('\n\nDONE! SUCCESSFUL!!\n')

if __name__ == '__main__':
	test_small_examples()
	test_oracle_equivalence()
	test_confusion_alpha_matches_unrooted_search()
	test_translation_closure()
	test_greedy_helpers()
	test_max_weight_independent_set()
	test_caps_and_timeout()
	test_deep_searches()
