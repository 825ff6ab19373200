import networkx as nx, pytest
from fractions import Fraction

import init_paths
from confdual_graph import bidirected, cycle_graph, build_confusion_graph, to_explicit
from confdual_math import confusion_alpha, is_independent, capacity_lower_bound, broadcast_rate_bound, LogExpr, LogRatio
from confdual_miscellaneous import Caps, bitstring2vertex

def test_pentagon_one_bit():
	pentagon = bidirected(cycle_graph(5))
	t = (1, 1, 1, 1, 1)
	confusion = build_confusion_graph(pentagon, t)
	explicit = to_explicit(confusion)
	assert confusion.vertex_count == 32

	print('compare with the largest clique of the complement')
	undirected = nx.Graph()
	undirected.add_nodes_from(range(32))
	undirected.add_edges_from(explicit.edges())
	oracle = max(len(clique) for clique in nx.find_cliques(nx.complement(undirected)))
	certificate = confusion_alpha(confusion)
	assert certificate.alpha == oracle
	assert certificate.alpha >= 4
	assert is_independent(explicit, [bitstring2vertex(bits, t) for bits in ['00000', '11000', '00110', '11111']])

	bound = capacity_lower_bound(pentagon, t, [1])
	assert bound.value == LogRatio(1, LogExpr(5) - LogExpr.log2(certificate.alpha))
	print('\n\nDONE! SUCCESSFUL!!\n')

@pytest.mark.slow
def test_pentagon_two_bits():
	pentagon = bidirected(cycle_graph(5))
	confusion = build_confusion_graph(pentagon, (2, 2, 2, 2, 2))
	assert confusion.vertex_count == 1024
	assert confusion_alpha(confusion).alpha == 32

	bound = capacity_lower_bound(pentagon, (1, 1, 1, 1, 1), [2], caps=Caps())
	assert bound.value.to_fraction() == Fraction(2, 5)
	assert broadcast_rate_bound(bound).value == LogExpr(Fraction(5, 2))
	print('\n\nDONE! SUCCESSFUL!!\n')

if __name__ == '__main__':
	test_pentagon_one_bit()
	test_pentagon_two_bits()
