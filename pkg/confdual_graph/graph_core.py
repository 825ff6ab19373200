# this file contains the directed side information graphs, generic undirected graphs
# stored as adjacency bitsets, their text format and the disjunctive product
from dataclasses import dataclass

from confdual_miscellaneous import ispositiveinteger, isnonnegativeinteger, isprobability, isstring, isinteger, make_rng
from confdual_miscellaneous import GraphParseError, CapExceededError, get_default_caps

######################################################### graph types #########################################################
@dataclass(frozen=True)
class SideInformationGraph(object):
	'''
	directed graph on n nodes (0-indexed internally), in_sets[j] = A_j is the set of messages known at node j,
	i.e., i in A_j iff there is an edge i -> j
	'''
	n: int
	in_sets: tuple

	def __post_init__(self):
		assert ispositiveinteger(self.n), 'the number of nodes should be a positive integer'
		assert len(self.in_sets) == self.n, 'one in-neighborhood per node is required'
		for j, in_set in enumerate(self.in_sets):
			assert j not in in_set, 'node %d has a self-loop' % (j + 1)
			assert all(0 <= i < self.n for i in in_set), 'the in-neighborhood of node %d is out of range' % (j + 1)

	def edges(self):
		'''
		sorted list of directed edges (i, j), 0-indexed
		'''
		return sorted((i, j) for j in range(self.n) for i in self.in_sets[j])

	@property
	def num_edges(self):
		return sum(len(in_set) for in_set in self.in_sets)

	def sorted_in_set(self, j):
		return tuple(sorted(self.in_sets[j]))

@dataclass(frozen=True)
class UndirectedGraph(object):
	'''
	simple undirected graph, adjacency[v] is the bitset (python int) of the neighbors of v
	'''
	vertex_count: int
	adjacency: tuple

	def is_adjacent(self, u, v):
		return (self.adjacency[u] >> v) & 1 == 1

	def neighbors(self, v):
		return bitset2list(self.adjacency[v])

	def degree(self, v):
		return bin(self.adjacency[v]).count('1')

	def edges(self):
		'''
		sorted list of edges (u, v) with u < v
		'''
		return [(u, v) for u in range(self.vertex_count) for v in bitset2list(self.adjacency[u] >> (u + 1), offset=u + 1)]

	@property
	def num_edges(self):
		return sum(bin(mask).count('1') for mask in self.adjacency) // 2

	@property
	def full_mask(self):
		return (1 << self.vertex_count) - 1

def bitset2list(mask, offset=0):
	'''
	ascending list of the positions of the set bits of mask, shifted by offset
	'''
	members = []
	while mask:
		lowest = mask & -mask
		members.append(lowest.bit_length() - 1 + offset)
		mask ^= lowest
	return members

def list2bitset(members):
	mask = 0
	for v in members: mask |= 1 << v
	return mask

######################################################### constructors #########################################################
def make_side_information_graph(n, edges, debug=True):
	'''
	build a side information graph from directed edges

	parameters:
		n:			number of nodes
		edges:		iterable of (i, j), 0-indexed, meaning node j knows message i, duplicates are merged

	outputs:
		graph:		SideInformationGraph
	'''
	if debug: assert ispositiveinteger(n), 'the number of nodes should be a positive integer'
	in_sets = [set() for _ in range(n)]
	for i, j in edges: in_sets[j].add(i)
	return SideInformationGraph(n=n, in_sets=tuple(frozenset(in_set) for in_set in in_sets))

def make_undirected_graph(vertex_count, edges, max_vertices=None, debug=True):
	'''
	build an undirected graph from a list of edges (u, v), self-loops are rejected and duplicates are merged
	'''
	if debug: assert isnonnegativeinteger(vertex_count), 'the number of vertices is not correct'
	check_vertex_cap(vertex_count, max_vertices)
	adjacency = [0] * vertex_count
	for u, v in edges:
		if debug:
			assert u != v, 'self-loop at vertex %d' % u
			assert 0 <= u < vertex_count and 0 <= v < vertex_count, 'edge (%d, %d) is out of range' % (u, v)
		adjacency[u] |= 1 << v
		adjacency[v] |= 1 << u
	return UndirectedGraph(vertex_count=vertex_count, adjacency=tuple(adjacency))

def check_vertex_cap(vertex_count, max_vertices=None, module='graph_core'):
	if max_vertices is None: max_vertices = get_default_caps().max_vertices
	if vertex_count > max_vertices:
		raise CapExceededError('%d vertices exceed the cap of %d vertices' % (vertex_count, max_vertices), module=module)

def complete_digraph(n):
	'''
	every node knows every other message (complete bidirected graph)
	'''
	return make_side_information_graph(n, [(i, j) for i in range(n) for j in range(n) if i != j])

def edgeless_digraph(n):
	return make_side_information_graph(n, [])

def bidirected(graph, debug=True):
	'''
	side information graph with both directions of every edge of an undirected graph
	'''
	edges = []
	for u, v in graph.edges(): edges += [(u, v), (v, u)]
	return make_side_information_graph(graph.vertex_count, edges, debug=debug)

def complete_graph(m):
	return make_undirected_graph(m, [(u, v) for u in range(m) for v in range(u + 1, m)])

def cycle_graph(m, debug=True):
	if debug: assert m >= 3, 'a cycle needs at least 3 vertices'
	return make_undirected_graph(m, [(v, (v + 1) % m) for v in range(m)])

def edgeless_graph(m):
	return make_undirected_graph(m, [])

def random_digraph(n, p, seed, debug=True):
	'''
	random side information graph, every ordered pair (i, j), i != j, is an edge independently with probability p

	parameters:
		n:			number of nodes
		p:			edge probability in [0, 1]
		seed:		the pairs are drawn in row-major order from a generator seeded with seed

	outputs:
		graph:		SideInformationGraph
	'''
	if debug:
		assert ispositiveinteger(n), 'the number of nodes should be a positive integer'
		assert isprobability(p), 'the edge probability %s is not in [0, 1]' % str(p)
	rng = make_rng(seed)
	draws = rng.random_sample((n, n))
	edges = [(i, j) for i in range(n) for j in range(n) if i != j and draws[i, j] < p]
	return make_side_information_graph(n, edges, debug=debug)

def random_graph(m, p, seed, debug=True):
	'''
	random undirected graph on m vertices, every pair is an edge independently with probability p
	'''
	if debug:
		assert ispositiveinteger(m), 'the number of vertices should be a positive integer'
		assert isprobability(p), 'the edge probability %s is not in [0, 1]' % str(p)
	rng = make_rng(seed)
	draws = rng.random_sample((m, m))
	return make_undirected_graph(m, [(u, v) for u in range(m) for v in range(u + 1, m) if draws[u, v] < p], debug=debug)

######################################################### text format #########################################################
def parse_graph(text, debug=True):
	'''
	parse the line-oriented graph format:
		# comment
		n <count>
		e <i> <j>		directed edge i -> j, 1-indexed, receiver j has message i as side information

	parameters:
		text:		content of a graph file, LF or CRLF line endings

	outputs:
		graph:		SideInformationGraph
	'''
	if debug: assert isstring(text), 'the graph text is not a string'
	n, edges = None, []
	for line_number, raw in enumerate(text.splitlines(), start=1):
		line = raw.strip()
		if not line or line.startswith('#'): continue
		parts = line.split()
		if parts[0] == 'n':
			if n is not None: raise GraphParseError('the node count is declared twice', line_number)
			if len(parts) != 2 or not _isdigits(parts[1]) or int(parts[1]) < 1:
				raise GraphParseError('malformed node count line "%s"' % line, line_number)
			n = int(parts[1])
		elif parts[0] == 'e':
			if n is None: raise GraphParseError('an edge appears before the node count', line_number)
			if len(parts) != 3 or not _isdigits(parts[1]) or not _isdigits(parts[2]):
				raise GraphParseError('malformed edge line "%s"' % line, line_number)
			i, j = int(parts[1]), int(parts[2])
			if not (1 <= i <= n and 1 <= j <= n): raise GraphParseError('edge %d -> %d is out of range [1, %d]' % (i, j, n), line_number)
			if i == j: raise GraphParseError('self-loop at node %d' % i, line_number)
			edges.append((i - 1, j - 1))
		else: raise GraphParseError('unknown line "%s"' % line, line_number)

	if n is None: raise GraphParseError('the node count line "n <count>" is missing')
	return make_side_information_graph(n, edges, debug=debug)

def _isdigits(token):
	return token.isdigit()

def serialize_graph(graph, comment=None):
	'''
	text of a side information graph in the format read by parse_graph
	'''
	lines = []
	if comment is not None: lines.append('# %s' % comment)
	lines.append('n %d' % graph.n)
	lines += ['e %d %d' % (i + 1, j + 1) for i, j in graph.edges()]
	return '\n'.join(lines) + '\n'

def serialize_undirected(graph, comment=None):
	'''
	text of an undirected graph with 'u <a> <b>' lines, 1-indexed
	'''
	lines = []
	if comment is not None: lines.append('# %s' % comment)
	lines.append('n %d' % graph.vertex_count)
	lines += ['u %d %d' % (u + 1, v + 1) for u, v in graph.edges()]
	return '\n'.join(lines) + '\n'

######################################################### products #########################################################
def disjunctive_product(graph1, graph2, max_vertices=None, debug=True):
	'''
	disjunctive (co-normal) product: (u1, u2) ~ (v1, v2) iff u1 ~ v1 or u2 ~ v2,
	the pair (u1, u2) is the vertex u1 * |V(graph2)| + u2

	parameters:
		graph1, graph2:		nonempty UndirectedGraph

	outputs:
		product:			UndirectedGraph
	'''
	if debug: assert graph1.vertex_count > 0 and graph2.vertex_count > 0, 'the factors of a product should be nonempty'
	m1, m2 = graph1.vertex_count, graph2.vertex_count
	check_vertex_cap(m1 * m2, max_vertices)

	# rows of the product: a full block of m2 bits for every neighbor u1' of u1, plus the pattern of graph2 in every block
	block_full = (1 << m2) - 1
	adjacency = []
	for u1 in range(m1):
		first = 0
		for v1 in bitset2list(graph1.adjacency[u1]): first |= block_full << (v1 * m2)
		for u2 in range(m2):
			second = 0
			for v1 in range(m1): second |= graph2.adjacency[u2] << (v1 * m2)
			adjacency.append(first | second)
	return UndirectedGraph(vertex_count=m1 * m2, adjacency=tuple(adjacency))

def disjunctive_product_edge_count(graph1, graph2):
	'''
	closed form |E1| |V2|^2 + |E2| |V1|^2 - 2 |E1| |E2| of the edge count of the disjunctive product
	'''
	e1, e2 = graph1.num_edges, graph2.num_edges
	m1, m2 = graph1.vertex_count, graph2.vertex_count
	return e1 * m2 * m2 + e2 * m1 * m1 - 2 * e1 * e2

def lexicographic_product(graph, m, max_vertices=None, debug=True):
	'''
	blow-up G[K_m]: every vertex v becomes the clique {v * m, ..., v * m + m - 1}, copies of adjacent vertices are all adjacent
	'''
	if debug: assert ispositiveinteger(m), 'the blow-up size should be a positive integer'
	check_vertex_cap(graph.vertex_count * m, max_vertices)
	block_full = (1 << m) - 1
	adjacency = []
	for v in range(graph.vertex_count):
		row = 0
		for u in bitset2list(graph.adjacency[v]): row |= block_full << (u * m)
		for copy_index in range(m):
			adjacency.append(row | ((block_full ^ (1 << copy_index)) << (v * m)))
	return UndirectedGraph(vertex_count=graph.vertex_count * m, adjacency=tuple(adjacency))

def swap_product_coordinates(vertex, m1, m2):
	'''
	image of the product vertex u1 * m2 + u2 under the coordinate swap, i.e., u2 * m1 + u1
	'''
	u1, u2 = divmod(vertex, m2)
	return u2 * m1 + u1
