# this file contains the confusion graph of a side information graph, stored implicitly
# by its set of confusable differences: x ~ z iff x xor z is a confusable difference
import numpy as np
from dataclasses import dataclass, field

from confdual_miscellaneous import isblocklengths, isbittuple, isinteger, ispositiveinteger, get_default_caps
from confdual_miscellaneous import block_masks, vertex2blocks, blocks2vertex
from confdual_miscellaneous import CapExceededError, TupleError
from confdual_miscellaneous.private import safe_block_lengths
from .graph_core import SideInformationGraph, UndirectedGraph, check_vertex_cap

@dataclass(frozen=True, eq=False)
class ConfusionGraph(object):
	'''
	the confusion graph of base at block lengths t, vertex v is the tuple whose big-endian concatenation of blocks is v

	base:				SideInformationGraph
	t:					tuple of block lengths
	total_bits:			sum(t)
	vertex_count:		2^sum(t)
	confusable_diffs:	ascending tuple of the nonzero differences d with x ~ x xor d
	diff_indicator:		boolean numpy array of length vertex_count, True at the confusable differences
	'''
	base: SideInformationGraph
	t: tuple
	total_bits: int
	vertex_count: int
	confusable_diffs: tuple
	diff_indicator: np.ndarray = field(repr=False)

	def is_adjacent(self, x, z):
		return bool(self.diff_indicator[x ^ z])

	def neighbors(self, v):
		return sorted(v ^ d for d in self.confusable_diffs)

	@property
	def degree(self):
		return len(self.confusable_diffs)

def _side_information_masks(graph, t):
	'''
	for every node j, the mask of its own block and the union of the blocks of A_j
	'''
	masks = block_masks(t, debug=False)
	own_masks, side_masks = [], []
	for j in range(graph.n):
		side_mask = 0
		for i in graph.in_sets[j]: side_mask |= masks[i]
		own_masks.append(masks[j])
		side_masks.append(side_mask)
	return own_masks, side_masks

def check_bits_cap(total_bits, max_bits=None, module='confusion'):
	if max_bits is None: max_bits = get_default_caps().max_bits
	if total_bits > max_bits:
		raise CapExceededError('%d total bits exceed the cap of %d bits' % (total_bits, max_bits), module=module)

def build_confusion_graph(graph, t, max_bits=None, debug=True):
	'''
	construct the confusion graph by scanning every difference d once:
	d is confusable iff for some node j the block j of d is nonzero and the blocks of A_j are all zero

	parameters:
		graph:			SideInformationGraph
		t:				block lengths, one per node
		max_bits:		cap on sum(t), the default cap is used when None

	outputs:
		confusion:		ConfusionGraph
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	total_bits = sum(t)
	check_bits_cap(total_bits, max_bits)

	vertex_count = 1 << total_bits
	diffs = np.arange(vertex_count, dtype=np.int64)
	indicator = np.zeros(vertex_count, dtype=bool)
	own_masks, side_masks = _side_information_masks(graph, t)
	for j in range(graph.n):
		if t[j] == 0: continue
		indicator |= ((diffs & own_masks[j]) != 0) & ((diffs & side_masks[j]) == 0)
	confusable_diffs = tuple(int(d) for d in np.flatnonzero(indicator))
	return ConfusionGraph(base=graph, t=t, total_bits=total_bits, vertex_count=vertex_count, confusable_diffs=confusable_diffs, diff_indicator=indicator)

def _check_tuple(blocks, t):
	if len(blocks) != len(t): raise TupleError('a tuple of %d blocks does not match %d nodes' % (len(blocks), len(t)))
	if not isbittuple(blocks, t): raise TupleError('the tuple %s does not fit the block lengths %s' % (str(tuple(blocks)), str(tuple(t))))

def confusable(x, z, graph, t):
	'''
	True iff some node j sees x_j != z_j while x and z agree on every block of A_j

	parameters:
		x, z:		tuples of per-node blocks
		graph:		SideInformationGraph
		t:			block lengths
	'''
	if len(t) != graph.n: raise TupleError('%d block lengths do not match %d nodes' % (len(t), graph.n))
	_check_tuple(x, t)
	_check_tuple(z, t)
	for j in range(graph.n):
		if x[j] != z[j] and all(x[i] == z[i] for i in graph.in_sets[j]): return True
	return False

def confusing_node(x, z, graph):
	'''
	the lowest node at which two tuples are confusable, None if they are not confusable
	'''
	for j in range(graph.n):
		if x[j] != z[j] and all(x[i] == z[i] for i in graph.in_sets[j]): return j
	return None

def translation_automorphism_check(confusion, c, sample=None, debug=True):
	'''
	check that the translation v -> v xor c maps edges to edges and non-edges to non-edges,
	the translated pair is judged by the definition of confusability, not by the difference set

	parameters:
		confusion:		ConfusionGraph
		c:				translation, a tuple of blocks or a vertex label
		sample:			iterable of vertex pairs, all pairs when None

	outputs:
		passed:			boolean
	'''
	t = confusion.t
	if isinteger(c): shift = int(c)
	else:
		_check_tuple(c, t)
		shift = blocks2vertex(c, t, debug=False)
	if debug: assert 0 <= shift < confusion.vertex_count, 'the translation is out of range'
	if sample is None: sample = ((x, z) for x in range(confusion.vertex_count) for z in range(x + 1, confusion.vertex_count))

	for x, z in sample:
		translated = confusable(vertex2blocks(x ^ shift, t, debug=False), vertex2blocks(z ^ shift, t, debug=False), confusion.base, t)
		if confusion.is_adjacent(x, z) != translated: return False
	return True

def to_explicit(confusion, max_vertices=None):
	'''
	materialize the adjacency bitsets of a confusion graph, vertex i of the result is the tuple with label i
	'''
	vertex_count = confusion.vertex_count
	check_vertex_cap(vertex_count, max_vertices, module='confusion')
	labels = np.arange(vertex_count, dtype=np.int64)
	adjacency = []
	for v in range(vertex_count):
		row = confusion.diff_indicator[labels ^ v]
		adjacency.append(int.from_bytes(np.packbits(row, bitorder='little').tobytes(), 'little'))
	return UndirectedGraph(vertex_count=vertex_count, adjacency=tuple(adjacency))

def confusion_degree(confusion):
	return len(confusion.confusable_diffs)

def confusion_edge_count(confusion):
	return confusion.vertex_count * len(confusion.confusable_diffs) // 2

######################################################### relations between block lengths #########################################################
def embed_vertex(vertex, s, t, debug=True):
	'''
	zero-pad a vertex of the s layout into the t layout (s <= t componentwise), the added bits of every block are the high bits
	'''
	if debug: assert isblocklengths(s, len(t)) and all(a <= b for a, b in zip(s, t)), 'the block lengths %s are not dominated by %s' % (str(s), str(t))
	return blocks2vertex(vertex2blocks(vertex, s, debug=debug), t, debug=debug)

embed_difference = embed_vertex

def project_independent_set(graph, s, t, independent_set, debug=True):
	'''
	shrink an independent set of the confusion graph at t to one at s <= t: the members are grouped by the high bits
	dropped from every block, the largest group (smallest key on ties) keeps its low bits,
	two members of one group agree on the dropped bits so a confusion at s would also be a confusion at t

	outputs:
		projected:		ascending list of vertices of the confusion graph at s, of size >= |independent_set| / 2^(sum(t) - sum(s))
	'''
	if debug: assert isblocklengths(s, graph.n) and isblocklengths(t, graph.n) and all(a <= b for a, b in zip(s, t)), 'the block lengths %s are not dominated by %s' % (str(s), str(t))
	groups = dict()
	for vertex in independent_set:
		blocks = vertex2blocks(vertex, t, debug=debug)
		high = tuple(block >> bits for block, bits in zip(blocks, s))
		low = tuple(block & ((1 << bits) - 1) for block, bits in zip(blocks, s))
		groups.setdefault(high, []).append(blocks2vertex(low, s, debug=False))
	if len(groups) == 0: return []
	best_key = min(groups, key=lambda key: (-len(groups[key]), key))
	return sorted(groups[best_key])

def power_containment_check(graph, t, a, max_bits=None, debug=True):
	'''
	check that every edge of the confusion graph at a*t is an edge of the a-fold disjunctive power of the confusion graph at t,
	block j at a*t is read as a chunks of t_j bits, chunk k of every block forms the k-th coordinate of the power
	'''
	if debug: assert ispositiveinteger(a), 'the power should be a positive integer'
	t = safe_block_lengths(t, graph.n, debug=debug)
	scaled = tuple(a * bits for bits in t)
	check_bits_cap(sum(scaled), max_bits)
	large = build_confusion_graph(graph, scaled, max_bits=max_bits, debug=debug)
	small = build_confusion_graph(graph, t, max_bits=max_bits, debug=debug)
	for d in large.confusable_diffs:
		blocks = vertex2blocks(d, scaled, debug=False)
		chunks = [blocks2vertex(tuple((block >> (k * bits)) & ((1 << bits) - 1) for block, bits in zip(blocks, t)), t, debug=False) for k in range(a)]
		if not any(small.diff_indicator[chunk] for chunk in chunks): return False
	return True
