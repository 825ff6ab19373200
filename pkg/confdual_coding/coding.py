# this file contains index codes built from colorings of the confusion graph and locally recoverable storage codes
# built from its independent sets, all encoders, decoders and recovery functions are explicit lookup tables
import numpy as np
from dataclasses import dataclass

from confdual_miscellaneous import isnonnegativeinteger, islistofnonnegativeinteger, vertex2blocks, vertex2bitstring, get_default_caps
from confdual_miscellaneous import ImproperColoringError, NotIndependentError, RecoveryDomainError, ExhaustiveCapError
from confdual_miscellaneous.private import safe_block_lengths
from confdual_graph import build_confusion_graph, confusing_node

@dataclass(frozen=True)
class IndexCode(object):
	'''
	graph:			SideInformationGraph
	t:				block lengths
	r:				number of broadcast bits
	encoder:		tuple, encoder[x] is the index broadcast for the message tuple with label x
	decoders:		tuple of dictionaries, decoders[j][(index, observation)] is the block of node j,
					the observation is the tuple of the blocks of A_j in increasing node order
	'''
	graph: object
	t: tuple
	r: int
	encoder: tuple
	decoders: tuple

@dataclass(frozen=True)
class StorageCode(object):
	'''
	graph:			SideInformationGraph
	t:				block lengths
	r:				number of stored message bits
	codebook:		ascending tuple of 2^r vertex labels, codebook[m] stores message m
	recovery:		tuple of dictionaries, recovery[j][observation] is the block of node j rebuilt from the blocks of A_j
	'''
	graph: object
	t: tuple
	r: int
	codebook: tuple
	recovery: tuple

@dataclass(frozen=True)
class CodeReport(object):
	passed: bool
	kind: str
	checked: int
	counterexample: dict

def observation(graph, blocks, node):
	'''
	the blocks of A_node in increasing node order
	'''
	return tuple(blocks[i] for i in graph.sorted_in_set(node))

def check_exhaustive_cap(total_bits, max_bits=None):
	if max_bits is None: max_bits = get_default_caps().exhaustive_max_bits
	if total_bits > max_bits:
		raise ExhaustiveCapError('an exhaustive scan of %d bits exceeds the cap of %d bits' % (total_bits, max_bits), module='coding')

def tuple_string(vertex, t):
	return vertex2bitstring(vertex, t, debug=False)

######################################################### index codes #########################################################
def index_code_from_coloring(graph, t, colors, max_bits=None, debug=True):
	'''
	index code broadcasting the color of the message tuple, node j decodes the unique tuple of that color that agrees
	with its side information

	parameters:
		graph:			SideInformationGraph
		t:				block lengths
		colors:			colors[x] for every vertex label x of the confusion graph

	outputs:
		code:			IndexCode with r = ceil(log2 K) for K distinct colors
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	confusion = build_confusion_graph(graph, t, max_bits=max_bits, debug=debug)
	check_exhaustive_cap(confusion.total_bits)
	if debug: assert len(colors) == confusion.vertex_count and islistofnonnegativeinteger(list(colors)), 'one color per vertex of the confusion graph is required'

	color_array = np.asarray(colors, dtype=np.int64)
	labels = np.arange(confusion.vertex_count, dtype=np.int64)
	for d in confusion.confusable_diffs:
		clashes = np.flatnonzero(color_array == color_array[labels ^ d])
		if clashes.size > 0:
			x = int(clashes[0])
			edge = (min(x, x ^ d), max(x, x ^ d))
			raise ImproperColoringError('adjacent tuples %s and %s share color %d' % (tuple_string(edge[0], t), tuple_string(edge[1], t), colors[x]), edge=edge)

	palette = sorted(set(int(color) for color in colors))
	rank = {color: index for index, color in enumerate(palette)}
	r = (len(palette) - 1).bit_length()
	encoder = tuple(rank[int(color)] for color in colors)

	decoders = [dict() for _ in range(graph.n)]
	for x in range(confusion.vertex_count):
		blocks = vertex2blocks(x, t, debug=False)
		for j in range(graph.n): decoders[j][(encoder[x], observation(graph, blocks, j))] = blocks[j]
	code = IndexCode(graph=graph, t=t, r=r, encoder=encoder, decoders=tuple(decoders))
	if debug:
		report = verify_code(code)
		assert report.passed, 'the index code fails on %s' % str(report.counterexample)
	return code

def decode_block(code, node, index, side_information):
	'''
	the block of node decoded from the broadcast index and the observed blocks of A_node
	'''
	key = (index, tuple(side_information))
	if key not in code.decoders[node]: raise RecoveryDomainError('node %d cannot decode index %d with side information %s' % (node + 1, index, str(key[1])))
	return code.decoders[node][key]

######################################################### storage codes #########################################################
def find_confusable_pair(graph, t, vertices):
	'''
	the first pair of the given vertices that is confusable, with the node where it is confusable, None if there is none
	'''
	members = sorted(vertices)
	blocks = [vertex2blocks(x, t, debug=False) for x in members]
	for a in range(len(members)):
		for b in range(a + 1, len(members)):
			node = confusing_node(blocks[a], blocks[b], graph)
			if node is not None: return (members[a], members[b]), node
	return None

def storage_code_from_independent_set(graph, t, independent_set, debug=True):
	'''
	storage code whose codebook is the first 2^r members of an independent set of the confusion graph, r = floor(log2 |s|),
	node j rebuilds its block from the blocks of A_j since no two codewords agree on A_j and differ at j

	parameters:
		graph:				SideInformationGraph
		t:					block lengths
		independent_set:	nonempty set of vertex labels of the confusion graph

	outputs:
		code:				StorageCode
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	members = sorted(set(int(x) for x in independent_set))
	if debug:
		assert len(members) >= 1, 'the independent set should not be empty'
		assert all(isnonnegativeinteger(x) and x < (1 << sum(t)) for x in members), 'the set has a vertex out of range'
	violation = find_confusable_pair(graph, t, members)
	if violation is not None:
		(x, z), node = violation
		raise NotIndependentError('tuples %s and %s are confusable at node %d' % (tuple_string(x, t), tuple_string(z, t), node + 1), pair=(x, z), node=node)

	r = len(members).bit_length() - 1
	codebook = tuple(members[:1 << r])
	recovery = [dict() for _ in range(graph.n)]
	for x in codebook:
		blocks = vertex2blocks(x, t, debug=False)
		for j in range(graph.n): recovery[j][observation(graph, blocks, j)] = blocks[j]
	code = StorageCode(graph=graph, t=t, r=r, codebook=codebook, recovery=tuple(recovery))
	if debug:
		report = verify_code(code)
		assert report.passed, 'the storage code fails on %s' % str(report.counterexample)
	return code

def recover_block(code, node, side_information):
	'''
	the block of node rebuilt from the blocks of A_node, only defined on projections of codewords
	'''
	key = tuple(side_information)
	if key not in code.recovery[node]: raise RecoveryDomainError('node %d has no recovery entry for %s, it is not the projection of a codeword' % (node + 1, str(key)))
	return code.recovery[node][key]

def simulate_failure(code, m, failed, debug=True):
	'''
	erase the block of the failed node in the codeword of message m and rebuild it from the surviving blocks of A_failed

	parameters:
		m:			message index in [0, 2^r)
		failed:		node index, 0-indexed

	outputs:
		block:		the rebuilt block, equal to the erased one
	'''
	if not (isnonnegativeinteger(m) and m < len(code.codebook)): raise RecoveryDomainError('message %s is out of range [0, %d)' % (str(m), len(code.codebook)))
	if debug: assert isnonnegativeinteger(failed) and failed < code.graph.n, 'the failed node is out of range'
	blocks = list(vertex2blocks(code.codebook[m], code.t, debug=False))
	erased = blocks[failed]
	blocks[failed] = None
	recovered = recover_block(code, failed, observation(code.graph, blocks, failed))
	assert recovered == erased, 'node %d rebuilt %d instead of %d' % (failed + 1, recovered, erased)
	return recovered

######################################################### verification #########################################################
def _verify_index_code(code):
	total_bits = sum(code.t)
	check_exhaustive_cap(total_bits)
	checked = 0
	for x in range(1 << total_bits):
		index = code.encoder[x]
		if not (0 <= index < (1 << code.r)): return CodeReport(False, 'index', checked, {'x': x, 'node': None, 'reason': 'index %d needs more than %d bits' % (index, code.r)})
		blocks = vertex2blocks(x, code.t, debug=False)
		for j in range(code.graph.n):
			checked += 1
			decoded = code.decoders[j].get((index, observation(code.graph, blocks, j)))
			if decoded != blocks[j]: return CodeReport(False, 'index', checked, {'x': x, 'node': j, 'reason': 'decoded %s instead of %d' % (str(decoded), blocks[j])})
	return CodeReport(True, 'index', checked, None)

def _verify_storage_code(code):
	check_exhaustive_cap(sum(code.t))
	if len(code.codebook) != (1 << code.r): return CodeReport(False, 'storage', 0, {'reason': 'the codebook has %d rows instead of %d' % (len(code.codebook), 1 << code.r)})
	if len(set(code.codebook)) != len(code.codebook): return CodeReport(False, 'storage', 0, {'reason': 'the codebook is not injective'})
	violation = find_confusable_pair(code.graph, code.t, code.codebook)
	if violation is not None:
		(x, z), node = violation
		return CodeReport(False, 'storage', 0, {'pair': (x, z), 'node': node, 'reason': 'codewords confusable at node %d' % (node + 1)})
	checked = 0
	for m, x in enumerate(code.codebook):
		blocks = vertex2blocks(x, code.t, debug=False)
		for j in range(code.graph.n):
			checked += 1
			rebuilt = code.recovery[j].get(observation(code.graph, blocks, j))
			if rebuilt != blocks[j]: return CodeReport(False, 'storage', checked, {'m': m, 'x': x, 'node': j, 'reason': 'rebuilt %s instead of %d' % (str(rebuilt), blocks[j])})
	return CodeReport(True, 'storage', checked, None)

def verify_code(code):
	'''
	exhaustive check of the defining identity: every node decodes its block from every input for an index code,
	every node rebuilds its block of every codeword for a storage code

	outputs:
		report:			CodeReport with the first counterexample when the check fails
	'''
	if isinstance(code, IndexCode): return _verify_index_code(code)
	assert isinstance(code, StorageCode), 'only index and storage codes can be verified'
	return _verify_storage_code(code)
