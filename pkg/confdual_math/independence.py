# this file contains the exact maximum (weight) independent set solvers, a branch and bound over
# adjacency bitsets pruned by a greedy clique cover of the remaining candidates
import math
from dataclasses import dataclass
from fractions import Fraction

from confdual_miscellaneous import isvertexset, issequence, isrational, print_log, Timer, SolverTimeout
from confdual_graph import bitset2list, list2bitset, check_vertex_cap, to_explicit

TIMER_CHECK_INTERVAL = 1024

@dataclass(frozen=True)
class IndependenceCertificate(object):
	alpha: int
	witness: tuple
	nodes_explored: int

def popcount(mask):
	return bin(mask).count('1')

def is_independent(graph, vertex_set, debug=True):
	'''
	True iff no two members of vertex_set are adjacent
	'''
	members = list(vertex_set)
	if debug: assert isvertexset(members, graph.vertex_count), 'the vertex set has a vertex out of [0, %d)' % graph.vertex_count
	mask = list2bitset(members)
	return all(graph.adjacency[v] & mask == 0 for v in members)

def greedy_independent_set(graph, mask=None):
	'''
	lowest-index greedy maximal independent set inside mask (all vertices when None)
	'''
	candidates = graph.full_mask if mask is None else mask
	chosen = []
	while candidates:
		lowest = candidates & -candidates
		v = lowest.bit_length() - 1
		chosen.append(v)
		candidates &= ~(graph.adjacency[v] | lowest)
	return chosen

def greedy_clique(graph, start, mask=None):
	'''
	grow a clique from start by adding the lowest common neighbor until none is left
	'''
	common = graph.adjacency[start] if mask is None else graph.adjacency[start] & mask
	clique = [start]
	while common:
		lowest = common & -common
		u = lowest.bit_length() - 1
		clique.append(u)
		common &= graph.adjacency[u]
	return clique

def clique_cover_bound(graph, mask=None, limit=None):
	'''
	number of cliques in a greedy partition of mask into cliques, an upper bound on the independence number of the
	induced subgraph, counting stops as soon as the count exceeds limit
	'''
	remaining = graph.full_mask if mask is None else mask
	return clique_cover_bound_raw(graph.adjacency, remaining, limit)

class _IndependentSetSearch(object):
	'''
	depth first search, the lowest candidate is branched on first and the include branch precedes the exclude branch
	'''
	def __init__(self, graph, timeout=None, upper_bound=None, log=None, display=False):
		self.adjacency = graph.adjacency
		self.timeout = timeout
		self.upper_bound = upper_bound
		self.log, self.display = log, display
		self.best_size, self.best_set = 0, []
		self.nodes_explored = 0
		self.timer = Timer()
		self.done = False

	def tick(self):
		self.nodes_explored += 1
		if self.nodes_explored % TIMER_CHECK_INTERVAL == 0:
			if self.timer.expired(self.timeout):
				raise SolverTimeout('no exact answer within %s seconds, best size found %d' % (str(self.timeout), self.best_size), nodes_explored=self.nodes_explored)
			if self.nodes_explored % (TIMER_CHECK_INTERVAL * 64) == 0:
				print_log('independence: %d nodes explored, best %d' % (self.nodes_explored, self.best_size), log=self.log, display=self.display)

	def run(self, chosen, candidates):
		self.timer.tic()
		self.expand(chosen, candidates)
		return self.best_size, sorted(self.best_set)

	def record(self, chosen):
		if len(chosen) > self.best_size:
			self.best_size, self.best_set = len(chosen), list(chosen)
			if self.upper_bound is not None and self.best_size >= self.upper_bound: self.done = True

	def expand(self, chosen, candidates):
		# stack[k] holds the candidates left at depth k, chosen has one vertex per depth above the base
		self.tick()
		if candidates == 0: return self.record(chosen)
		stack = [candidates]
		while stack:
			candidates = stack[-1]
			slack = self.best_size - len(chosen)
			if self.done or not candidates or popcount(candidates) <= slack or clique_cover_bound_raw(self.adjacency, candidates, slack) <= slack:
				stack.pop()
				if stack:
					chosen.pop()
					stack[-1] ^= stack[-1] & -stack[-1]
				continue

			lowest = candidates & -candidates
			v = lowest.bit_length() - 1
			chosen.append(v)
			self.tick()
			child = candidates & ~(self.adjacency[v] | lowest)
			if child: stack.append(child)
			else:
				self.record(chosen)
				chosen.pop()
				stack[-1] ^= lowest

def clique_cover_bound_raw(adjacency, remaining, limit):
	count = 0
	while remaining:
		lowest = remaining & -remaining
		remaining ^= lowest
		common = remaining & adjacency[lowest.bit_length() - 1]
		while common:
			member = common & -common
			remaining ^= member
			common &= adjacency[member.bit_length() - 1]
		count += 1
		if limit is not None and count > limit: return count
	return count

def max_independent_set(graph, root=None, upper_bound=None, timeout=None, max_vertices=None, log=None, display=False, debug=True):
	'''
	exact independence number with a witness

	parameters:
		graph:			UndirectedGraph with at least one vertex
		root:			a vertex known to lie in some maximum independent set, e.g., any vertex of a vertex transitive graph
		upper_bound:	a certified upper bound on the independence number, the search stops once a set of this size is found
		timeout:		seconds, SolverTimeout is raised when exceeded

	outputs:
		certificate:	IndependenceCertificate
	'''
	if debug: assert graph.vertex_count >= 1, 'the graph should have at least one vertex'
	check_vertex_cap(graph.vertex_count, max_vertices, module='independence')
	search = _IndependentSetSearch(graph, timeout=timeout, upper_bound=upper_bound, log=log, display=display)
	if root is None: alpha, witness = search.run([], graph.full_mask)
	else:
		if debug: assert 0 <= root < graph.vertex_count, 'the root vertex is out of range'
		alpha, witness = search.run([root], graph.full_mask & ~(graph.adjacency[root] | (1 << root)))
	if debug: assert is_independent(graph, witness, debug=False) and len(witness) == alpha, 'the witness is not a certificate'
	print_log('independence: alpha = %d after %d nodes' % (alpha, search.nodes_explored), log=log, display=display)
	return IndependenceCertificate(alpha=alpha, witness=tuple(witness), nodes_explored=search.nodes_explored)

def confusion_alpha(confusion, timeout=None, max_vertices=None, log=None, display=False, debug=True):
	'''
	independence number of a confusion graph, vertex 0 is fixed in the set (the graph is vertex transitive) and the search
	stops at the clique bound alpha * omega <= |V| of vertex transitive graphs
	'''
	graph = to_explicit(confusion, max_vertices=max_vertices)
	clique = greedy_clique(graph, 0)
	upper_bound = graph.vertex_count // len(clique)
	return max_independent_set(graph, root=0, upper_bound=upper_bound, timeout=timeout, max_vertices=max_vertices, log=log, display=display, debug=debug)

######################################################### weighted #########################################################
def _integer_weights(weights):
	'''
	scale rational weights by the lcm of their denominators
	'''
	scale = 1
	for weight in weights: scale = scale * weight.denominator // math.gcd(scale, weight.denominator)
	return [int(weight * scale) for weight in weights], scale

class _WeightedSearch(object):
	def __init__(self, graph, weights, timeout=None):
		self.adjacency = graph.adjacency
		self.weights = weights
		self.timeout = timeout
		self.best_weight, self.best_set = 0, []
		self.nodes_explored = 0
		self.timer = Timer()

	def bound(self, remaining, limit):
		'''
		sum over a greedy clique partition of the largest weight in every clique, counting stops above limit
		'''
		adjacency, weights = self.adjacency, self.weights
		total = 0
		while remaining:
			lowest = remaining & -remaining
			remaining ^= lowest
			v = lowest.bit_length() - 1
			heaviest = weights[v]
			common = remaining & adjacency[v]
			while common:
				member = common & -common
				remaining ^= member
				u = member.bit_length() - 1
				if weights[u] > heaviest: heaviest = weights[u]
				common &= adjacency[u]
			total += heaviest
			if total > limit: return total
		return total

	def tick(self, chosen, weight):
		self.nodes_explored += 1
		if self.nodes_explored % TIMER_CHECK_INTERVAL == 0 and self.timer.expired(self.timeout):
			raise SolverTimeout('no exact maximum weight within %s seconds' % str(self.timeout), nodes_explored=self.nodes_explored)
		if weight > self.best_weight: self.best_weight, self.best_set = weight, list(chosen)

	def expand(self, chosen, weight, candidates):
		# every frame is (candidates left, weight of chosen) at its depth
		self.tick(chosen, weight)
		stack = [[candidates, weight]]
		while stack:
			candidates, weight = stack[-1]
			slack = self.best_weight - weight
			if not candidates or self.bound(candidates, slack) <= slack:
				stack.pop()
				if stack:
					chosen.pop()
					stack[-1][0] ^= stack[-1][0] & -stack[-1][0]
				continue

			lowest = candidates & -candidates
			v = lowest.bit_length() - 1
			chosen.append(v)
			stack.append([candidates & ~(self.adjacency[v] | lowest), weight + self.weights[v]])
			self.tick(chosen, weight + self.weights[v])

def max_weight_independent_set(graph, weights, maximal=False, timeout=None, max_vertices=None, debug=True):
	'''
	exact maximum weight independent set

	parameters:
		graph:			UndirectedGraph
		weights:		one nonnegative rational per vertex
		maximal:		complete the witness with zero weight vertices to a maximal independent set

	outputs:
		weight:			Fraction, the maximum total weight
		witness:		ascending tuple of vertices attaining the weight
	'''
	if debug:
		assert issequence(weights) and len(weights) == graph.vertex_count, 'one weight per vertex is required'
		assert all(isrational(weight) and weight >= 0 for weight in weights), 'weights should be nonnegative rationals'
	check_vertex_cap(graph.vertex_count, max_vertices, module='independence')
	integer_weights, scale = _integer_weights([Fraction(weight) for weight in weights])
	positive = list2bitset([v for v, weight in enumerate(integer_weights) if weight > 0])
	search = _WeightedSearch(graph, integer_weights, timeout=timeout)
	search.timer.tic()
	search.expand([], 0, positive)

	witness = sorted(search.best_set)
	if not maximal: return Fraction(search.best_weight, scale), tuple(witness)

	# zero weight vertices do not change the weight
	blocked = list2bitset(witness)
	for v in search.best_set: blocked |= graph.adjacency[v]
	witness = sorted(search.best_set + greedy_independent_set(graph, graph.full_mask & ~blocked))
	return Fraction(search.best_weight, scale), tuple(witness)

######################################################### oracle #########################################################
def brute_force_alpha(graph, debug=True):
	'''
	independence number by listing every independent set without any pruning, for graphs with at most 20 vertices

	outputs:
		alpha:			integer
		witness:		the lexicographically first maximum independent set (as a sorted tuple)
	'''
	if debug: assert graph.vertex_count <= 20, 'the brute force oracle is limited to 20 vertices'
	best = [0, tuple()]

	def visit(chosen, start, forbidden):
		if len(chosen) > best[0]: best[0], best[1] = len(chosen), tuple(chosen)
		for v in range(start, graph.vertex_count):
			if (forbidden >> v) & 1: continue
			chosen.append(v)
			visit(chosen, v + 1, forbidden | graph.adjacency[v])
			chosen.pop()

	visit([], 0, 0)
	return best[0], best[1]
