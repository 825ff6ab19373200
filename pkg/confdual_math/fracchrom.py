# this file contains the fractional chromatic number by column generation over independent sets,
# the exact chromatic number by DSATUR backtracking and the b-fold coloring bound
import sys
from dataclasses import dataclass
from fractions import Fraction

from confdual_miscellaneous import ispositiveinteger, print_log, Timer, SolverTimeout, get_default_caps
from confdual_graph import bitset2list, list2bitset, check_vertex_cap, lexicographic_product
from .independence import is_independent, greedy_independent_set, greedy_clique, max_weight_independent_set, confusion_alpha
from .simplex import SimplexTableau

@dataclass(frozen=True)
class FractionalColoring(object):
	'''
	columns:	tuple of (independent set as an ascending tuple, positive Fraction weight)
	value:		sum of the weights
	'''
	columns: tuple
	value: Fraction

@dataclass(frozen=True)
class ChromaticResult(object):
	'''
	chi_f:			the fractional chromatic number
	coloring:		an optimal fractional coloring
	dual_weights:	one weight per vertex, every independent set weighs at most 1 and the weights sum to chi_f
	iterations:		number of priced columns
	'''
	chi_f: Fraction
	coloring: FractionalColoring
	dual_weights: tuple
	iterations: int

######################################################### integer coloring #########################################################
def greedy_coloring(graph):
	'''
	DSATUR greedy coloring: the uncolored vertex with the most distinct neighbor colors is colored first,
	ties go to the larger degree and then to the lower index

	outputs:
		colors:		list, colors[v] in [0, number of colors)
	'''
	vertex_count = graph.vertex_count
	degrees = [graph.degree(v) for v in range(vertex_count)]
	colors = [-1] * vertex_count
	neighbor_colors = [set() for _ in range(vertex_count)]
	uncolored = set(range(vertex_count))
	while uncolored:
		u = max(uncolored, key=lambda v: (len(neighbor_colors[v]), degrees[v], -v))
		color = 0
		while color in neighbor_colors[u]: color += 1
		colors[u] = color
		uncolored.remove(u)
		for v in bitset2list(graph.adjacency[u]):
			if v in uncolored: neighbor_colors[v].add(color)
	return colors

def color_classes(colors):
	'''
	the vertices of every color, as ascending tuples ordered by color
	'''
	classes = dict()
	for v, color in enumerate(colors): classes.setdefault(color, []).append(v)
	return [tuple(classes[color]) for color in sorted(classes)]

def is_proper_coloring(graph, colors):
	return all(colors[u] != colors[v] for u, v in graph.edges())

def clique_lower_bound(graph):
	'''
	size of the largest greedy clique grown from each vertex
	'''
	if graph.vertex_count == 0: return 0
	return max(len(greedy_clique(graph, v)) for v in range(graph.vertex_count))

def optimal_coloring(graph, lower_bound=None, timeout=None, max_vertices=None, log=None, display=False, debug=True):
	'''
	exact chromatic number by DSATUR backtracking started from the greedy coloring

	parameters:
		graph:			UndirectedGraph
		lower_bound:	a known lower bound on the chromatic number, the search stops once it is met

	outputs:
		num_colors:		the chromatic number
		colors:			an optimal proper coloring
	'''
	if max_vertices is None: max_vertices = get_default_caps().coloring_max_vertices
	check_vertex_cap(graph.vertex_count, max_vertices, module='fracchrom')
	vertex_count = graph.vertex_count
	if vertex_count == 0: return 0, []

	neighbors = [bitset2list(graph.adjacency[v]) for v in range(vertex_count)]
	degrees = [len(neighbor_list) for neighbor_list in neighbors]
	best_colors = greedy_coloring(graph)
	best = [max(best_colors) + 1, best_colors]
	floor = max(clique_lower_bound(graph), 1 if lower_bound is None else lower_bound)
	sys.setrecursionlimit(max(sys.getrecursionlimit(), vertex_count + 1000))

	colors = [-1] * vertex_count
	neighbor_colors = [dict() for _ in range(vertex_count)]
	timer = Timer()
	timer.tic()
	nodes = [0]

	def choose_vertex():
		candidate, candidate_key = None, None
		for v in range(vertex_count):
			if colors[v] != -1: continue
			key = (len(neighbor_colors[v]), degrees[v])
			if candidate_key is None or key > candidate_key: candidate, candidate_key = v, key
		return candidate

	def backtrack(used_colors):
		if best[0] <= floor: return
		nodes[0] += 1
		if nodes[0] % 1024 == 0 and timer.expired(timeout):
			raise SolverTimeout('no exact chromatic number within %s seconds' % str(timeout), module='fracchrom', nodes_explored=nodes[0])
		v = choose_vertex()
		if v is None:
			if used_colors < best[0]:
				best[0], best[1] = used_colors, list(colors)
				print_log('fracchrom: coloring with %d colors found' % used_colors, log=log, display=display)
			return

		for color in range(min(used_colors + 1, best[0] - 1)):
			if color in neighbor_colors[v]: continue
			colors[v] = color
			for u in neighbors[v]:
				if colors[u] == -1: neighbor_colors[u][color] = neighbor_colors[u].get(color, 0) + 1
			backtrack(max(used_colors, color + 1))
			colors[v] = -1
			for u in neighbors[v]:
				if colors[u] == -1:
					neighbor_colors[u][color] -= 1
					if neighbor_colors[u][color] == 0: del neighbor_colors[u][color]

	backtrack(0)
	if debug: assert is_proper_coloring(graph, best[1]), 'the coloring is not proper'
	return best[0], best[1]

def chromatic_number(graph, lower_bound=None, timeout=None, max_vertices=None, debug=True):
	return optimal_coloring(graph, lower_bound=lower_bound, timeout=timeout, max_vertices=max_vertices, debug=debug)[0]

######################################################### fractional coloring #########################################################
def _extend_to_maximal(graph, members):
	blocked = list2bitset(members)
	for v in members: blocked |= graph.adjacency[v]
	return tuple(sorted(list(members) + greedy_independent_set(graph, graph.full_mask & ~blocked)))

def _greedy_heavy_set(graph, weights):
	'''
	independent set built from the heaviest vertices first, a cheap pricing attempt before the exact one
	'''
	order = sorted((v for v in range(graph.vertex_count) if weights[v] > 0), key=lambda v: (-weights[v], v))
	chosen, blocked = [], 0
	for v in order:
		if (blocked >> v) & 1: continue
		chosen.append(v)
		blocked |= graph.adjacency[v] | (1 << v)
	return sum((weights[v] for v in chosen), Fraction(0)), chosen

def _indicator(members, vertex_count):
	row = [0] * vertex_count
	for v in members: row[v] = 1
	return row

def fractional_chromatic_lp(graph, timeout=None, max_vertices=None, log=None, display=False, debug=True):
	'''
	exact fractional chromatic number

	the restricted dual max sum_v y_v subject to sum_{v in S} y_v <= 1 for every independent set S of the pool is solved
	by the exact simplex, a maximum weight independent set under y above 1 joins the pool, otherwise y is feasible for
	every independent set and the shadow prices of the pool form an optimal fractional coloring

	parameters:
		graph:			UndirectedGraph with at least one vertex

	outputs:
		result:			ChromaticResult
	'''
	if max_vertices is None: max_vertices = get_default_caps().lp_max_vertices
	check_vertex_cap(graph.vertex_count, max_vertices, module='fracchrom')
	if debug: assert graph.vertex_count >= 1, 'the graph should have at least one vertex'
	vertex_count = graph.vertex_count
	timer = Timer()
	timer.tic()

	pool = [_extend_to_maximal(graph, members) for members in color_classes(greedy_coloring(graph))]
	pool = list(dict.fromkeys(pool))
	tableau = SimplexTableau([_indicator(members, vertex_count) for members in pool], [1] * len(pool), [1] * vertex_count, debug=debug)
	status = tableau.solve()
	assert status == 'optimal', 'the restricted program is unbounded'

	iterations = 0
	while True:
		if timer.expired(timeout): raise SolverTimeout('column generation did not converge within %s seconds' % str(timeout), module='fracchrom')
		y = tableau.primal_values()
		weight, members = _greedy_heavy_set(graph, y)
		if weight <= 1:
			remaining = None if timeout is None else max(timeout - timer.elapsed(), 1e-3)
			weight, members = max_weight_independent_set(graph, y, timeout=remaining, debug=False)
		if weight <= 1: break

		column = _extend_to_maximal(graph, members)
		pool.append(column)
		tableau.add_row(_indicator(column, vertex_count), 1)
		status = tableau.dual_solve()
		assert status == 'optimal', 'the restricted program became infeasible'
		iterations += 1
		print_log('fracchrom: iteration %d, restricted value %s, pricing weight %s' % (iterations, str(tableau.value), str(weight)), log=log, display=display)

	prices = tableau.shadow_prices()
	columns = tuple((pool[k], prices[k]) for k in range(len(pool)) if prices[k] > 0)
	value = sum((weight for _, weight in columns), Fraction(0))
	dual_weights = tuple(tableau.primal_values())
	if debug: assert value == tableau.value == sum(dual_weights), 'the primal and dual values differ'
	return ChromaticResult(chi_f=value, coloring=FractionalColoring(columns=columns, value=value), dual_weights=dual_weights, iterations=iterations)

def verify_fractional_coloring(graph, result, timeout=None):
	'''
	check both certificates of a ChromaticResult: the columns are independent and cover every vertex with weight at least 1,
	no independent set weighs more than 1 under the dual weights, and both objectives equal chi_f
	'''
	cover = [Fraction(0)] * graph.vertex_count
	for members, weight in result.coloring.columns:
		if weight <= 0 or not is_independent(graph, members): return False
		for v in members: cover[v] += weight
	if any(amount < 1 for amount in cover): return False
	if any(weight < 0 for weight in result.dual_weights): return False
	heaviest, _ = max_weight_independent_set(graph, list(result.dual_weights), timeout=timeout)
	if heaviest > 1: return False
	return result.coloring.value == result.chi_f == sum(result.dual_weights, Fraction(0))

def fractional_chromatic_transitive(confusion, timeout=None, max_vertices=None, log=None, display=False):
	'''
	|V| / alpha, the fractional chromatic number of a vertex transitive graph such as a confusion graph
	'''
	certificate = confusion_alpha(confusion, timeout=timeout, max_vertices=max_vertices, log=log, display=display)
	return Fraction(confusion.vertex_count, certificate.alpha)

def b_fold_chromatic_upper(graph, b, chi_f=None, exact_vertices=None, max_fold=None, timeout=None, debug=True):
	'''
	upper bound on the b-fold chromatic number, i.e., the chromatic number of the blow-up G[K_b] where every vertex
	becomes a b-clique, searched exactly for b = 1 or a small graph and colored greedily otherwise

	parameters:
		b:				number of colors per vertex
		chi_f:			the fractional chromatic number when known, it is computed by the LP for small graphs otherwise

	outputs:
		bound:			integer with bound / b >= chi_f
	'''
	caps = get_default_caps()
	if exact_vertices is None: exact_vertices = caps.bfold_exact_vertices
	if max_fold is None: max_fold = caps.max_fold
	if debug:
		assert ispositiveinteger(b), 'the fold b should be a positive integer'
		assert b <= max_fold, 'the fold %d exceeds the cap of %d' % (b, max_fold)
		assert graph.vertex_count >= 1, 'the graph should have at least one vertex'

	if b == 1 and graph.vertex_count <= caps.coloring_max_vertices: bound = chromatic_number(graph, timeout=timeout, max_vertices=caps.coloring_max_vertices, debug=debug)
	else:
		blow_up = lexicographic_product(graph, b)
		if graph.vertex_count <= exact_vertices: bound = chromatic_number(blow_up, timeout=timeout, debug=debug)
		else: bound = max(greedy_coloring(blow_up)) + 1

	if chi_f is None and graph.vertex_count <= exact_vertices: chi_f = fractional_chromatic_lp(graph, timeout=timeout, debug=debug).chi_f
	if chi_f is not None: assert Fraction(bound, b) >= chi_f, 'the %d-fold bound %d is below b * chi_f' % (b, bound)
	return bound
