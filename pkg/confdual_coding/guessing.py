# this file contains guessing strategies on a side information graph, their winning sets and guessing numbers,
# and the constructions between strategies and storage codes
import itertools, math, numpy as np
from dataclasses import dataclass
from fractions import Fraction

from confdual_miscellaneous import ispositiveinteger, vertex2blocks, block_shifts, make_rng, AverageMeter, get_default_caps, print_log
from confdual_miscellaneous import NotIndependentError, ExhaustiveCapError
from confdual_miscellaneous.private import safe_block_lengths
from confdual_math import LogExpr, RateBound, evaluate_tuples, sum_capacity_bounds
from .coding import find_confusable_pair, storage_code_from_independent_set, tuple_string

@dataclass(frozen=True)
class SampledWin(object):
	'''
	estimate of the winning probability from uniform samples, radius is the half width of a 95% normal interval
	'''
	estimate: float
	samples: int
	radius: float
	seed: int

@dataclass(frozen=True)
class GuessingStrategy(object):
	'''
	graph:			SideInformationGraph
	t:				block lengths
	guess_tables:	tuple of dictionaries, guess_tables[j] maps every observation of A_j (blocks in increasing node order)
					to the guessed block of player j
	winning_set:	ascending tuple of the labels where every player is right, None in sampling mode
	p_win:			Fraction |W| / 2^sum(t), None in sampling mode
	p_rand:			Fraction 1 / 2^sum(t)
	sampled:		SampledWin in sampling mode
	'''
	graph: object
	t: tuple
	guess_tables: tuple
	winning_set: tuple = None
	p_win: Fraction = None
	p_rand: Fraction = None
	sampled: SampledWin = None

@dataclass(frozen=True)
class GuessingResult(object):
	'''
	k:				n log2 |W| / sum(t), None when W is empty (minus infinity)
	k_complement:	n - k, None when W is empty (plus infinity)
	'''
	k: LogExpr
	k_complement: LogExpr
	n: int
	total_bits: int

	def is_infinite(self):
		return self.k is None

def observation_widths(graph, t, node):
	return [t[i] for i in graph.sorted_in_set(node)]

def all_observations(graph, t, node):
	'''
	every possible observation of a player in lexicographic order
	'''
	return list(itertools.product(*[range(1 << bits) for bits in observation_widths(graph, t, node)]))

def _observation_index(key, widths):
	index = 0
	for block, bits in zip(key, widths): index = (index << bits) | block
	return index

def _table_array(graph, t, node, table):
	'''
	the guess table as an array indexed by the concatenated observation bits
	'''
	widths = observation_widths(graph, t, node)
	array = np.zeros(1 << sum(widths), dtype=np.int64)
	for key, guess in table.items(): array[_observation_index(key, widths)] = guess
	return array

def _correct_guesses(graph, t, node, table, labels):
	'''
	boolean array, True at the labels where player node guesses its block correctly
	'''
	shifts = block_shifts(t, debug=False)
	observed = np.zeros(labels.shape, dtype=np.int64)
	for i in graph.sorted_in_set(node): observed = (observed << t[i]) | ((labels >> shifts[i]) & ((1 << t[i]) - 1))
	own = (labels >> shifts[node]) & ((1 << t[node]) - 1)
	return _table_array(graph, t, node, table)[observed] == own

def complete_tables(graph, t, partial_tables):
	'''
	total guess tables from partial ones, unlisted observations guess the all-zero block
	'''
	tables = []
	for j in range(graph.n):
		table = {key: 0 for key in all_observations(graph, t, j)}
		table.update(partial_tables[j])
		tables.append(table)
	return tuple(tables)

######################################################### evaluation #########################################################
def evaluate_strategy(guess_tables, graph, t, samples=None, seed=0, exhaustive_max_bits=None, log=None, display=False, debug=True):
	'''
	winning set and winning probability of a strategy, exhaustively when sum(t) is within the exhaustive cap,
	from seeded uniform samples otherwise

	parameters:
		guess_tables:	one total table per player, missing observations guess the all-zero block
		samples:		number of samples, required above the exhaustive cap

	outputs:
		strategy:		GuessingStrategy
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	if debug: assert len(guess_tables) == graph.n, 'one guess table per player is required'
	if exhaustive_max_bits is None: exhaustive_max_bits = get_default_caps().exhaustive_max_bits
	total_bits = sum(t)
	p_rand = Fraction(1, 1 << total_bits)

	if total_bits <= exhaustive_max_bits:
		tables = complete_tables(graph, t, guess_tables)
		labels = np.arange(1 << total_bits, dtype=np.int64)
		winning = np.ones(labels.shape, dtype=bool)
		for j in range(graph.n): winning &= _correct_guesses(graph, t, j, tables[j], labels)
		winning_set = tuple(int(x) for x in np.flatnonzero(winning))
		return GuessingStrategy(graph=graph, t=t, guess_tables=tables, winning_set=winning_set, p_win=Fraction(len(winning_set), 1 << total_bits), p_rand=p_rand)

	if samples is None: raise ExhaustiveCapError('%d bits exceed the exhaustive cap of %d bits and no sample count is given' % (total_bits, exhaustive_max_bits))
	if debug: assert ispositiveinteger(samples), 'the number of samples should be a positive integer'
	tables = tuple(dict(table) for table in guess_tables)
	rng = make_rng(seed)
	draws = [rng.randint(0, 1 << bits, size=samples, dtype=np.int64) if bits > 0 else np.zeros(samples, dtype=np.int64) for bits in t]
	meter = AverageMeter()
	for sample in range(samples):
		blocks = [int(draw[sample]) for draw in draws]
		win = all(tables[j].get(tuple(blocks[i] for i in graph.sorted_in_set(j)), 0) == blocks[j] for j in range(graph.n))
		meter.update(1.0 if win else 0.0)
	radius = 1.96 * math.sqrt(meter.avg * (1 - meter.avg) / samples)
	print_log('guessing: sampled winning probability %.6f +- %.6f over %d samples' % (meter.avg, radius, samples), log=log, display=display)
	return GuessingStrategy(graph=graph, t=t, guess_tables=tables, p_rand=p_rand, sampled=SampledWin(estimate=meter.avg, samples=samples, radius=radius, seed=seed))

def strategy_from_independent_set(graph, t, independent_set, debug=True):
	'''
	every player guesses as if the values formed a member of the independent set, the block it would hold given what it observes,
	and the all-zero block on observations no member produces; the winning set contains the independent set
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	members = sorted(set(int(x) for x in independent_set))
	if debug: assert len(members) >= 1, 'the independent set should not be empty'
	violation = find_confusable_pair(graph, t, members)
	if violation is not None:
		(x, z), node = violation
		raise NotIndependentError('tuples %s and %s are confusable at node %d' % (tuple_string(x, t), tuple_string(z, t), node + 1), pair=(x, z), node=node)

	partial_tables = [dict() for _ in range(graph.n)]
	for x in members:
		blocks = vertex2blocks(x, t, debug=False)
		for j in range(graph.n): partial_tables[j][tuple(blocks[i] for i in graph.sorted_in_set(j))] = blocks[j]
	strategy = evaluate_strategy(partial_tables, graph, t, debug=debug)
	if debug: assert set(members) <= set(strategy.winning_set), 'the winning set does not contain the independent set'
	return strategy

def guessing_numbers(strategy, debug=True):
	'''
	k = log_s(p_win / p_rand) with s = 2^(sum(t) / n), i.e., n log2 |W| / sum(t), and k' = n - k
	'''
	n, total_bits = strategy.graph.n, sum(strategy.t)
	if debug:
		assert strategy.winning_set is not None, 'guessing numbers need an exhaustively evaluated strategy'
		assert total_bits > 0, 'guessing numbers need at least one bit'
	if len(strategy.winning_set) == 0: return GuessingResult(k=None, k_complement=None, n=n, total_bits=total_bits)
	k = LogExpr.log2(len(strategy.winning_set)) * Fraction(n, total_bits)
	return GuessingResult(k=k, k_complement=LogExpr(n) - k, n=n, total_bits=total_bits)

######################################################### bounds #########################################################
def optimal_guessing_bound(graph, t_enum, caps=None, threads=1, log=None, display=False, evaluations=None, debug=True):
	'''
	lower bound on the guessing number: max over the enumerated t of n log2 alpha / sum(t), ties keep the first t
	'''
	t_enum = [safe_block_lengths(t, graph.n, debug=debug) for t in t_enum]
	if debug: assert t_enum and all(sum(t) > 0 for t in t_enum), 'at least one nonzero tuple should be enumerated'
	if evaluations is None: evaluations = evaluate_tuples(graph, t_enum, caps=caps, threads=threads, log=log, display=display)
	best_value, best_evaluation = None, None
	for evaluation in evaluations:
		value = evaluation.log_alpha * Fraction(graph.n, evaluation.total_bits)
		if best_value is None or value > best_value: best_value, best_evaluation = value, evaluation
	witness = {'t': best_evaluation.t, 'alpha': best_evaluation.alpha, 'independent_set': best_evaluation.independent_set}
	return RateBound(quantity='k(G)', direction='lower', value=best_value, witness=witness, exhausted_range={'t': [evaluation.t for evaluation in evaluations]})

def guessing_duality_report(graph, t, caps=None, evaluation=None, debug=True):
	'''
	at one tuple: the guessing bound n log2 alpha / sum(t) equals n over the sum rate bound sum(t) / log2 alpha, and
	n minus it equals n over the sum capacity bound sum(t) / log2 chi_f, both bounds taken from sum_capacity_bounds

	outputs:
		report:			dictionary, skipped when alpha = 1
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	if evaluation is None: evaluation, = evaluate_tuples(graph, [t], caps=caps)
	if evaluation.alpha == 1: return {'t': t, 'alpha': 1, 'skipped': True, 'holds': True}
	n, total_bits = graph.n, evaluation.total_bits
	k = evaluation.log_alpha * Fraction(n, total_bits)
	k_complement = LogExpr(n) - k
	bounds = sum_capacity_bounds(graph, [t], caps=caps, evaluations=[evaluation], debug=debug)
	n_over_storage = bounds.storage.value.reciprocal() * n
	n_over_capacity = bounds.capacity.value.reciprocal() * n
	holds = k == n_over_storage and k_complement == n_over_capacity
	return {'t': t, 'alpha': evaluation.alpha, 'skipped': False, 'k': k, 'k_complement': k_complement, 'n_over_storage': n_over_storage,
		'n_over_capacity': n_over_capacity, 'holds': holds}

def guessing_duality_check(graph, t, caps=None, debug=True):
	return guessing_duality_report(graph, t, caps=caps, debug=debug)['holds']

######################################################### oracle and equivalence #########################################################
def max_winning_set_bruteforce(graph, t, max_strategies=1 << 20, debug=True):
	'''
	the largest winning set over every combination of guess tables, for tiny instances

	outputs:
		size:			max |W|
		tables:			the first strategy attaining it
	'''
	t = safe_block_lengths(t, graph.n, debug=debug)
	total_bits = sum(t)
	labels = np.arange(1 << total_bits, dtype=np.int64)
	choices = []
	count = 1
	for j in range(graph.n):
		observations = all_observations(graph, t, j)
		count *= (1 << t[j]) ** len(observations)
		if count > max_strategies: raise ExhaustiveCapError('more than %d strategies to enumerate' % max_strategies)
		player = []
		for guesses in itertools.product(range(1 << t[j]), repeat=len(observations)):
			table = dict(zip(observations, guesses))
			player.append((table, _correct_guesses(graph, t, j, table, labels)))
		choices.append(player)

	best_size, best_tables = -1, None
	for combination in itertools.product(*choices):
		winning = np.ones(labels.shape, dtype=bool)
		for _, correct in combination: winning &= correct
		size = int(winning.sum())
		if size > best_size: best_size, best_tables = size, tuple(table for table, _ in combination)
	return best_size, best_tables

def strategy_from_storage_code(code, debug=True):
	'''
	players guess with the recovery tables of a storage code, the winning set contains the codebook
	'''
	return strategy_from_independent_set(code.graph, code.t, code.codebook, debug=debug)

def storage_code_from_strategy(strategy, debug=True):
	'''
	the winning set of a strategy is an independent set of the confusion graph, so it carries a storage code with
	r = floor(log2 |W|)
	'''
	if debug: assert strategy.winning_set, 'the winning set is empty'
	return storage_code_from_independent_set(strategy.graph, strategy.t, strategy.winning_set, debug=debug)
