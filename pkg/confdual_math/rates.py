# this file contains the lambda-directed capacity and storage rate bounds, the symmetric and (weighted) sum quantities
# and the exact duality checks between index coding and distributed storage
import itertools, math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from confdual_miscellaneous import ispositiveinteger, islistofpositiveinteger, isblocklengths, print_log, get_default_caps
from confdual_miscellaneous import NoAdmissibleScalingError, CapExceededError
from confdual_miscellaneous.private import safe_block_lengths, safe_weight_vector
from confdual_graph import build_confusion_graph, to_explicit
from .independence import confusion_alpha
from .fracchrom import fractional_chromatic_lp
from .logform import LogExpr, LogRatio

@dataclass(frozen=True)
class TupleEvaluation(object):
	'''
	independence data of one confusion graph, chi_f = 2^total_bits / alpha by vertex transitivity
	'''
	t: tuple
	total_bits: int
	alpha: int
	independent_set: tuple

	@property
	def chi_f(self):
		return Fraction(1 << self.total_bits, self.alpha)

	@property
	def log_chi_f(self):
		return LogExpr(self.total_bits) - LogExpr.log2(self.alpha)

	@property
	def log_alpha(self):
		return LogExpr.log2(self.alpha)

@dataclass(frozen=True)
class RateBound(object):
	'''
	a certified one-sided bound

	quantity:			name of the bounded quantity, e.g., 'C(lambda)' or 'R_sum'
	direction:			'lower' or 'upper'
	value:				LogRatio, or LogExpr for reciprocal quantities
	witness:			dictionary describing the scaling r and tuple t attaining the value, None for the infinite marker
	exhausted_range:	dictionary describing the finite enumeration behind the bound
	vector:				the direction lambda or weights mu, None for unweighted sums
	'''
	quantity: str
	direction: str
	value: object
	witness: dict
	exhausted_range: dict
	vector: tuple = None
	skipped: tuple = field(default_factory=tuple)

	def is_infinite(self):
		return isinstance(self.value, LogRatio) and self.value.is_infinite()

######################################################### enumeration #########################################################
def admissible_scalings(lam, r_range, max_bits=None, debug=True):
	'''
	the scalings r in r_range with r * lambda integral and sum(r * lambda) within the bit cap, in increasing r

	outputs:
		scalings:		list of (r, t) with t = r * lambda as a tuple of int
	'''
	if max_bits is None: max_bits = get_default_caps().max_bits
	if debug:
		assert islistofpositiveinteger(sorted(r_range)), 'the scalings r should be positive integers'
		assert any(entry > 0 for entry in lam), 'the direction lambda should not be zero'
	scalings = []
	for r in sorted(set(r_range)):
		scaled = [r * Fraction(entry) for entry in lam]
		if any(entry.denominator != 1 for entry in scaled): continue
		t = tuple(int(entry) for entry in scaled)
		if sum(t) > max_bits: continue
		scalings.append((r, t))
	if not scalings: raise NoAdmissibleScalingError('no r in %s makes r * lambda integral within %d bits' % (str(sorted(set(r_range))), max_bits))
	return scalings

def enumerate_tuples(t_max, max_bits=None, debug=True):
	'''
	all nonzero tuples t <= t_max componentwise with sum(t) within the bit cap, in lexicographic order
	'''
	if max_bits is None: max_bits = get_default_caps().max_bits
	if debug: assert isblocklengths(t_max) and sum(t_max) > 0, 'the bound t_max should be nonnegative integers, not all zero'
	tuples = [t for t in itertools.product(*[range(bound + 1) for bound in t_max]) if 0 < sum(t) <= max_bits]
	if not tuples: raise CapExceededError('no nonzero tuple under %s fits in %d bits' % (str(tuple(t_max)), max_bits), module='rates')
	return tuples

def _evaluate_task(arguments):
	graph, t, timeout, max_bits, max_vertices = arguments
	confusion = build_confusion_graph(graph, t, max_bits=max_bits)
	certificate = confusion_alpha(confusion, timeout=timeout, max_vertices=max_vertices)
	return TupleEvaluation(t=tuple(t), total_bits=confusion.total_bits, alpha=certificate.alpha, independent_set=certificate.witness)

def evaluate_tuples(graph, tuples, caps=None, threads=1, log=None, display=False):
	'''
	the independence number of the confusion graph of every tuple, in the order of tuples,
	the tuples are spread over a process pool when threads > 1 and every alpha is exact either way
	'''
	if caps is None: caps = get_default_caps()
	tasks = [(graph, tuple(t), caps.timeout, caps.max_bits, caps.max_vertices) for t in tuples]
	if threads > 1 and len(tasks) > 1:
		with ProcessPoolExecutor(max_workers=threads) as executor: evaluations = list(executor.map(_evaluate_task, tasks))
	else: evaluations = [_evaluate_task(task) for task in tasks]
	for evaluation in evaluations:
		print_log('rates: t = %s, alpha = %d' % (str(evaluation.t), evaluation.alpha), log=log, display=display)
	return evaluations

def _best(candidates, better):
	'''
	the first candidate not beaten by any later one, so ties keep the smallest r or the lexicographically first t
	'''
	best = None
	for candidate in candidates:
		if best is None or better(candidate[0], best[0]): best = candidate
	return best

def _witness(evaluation, r=None):
	witness = {'t': evaluation.t, 'alpha': evaluation.alpha, 'chi_f': evaluation.chi_f, 'independent_set': evaluation.independent_set}
	if r is not None: witness['r'] = r
	return witness

######################################################### directional bounds #########################################################
def capacity_lower_bound(graph, lam, r_range, caps=None, threads=1, log=None, display=False, debug=True):
	'''
	lower bound on the lambda-directed capacity: max over the admissible r of r / log2 chi_f(confusion graph at r * lambda),
	every candidate is achievable, so the maximum is a certified lower bound

	parameters:
		graph:			SideInformationGraph
		lam:			direction, nonnegative rationals
		r_range:		candidate scalings

	outputs:
		bound:			RateBound for C(lambda)
	'''
	if caps is None: caps = get_default_caps()
	lam = safe_weight_vector(lam, graph.n, debug=debug)
	scalings = admissible_scalings(lam, r_range, caps.max_bits, debug=debug)
	evaluations = evaluate_tuples(graph, [t for _, t in scalings], caps=caps, threads=threads, log=log, display=display)
	candidates = [(LogRatio(r, evaluation.log_chi_f), r, evaluation) for (r, _), evaluation in zip(scalings, evaluations)]
	value, r, evaluation = _best(candidates, lambda a, b: a > b)
	return RateBound(quantity='C(lambda)', direction='lower', value=value, witness=_witness(evaluation, r), exhausted_range={'r': [r for r, _ in scalings]}, vector=lam)

def storage_rate_upper_bound(graph, lam, r_range, caps=None, threads=1, log=None, display=False, debug=True):
	'''
	upper bound on the lambda-directed storage rate: min over the admissible r of r / log2 alpha(confusion graph at r * lambda),
	scalings with alpha = 1 store nothing and are skipped, the infinite marker is returned when every scaling is skipped
	'''
	if caps is None: caps = get_default_caps()
	lam = safe_weight_vector(lam, graph.n, debug=debug)
	scalings = admissible_scalings(lam, r_range, caps.max_bits, debug=debug)
	evaluations = evaluate_tuples(graph, [t for _, t in scalings], caps=caps, threads=threads, log=log, display=display)
	skipped = tuple(r for (r, _), evaluation in zip(scalings, evaluations) if evaluation.alpha == 1)
	candidates = [(LogRatio(r, evaluation.log_alpha), r, evaluation) for (r, _), evaluation in zip(scalings, evaluations) if evaluation.alpha > 1]
	exhausted_range = {'r': [r for r, _ in scalings], 'skipped_r': list(skipped)}
	if not candidates: return RateBound(quantity='R(lambda)', direction='upper', value=LogRatio.infinity(), witness=None, exhausted_range=exhausted_range, vector=lam, skipped=skipped)
	value, r, evaluation = _best(candidates, lambda a, b: a < b)
	return RateBound(quantity='R(lambda)', direction='upper', value=value, witness=_witness(evaluation, r), exhausted_range=exhausted_range, vector=lam, skipped=skipped)

def duality_identity_report(graph, lam, r, caps=None, timeout=None, log=None, display=False, debug=True):
	'''
	chi_f * alpha = 2^sum(r * lambda) at one scaling, with chi_f from the column generation LP and alpha from the branch and bound

	outputs:
		report:			dictionary with t, chi_f, alpha, product, expected and holds
	'''
	if caps is None: caps = get_default_caps()
	if debug: assert ispositiveinteger(r), 'the scaling r should be a positive integer'
	lam = safe_weight_vector(lam, graph.n, debug=debug)
	(_, t), = admissible_scalings(lam, [r], caps.max_bits, debug=debug)
	confusion = build_confusion_graph(graph, t, max_bits=caps.max_bits, debug=debug)
	if confusion.vertex_count > caps.lp_max_vertices:
		raise CapExceededError('%d vertices exceed the LP cap of %d vertices' % (confusion.vertex_count, caps.lp_max_vertices), module='rates')
	if timeout is None: timeout = caps.timeout
	chromatic = fractional_chromatic_lp(to_explicit(confusion, max_vertices=caps.max_vertices), timeout=timeout, log=log, display=display, debug=debug)
	certificate = confusion_alpha(confusion, timeout=timeout, max_vertices=caps.max_vertices, log=log, display=display, debug=debug)
	product = chromatic.chi_f * certificate.alpha
	expected = 1 << confusion.total_bits
	return {'r': r, 't': t, 'chi_f': chromatic.chi_f, 'alpha': certificate.alpha, 'product': product, 'expected': expected, 'holds': product == expected}

def duality_identity_check(graph, lam, r, caps=None, timeout=None, debug=True):
	return duality_identity_report(graph, lam, r, caps=caps, timeout=timeout, debug=debug)['holds']

def normalize_direction(lam, debug=True):
	'''
	scale a nonzero direction so that its entries sum to the number of nodes
	'''
	lam = tuple(Fraction(entry) for entry in lam)
	total = sum(lam)
	if debug: assert total > 0, 'the direction lambda should not be zero'
	return tuple(entry * len(lam) / total for entry in lam)

@dataclass(frozen=True)
class ComplementarityReport(object):
	'''
	inverse_capacity:		1 / (capacity bound)
	rate_complement:		sum(lambda) - 1 / (storage bound)
	residual:				inverse_capacity - rate_complement, zero when the identity holds
	residual_interval:		[min(0, residual), max(0, residual)]
	implied_capacity:		the capacity lower bound implied by the storage bound, max with the given one
	implied_storage:		the storage upper bound implied by the capacity bound, min with the given one
	normalized:				the same quantities for lambda scaled to sum n
	'''
	same_witness: bool
	exact: bool
	inverse_capacity: LogExpr
	rate_complement: LogExpr
	residual: LogExpr
	residual_interval: tuple
	implied_capacity: LogRatio
	implied_storage: LogRatio
	normalized: dict

def _implied_ratio(total, inverse):
	'''
	1 / (total - inverse) as a ratio, infinite when total - inverse vanishes
	'''
	difference = LogExpr(total) - inverse
	if difference.sign() == 0: return LogRatio.infinity()
	scale = difference.constant.denominator
	for _, coefficient in difference.terms: scale = scale * coefficient.denominator // math.gcd(scale, coefficient.denominator)
	return LogRatio(scale, difference * scale)

def complementarity_report(capacity_bound, storage_bound, lam, debug=True):
	'''
	check 1/C(lambda) = sum(lambda) - 1/R(lambda) on two bounds; bounds from the same scaling r satisfy it exactly,
	otherwise the residual and the bounds each side implies on the other are reported

	outputs:
		report:			ComplementarityReport
	'''
	lam = tuple(Fraction(entry) for entry in lam)
	if debug:
		assert capacity_bound.vector is None or tuple(capacity_bound.vector) == lam, 'the capacity bound belongs to another direction'
		assert storage_bound.vector is None or tuple(storage_bound.vector) == lam, 'the storage bound belongs to another direction'
	total = sum(lam)
	inverse_capacity = capacity_bound.value.reciprocal()
	inverse_storage = storage_bound.value.reciprocal()
	rate_complement = LogExpr(total) - inverse_storage
	residual = inverse_capacity - rate_complement
	zero = LogExpr(0)
	same_witness = storage_bound.witness is not None and capacity_bound.witness['r'] == storage_bound.witness['r']

	implied_storage = min(storage_bound.value, _implied_ratio(total, inverse_capacity))
	implied_capacity = max(capacity_bound.value, _implied_ratio(total, inverse_storage))

	# C(c lambda) = C(lambda) / c, so 1/C scales by c with c = n / sum(lambda)
	factor = Fraction(len(lam)) / total
	normalized = {'lambda': normalize_direction(lam, debug=debug), 'inverse_capacity': inverse_capacity * factor, 'rate_complement': rate_complement * factor,
		'inverse_storage': inverse_storage * factor, 'residual': residual * factor}
	return ComplementarityReport(same_witness=same_witness, exact=residual.sign() == 0, inverse_capacity=inverse_capacity, rate_complement=rate_complement,
		residual=residual, residual_interval=(min(zero, residual), max(zero, residual)), implied_capacity=implied_capacity, implied_storage=implied_storage, normalized=normalized)

def broadcast_rate_bound(capacity_bound):
	'''
	upper bound on the broadcast rate beta = 1 / C_sym from a symmetric capacity lower bound
	'''
	return RateBound(quantity='beta', direction='upper', value=capacity_bound.value.reciprocal(), witness=capacity_bound.witness,
		exhausted_range=capacity_bound.exhausted_range, vector=capacity_bound.vector)

def normalized_rate_bound(storage_bound):
	'''
	lower bound on 1 / R_sym from a symmetric storage upper bound, zero for the infinite marker
	'''
	return RateBound(quantity='1/R_sym', direction='lower', value=storage_bound.value.reciprocal(), witness=storage_bound.witness,
		exhausted_range=storage_bound.exhausted_range, vector=storage_bound.vector)

def scaling_monotonicity_check(graph, lam, r, m, caps=None, debug=True):
	'''
	the capacity bound at the scaling m * r is no smaller than the bound at r
	'''
	if debug: assert ispositiveinteger(m), 'the multiplier m should be a positive integer'
	single = capacity_lower_bound(graph, lam, [r], caps=caps, debug=debug)
	multiple = capacity_lower_bound(graph, lam, [m * r], caps=caps, debug=debug)
	return multiple.value >= single.value

def direction_witness(t, lam, debug=True):
	'''
	a scaling q with q * lambda <= a_j * t componentwise, where lambda = a / b over a common denominator b and
	j = argmin_{lambda_i > 0} t_i / lambda_i (lowest j on ties), so the bound at q dominates the point of t along lambda

	outputs:
		q:			positive integer, q = t_j * b
		j:			the minimizing node
	'''
	lam = tuple(Fraction(entry) for entry in lam)
	if debug:
		assert isblocklengths(t, len(lam)), 'the tuple t does not match the direction'
		assert any(entry > 0 for entry in lam), 'the direction lambda should not be zero'
	common = 1
	for entry in lam: common = common * entry.denominator // math.gcd(common, entry.denominator)
	numerators = [int(entry * common) for entry in lam]
	j = min((i for i in range(len(lam)) if lam[i] > 0), key=lambda i: (Fraction(t[i]) / lam[i], i))
	q = t[j] * common
	if debug: assert all(q * lam[i] <= numerators[j] * t[i] for i in range(len(lam))), 'the scaling %d leaves the box of %s' % (q, str(tuple(t)))
	return q, j

######################################################### sum quantities #########################################################
@dataclass(frozen=True)
class SumBounds(object):
	'''
	capacity:			RateBound for C_sum (lower)
	storage:			RateBound for R_sum (upper)
	identities:			per tuple, (t, 1/C_t, 1 - 1/R_t, holds)
	residual_interval:	[min(0, rho), max(0, rho)] for rho = 1/capacity + 1/storage - 1 at the best witnesses
	'''
	capacity: RateBound
	storage: RateBound
	identities: tuple
	residual_interval: tuple

def _sum_value(evaluation, weights, log_value):
	numerator = sum((weight * bits for weight, bits in zip(weights, evaluation.t)), Fraction(0))
	return LogRatio(numerator, log_value)

def sum_capacity_bounds(graph, t_enum, caps=None, threads=1, log=None, display=False, evaluations=None, debug=True):
	'''
	bounds on the sum capacity and the optimal sum rate over the enumerated tuples: C_sum >= max_t sum(t) / log2 chi_f and
	R_sum <= min_{t: alpha > 1} sum(t) / log2 alpha, with the per tuple identity 1/(C point) = 1 - 1/(R point) checked exactly
	'''
	t_enum = [safe_block_lengths(t, graph.n, debug=debug) for t in t_enum]
	if evaluations is None: evaluations = evaluate_tuples(graph, t_enum, caps=caps, threads=threads, log=log, display=display)
	ones = (1,) * graph.n
	capacity, storage = weighted_sum_bounds(graph, ones, t_enum, caps=caps, evaluations=evaluations, debug=debug)
	capacity = RateBound(quantity='C_sum', direction='lower', value=capacity.value, witness=capacity.witness, exhausted_range=capacity.exhausted_range)
	storage = RateBound(quantity='R_sum', direction='upper', value=storage.value, witness=storage.witness, exhausted_range=storage.exhausted_range, skipped=storage.skipped)

	identities = []
	for evaluation in evaluations:
		inverse_capacity = evaluation.log_chi_f / evaluation.total_bits
		complement = LogExpr(1) - evaluation.log_alpha / evaluation.total_bits
		identities.append((evaluation.t, inverse_capacity, complement, inverse_capacity == complement))

	rho = capacity.value.reciprocal() + storage.value.reciprocal() - 1
	zero = LogExpr(0)
	return SumBounds(capacity=capacity, storage=storage, identities=tuple(identities), residual_interval=(min(zero, rho), max(zero, rho)))

def weighted_sum_bounds(graph, mu, t_enum, caps=None, threads=1, log=None, display=False, evaluations=None, debug=True):
	'''
	bounds on the mu-weighted sum capacity and sum rate: max over the enumerated capacity points of sum_i mu_i R_i and
	min over the storage points (alpha > 1) of sum_i mu_i R'_i

	outputs:
		capacity:		RateBound, lower bound on the weighted sum capacity
		storage:		RateBound, upper bound on the weighted sum rate, infinite when every alpha is 1
	'''
	mu = safe_weight_vector(mu, graph.n, debug=debug)
	t_enum = [safe_block_lengths(t, graph.n, debug=debug) for t in t_enum]
	if debug: assert t_enum and all(sum(t) > 0 for t in t_enum), 'at least one tuple should be enumerated and none may be all zero'
	if evaluations is None: evaluations = evaluate_tuples(graph, t_enum, caps=caps, threads=threads, log=log, display=display)
	exhausted_range = {'t': [evaluation.t for evaluation in evaluations]}

	capacity_candidates = [(_sum_value(evaluation, mu, evaluation.log_chi_f), evaluation) for evaluation in evaluations]
	value, evaluation = _best(capacity_candidates, lambda a, b: a > b)
	capacity = RateBound(quantity='C_bar(mu)', direction='lower', value=value, witness=_witness(evaluation), exhausted_range=exhausted_range, vector=mu)

	skipped = tuple(evaluation.t for evaluation in evaluations if evaluation.alpha == 1)
	storage_candidates = [(_sum_value(evaluation, mu, evaluation.log_alpha), evaluation) for evaluation in evaluations if evaluation.alpha > 1]
	if not storage_candidates:
		storage = RateBound(quantity='R_bar(mu)', direction='upper', value=LogRatio.infinity(), witness=None, exhausted_range=exhausted_range, vector=mu, skipped=skipped)
	else:
		value, evaluation = _best(storage_candidates, lambda a, b: a < b)
		storage = RateBound(quantity='R_bar(mu)', direction='upper', value=value, witness=_witness(evaluation), exhausted_range=exhausted_range, vector=mu, skipped=skipped)
	return capacity, storage

######################################################### region #########################################################
@dataclass(frozen=True)
class RegionPoint(object):
	'''
	achievable corner points of one tuple: capacity_point[j] = t_j / log2 chi_f and storage_point[j] = t_j / log2 alpha,
	storage_point is None when alpha = 1
	'''
	t: tuple
	alpha: int
	capacity_point: tuple
	storage_point: tuple

def region_sample(graph, t_max, caps=None, threads=1, log=None, display=False, debug=True):
	'''
	the achievable index coding and storage corner points of every nonzero t <= t_max
	'''
	if caps is None: caps = get_default_caps()
	t_max = safe_block_lengths(t_max, graph.n, debug=debug)
	tuples = enumerate_tuples(t_max, caps.max_bits, debug=debug)
	points = []
	for evaluation in evaluate_tuples(graph, tuples, caps=caps, threads=threads, log=log, display=display):
		capacity_point = tuple(LogRatio(bits, evaluation.log_chi_f) for bits in evaluation.t)
		storage_point = None if evaluation.alpha == 1 else tuple(LogRatio(bits, evaluation.log_alpha) for bits in evaluation.t)
		points.append(RegionPoint(t=evaluation.t, alpha=evaluation.alpha, capacity_point=capacity_point, storage_point=storage_point))
	return points

def integer_storage_point(graph, t, caps=None, debug=True):
	'''
	the storage point of codes with an integer number of stored bits r = floor(log2 alpha), i.e., t_j / r

	outputs:
		r:			floor(log2 alpha)
		point:		tuple of Fraction, None when r = 0
	'''
	if caps is None: caps = get_default_caps()
	t = safe_block_lengths(t, graph.n, debug=debug)
	evaluation, = evaluate_tuples(graph, [t], caps=caps)
	r = evaluation.alpha.bit_length() - 1
	if r == 0: return 0, None
	return r, tuple(Fraction(bits, r) for bits in t)
