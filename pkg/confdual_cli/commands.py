# this file contains one function per subcommand, each turns a RunConfig into the results and the identity checks of a report
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from confdual_miscellaneous import Caps, make_rng, rational2str, print_table, CodeFormatError, NoAdmissibleScalingError
from confdual_graph import build_confusion_graph, to_explicit, translation_automorphism_check, confusion_degree, confusion_edge_count, serialize_undirected
from confdual_math import confusion_alpha, is_independent, fractional_chromatic_lp, fractional_chromatic_transitive, verify_fractional_coloring
from confdual_math import optimal_coloring, clique_lower_bound, b_fold_chromatic_upper, LogExpr
from confdual_math import capacity_lower_bound, storage_rate_upper_bound, duality_identity_report, complementarity_report, broadcast_rate_bound
from confdual_math import normalized_rate_bound, enumerate_tuples, evaluate_tuples, sum_capacity_bounds, weighted_sum_bounds, region_sample
from confdual_coding import index_code_from_coloring, storage_code_from_independent_set, strategy_from_independent_set, evaluate_strategy
from confdual_coding import guessing_numbers, optimal_guessing_bound, guessing_duality_report, verify_code, simulate_failure, StorageCode
from confdual_io import save_txt_file, save_code, save_strategy, load_json_file, import_code, import_strategy, export_code
from .report import render_vertices

AUTOMORPHISM_SAMPLE = 256

@dataclass
class RunConfig(object):
	'''
	parsed command line of one run, vectors are already exact and 0-indexed, caps already carry the overrides
	'''
	command: str
	graph_path: str = None
	graph: object = None
	t: tuple = None
	lam: tuple = None
	mu: tuple = None
	r_range: tuple = None
	t_max: tuple = None
	caps: Caps = field(default_factory=Caps)
	fmt: str = 'json'
	seed: int = 0
	threads: int = 1
	samples: int = None
	kind: str = None
	code_path: str = None
	dump_path: str = None
	output: str = None
	log: object = None

	def echo(self):
		'''
		the configuration as written into the report, without file handles
		'''
		echo = {'graph': self.graph_path, 'seed': self.seed, 'threads': self.threads,
			'caps': {'max_bits': self.caps.max_bits, 'max_vertices': self.caps.max_vertices, 'timeout': self.caps.timeout}}
		if self.t is not None: echo['t'] = list(self.t)
		if self.lam is not None: echo['lambda'] = [rational2str(entry) for entry in self.lam]
		if self.mu is not None: echo['mu'] = [rational2str(entry) for entry in self.mu]
		if self.r_range is not None: echo['r'] = list(self.r_range)
		if self.t_max is not None: echo['t_max'] = list(self.t_max)
		if self.samples is not None: echo['samples'] = self.samples
		if self.kind is not None: echo['kind'] = self.kind
		if self.code_path is not None: echo['code'] = self.code_path
		return echo

FLAGS = {'graph': 'graph', 't': 't', 'lam': 'lambda', 'mu': 'mu', 't_max': 't-max', 'kind': 'kind', 'code_path': 'code'}

def _require(config, *names):
	for name in names:
		assert getattr(config, name) is not None, 'the %s command needs --%s' % (config.command, FLAGS[name])

def _confusion(config):
	_require(config, 'graph', 't')
	return build_confusion_graph(config.graph, config.t, max_bits=config.caps.max_bits)

def _automorphism_sample(confusion, seed):
	'''
	all vertex pairs of small confusion graphs, seeded random pairs otherwise
	'''
	count = confusion.vertex_count
	if count * (count - 1) // 2 <= AUTOMORPHISM_SAMPLE: return None
	rng = make_rng(seed)
	return [(int(x), int(z)) for x, z in rng.randint(0, count, size=(AUTOMORPHISM_SAMPLE, 2))]

######################################################### graph quantities #########################################################
def cmd_confusion(config):
	confusion = _confusion(config)
	t = confusion.t
	results = {'t': t, 'vertices': confusion.vertex_count, 'total_bits': confusion.total_bits, 'degree': confusion_degree(confusion),
		'confusable_diffs': len(confusion.confusable_diffs), 'edges': confusion_edge_count(confusion)}
	if len(confusion.confusable_diffs) <= AUTOMORPHISM_SAMPLE: results['diffs'] = render_vertices(confusion.confusable_diffs, t)

	translation = (1 << confusion.total_bits) - 1
	checks = {'translation_automorphism': translation_automorphism_check(confusion, translation, sample=_automorphism_sample(confusion, config.seed))}
	if config.dump_path is not None:
		explicit = to_explicit(confusion, max_vertices=config.caps.max_vertices)
		save_txt_file(serialize_undirected(explicit, comment='confusion graph of %s at t = %s' % (config.graph_path, ','.join(str(bits) for bits in t))), config.dump_path)
		results['dump'] = config.dump_path
		checks['edge_count'] = explicit.num_edges == results['edges']
	results['summary'] = 'vertices=%d, degree=%d' % (results['vertices'], results['degree'])
	return results, checks

def cmd_alpha(config):
	confusion = _confusion(config)
	certificate = confusion_alpha(confusion, timeout=config.caps.timeout, max_vertices=config.caps.max_vertices, log=config.log, display=False)
	chi_f = Fraction(confusion.vertex_count, certificate.alpha)
	results = {'t': confusion.t, 'vertices': confusion.vertex_count, 'alpha': certificate.alpha, 'independent_set': render_vertices(certificate.witness, confusion.t),
		'nodes_explored': certificate.nodes_explored, 'chi_f': chi_f, 'log2_alpha': LogExpr.log2(certificate.alpha),
		'summary': 'alpha=%d, chi_f=%s' % (certificate.alpha, rational2str(chi_f))}
	checks = {'independent': is_independent(to_explicit(confusion, max_vertices=config.caps.max_vertices), certificate.witness)}
	return results, checks

def cmd_chromatic(config):
	'''
	chi_f by vertex transitivity, the LP certificate and the exact chromatic number when the graph is within their caps,
	and the b-fold upper bounds for b up to the fold cap
	'''
	confusion = _confusion(config)
	caps = config.caps
	chi_f = fractional_chromatic_transitive(confusion, timeout=caps.timeout, max_vertices=caps.max_vertices, log=config.log)
	explicit = to_explicit(confusion, max_vertices=caps.max_vertices)
	results = {'t': confusion.t, 'vertices': confusion.vertex_count, 'chi_f': chi_f, 'clique_lower_bound': clique_lower_bound(explicit)}
	checks = {}
	summary = ['chi_f=%s' % rational2str(chi_f)]

	if confusion.vertex_count <= caps.lp_max_vertices:
		result = fractional_chromatic_lp(explicit, timeout=caps.timeout, log=config.log)
		results['chi_f_lp'] = result.chi_f
		results['lp_columns'] = len(result.coloring.columns)
		results['lp_iterations'] = result.iterations
		checks['lp_matches_transitive'] = result.chi_f == chi_f
		checks['lp_certificates'] = verify_fractional_coloring(explicit, result, timeout=caps.timeout)
	else: results['skipped_lp'] = True

	if confusion.vertex_count <= caps.coloring_max_vertices:
		num_colors, colors = optimal_coloring(explicit, timeout=caps.timeout, log=config.log)
		results['chromatic_number'] = num_colors
		checks['chi_f_at_most_chi'] = chi_f <= num_colors
		summary.append('chi=%d' % num_colors)
	else: results['skipped_coloring'] = True

	folds = dict()
	for b in range(1, caps.max_fold + 1):
		if confusion.vertex_count * b > caps.max_vertices: break
		folds[str(b)] = b_fold_chromatic_upper(explicit, b, chi_f=chi_f, exact_vertices=caps.bfold_exact_vertices, max_fold=caps.max_fold, timeout=caps.timeout)
	results['b_fold_upper'] = folds
	checks['b_fold_above_chi_f'] = all(Fraction(bound, int(b)) >= chi_f for b, bound in folds.items())
	results['summary'] = ', '.join(summary)
	return results, checks

######################################################### rates #########################################################
def _r_range(config):
	return (1,) if config.r_range is None else config.r_range

def cmd_capacity(config):
	_require(config, 'graph', 'lam')
	bound = capacity_lower_bound(config.graph, config.lam, _r_range(config), caps=config.caps, threads=config.threads, log=config.log)
	results = {'bound': bound, 'summary': 'C(lambda) >= %s' % bound.value.render()}
	if len(set(config.lam)) == 1: results['broadcast_rate'] = broadcast_rate_bound(bound)
	return results, {}

def cmd_storage_rate(config):
	_require(config, 'graph', 'lam')
	bound = storage_rate_upper_bound(config.graph, config.lam, _r_range(config), caps=config.caps, threads=config.threads, log=config.log)
	results = {'bound': bound, 'summary': 'R(lambda) <= %s' % bound.value.render()}
	if len(set(config.lam)) == 1: results['normalized_rate'] = normalized_rate_bound(bound)
	return results, {}

def cmd_duality(config):
	'''
	chi_f * alpha = 2^sum(t) at every scaling by the LP and the branch and bound, then the complementarity of the two
	directional bounds over the whole range
	'''
	_require(config, 'graph', 'lam')
	r_range = _r_range(config)
	identities = []
	for r in r_range:
		try: identities.append(duality_identity_report(config.graph, config.lam, r, caps=config.caps, log=config.log))
		except NoAdmissibleScalingError: continue
	assert identities, 'no r in %s makes r * lambda integral' % str(list(r_range))
	capacity = capacity_lower_bound(config.graph, config.lam, r_range, caps=config.caps, threads=config.threads, log=config.log)
	storage = storage_rate_upper_bound(config.graph, config.lam, r_range, caps=config.caps, threads=config.threads, log=config.log)
	complementarity = complementarity_report(capacity, storage, config.lam)

	results = {'identities': identities, 'capacity': capacity, 'storage': storage,
		'complementarity': {'same_witness': complementarity.same_witness, 'exact': complementarity.exact, 'inverse_capacity': complementarity.inverse_capacity,
			'rate_complement': complementarity.rate_complement, 'residual': complementarity.residual, 'residual_interval': complementarity.residual_interval,
			'implied_capacity': complementarity.implied_capacity, 'implied_storage': complementarity.implied_storage, 'normalized': complementarity.normalized},
		'summary': '1/C=%s, Σλ−1/R=%s, exact: %s' % (complementarity.inverse_capacity.render(), complementarity.rate_complement.render(), str(complementarity.exact).lower())}
	checks = {'chi_f_alpha_identity': all(report['holds'] for report in identities)}
	# bounds from different scalings only bracket the identity
	if complementarity.same_witness: checks['complementarity'] = complementarity.exact
	return results, checks

def cmd_sum(config):
	'''
	sum capacity, sum rate and guessing bounds over one enumeration, with the per tuple identities
	'''
	_require(config, 'graph', 't_max')
	graph = config.graph
	tuples = enumerate_tuples(config.t_max, config.caps.max_bits)
	evaluations = evaluate_tuples(graph, tuples, caps=config.caps, threads=config.threads, log=config.log)
	bounds = sum_capacity_bounds(graph, tuples, caps=config.caps, evaluations=evaluations)
	guessing = optimal_guessing_bound(graph, tuples, caps=config.caps, evaluations=evaluations)
	k_complement = LogExpr(graph.n) - guessing.value
	reports = [guessing_duality_report(graph, evaluation.t, caps=config.caps, evaluation=evaluation) for evaluation in evaluations]

	results = {'capacity': bounds.capacity, 'storage': bounds.storage, 'guessing': guessing, 'k_complement_upper': k_complement,
		'residual_interval': bounds.residual_interval,
		'identities': [{'t': t, 'inverse_capacity': inverse, 'rate_complement': complement, 'holds': holds} for t, inverse, complement, holds in bounds.identities],
		'guessing_identities': reports,
		'summary': 'C_sum>=%s, R_sum<=%s, k>=%s, k\'<=%s' % (bounds.capacity.value.render(), bounds.storage.value.render(), guessing.value.render(), k_complement.render())}
	checks = {'per_tuple_identity': all(holds for _, _, _, holds in bounds.identities), 'guessing_identity': all(report['holds'] for report in reports)}
	if not bounds.storage.is_infinite(): checks['guessing_equals_n_over_rate'] = guessing.value == bounds.storage.value.reciprocal() * graph.n
	return results, checks

def cmd_weighted(config):
	_require(config, 'graph', 'mu', 't_max')
	tuples = enumerate_tuples(config.t_max, config.caps.max_bits)
	capacity, storage = weighted_sum_bounds(config.graph, config.mu, tuples, caps=config.caps, threads=config.threads, log=config.log)
	results = {'capacity': capacity, 'storage': storage, 'summary': 'C_bar(mu)>=%s, R_bar(mu)<=%s' % (capacity.value.render(), storage.value.render())}
	return results, {}

def cmd_region(config):
	'''
	the achievable corner points of every enumerated tuple, printed as a table in text mode
	'''
	_require(config, 'graph', 't_max')
	points = region_sample(config.graph, config.t_max, caps=config.caps, threads=config.threads, log=config.log)
	rows = [{'t': point.t, 'alpha': point.alpha, 'capacity_point': list(point.capacity_point),
		'storage_point': None if point.storage_point is None else list(point.storage_point)} for point in points]
	if config.fmt == 'text':
		table = [[','.join(str(bits) for bits in point.t), point.alpha, ' '.join(value.render() for value in point.capacity_point),
			'-' if point.storage_point is None else ' '.join(value.render() for value in point.storage_point)] for point in points]
		print_table(['t', 'alpha', 'index point', 'storage point'], table, log=config.log, width=24)
	return {'points': rows, 'summary': '%d tuples' % len(rows)}, {}

######################################################### codes and strategies #########################################################
def cmd_guess(config):
	'''
	the strategy built from a maximum independent set, its winning set equals the independent set
	'''
	confusion = _confusion(config)
	certificate = confusion_alpha(confusion, timeout=config.caps.timeout, max_vertices=config.caps.max_vertices, log=config.log)
	strategy = strategy_from_independent_set(config.graph, confusion.t, certificate.witness)
	numbers = guessing_numbers(strategy)
	results = {'t': confusion.t, 'alpha': certificate.alpha, 'winning_set_size': len(strategy.winning_set), 'p_win': strategy.p_win, 'p_rand': strategy.p_rand,
		'k': numbers.k, 'k_complement': numbers.k_complement, 'summary': 'k=%s, k\'=%s' % (numbers.k.render(), numbers.k_complement.render())}
	checks = {'winning_set_is_maximum': len(strategy.winning_set) == certificate.alpha, 'winning_set_independent': is_independent(to_explicit(confusion), strategy.winning_set),
		'complement_sums_to_n': numbers.k + numbers.k_complement == LogExpr(config.graph.n)}
	if config.samples is not None:
		sampled = evaluate_strategy(strategy.guess_tables, config.graph, confusion.t, samples=config.samples, seed=config.seed, exhaustive_max_bits=0, log=config.log).sampled
		results['sampled'] = {'estimate': sampled.estimate, 'radius': sampled.radius, 'samples': sampled.samples, 'seed': sampled.seed}
	if config.code_path is not None:
		save_strategy(strategy, config.code_path)
		results['strategy_file'] = config.code_path
	return results, checks

def cmd_codegen(config):
	'''
	an index code from an optimal coloring, a storage code from a maximum independent set or a strategy from it
	'''
	_require(config, 'kind')
	confusion = _confusion(config)
	caps = config.caps
	if config.kind == 'index':
		num_colors, colors = optimal_coloring(to_explicit(confusion, max_vertices=caps.max_vertices), timeout=caps.timeout, max_vertices=caps.coloring_max_vertices, log=config.log)
		code = index_code_from_coloring(config.graph, confusion.t, colors, max_bits=caps.max_bits)
		results = {'kind': 'index', 't': confusion.t, 'colors': num_colors, 'r': code.r, 'summary': 'index code with r=%d from %d colors' % (code.r, num_colors)}
	elif config.kind in ('storage', 'strategy'):
		certificate = confusion_alpha(confusion, timeout=caps.timeout, max_vertices=caps.max_vertices, log=config.log)
		if config.kind == 'strategy':
			strategy = strategy_from_independent_set(config.graph, confusion.t, certificate.witness)
			if config.code_path is not None: save_strategy(strategy, config.code_path)
			results = {'kind': 'strategy', 't': confusion.t, 'winning_set_size': len(strategy.winning_set), 'p_win': strategy.p_win,
				'summary': 'strategy winning on %d tuples' % len(strategy.winning_set)}
			if config.code_path is not None: results['code_file'] = config.code_path
			return results, {'winning_set_is_maximum': len(strategy.winning_set) == certificate.alpha}
		code = storage_code_from_independent_set(config.graph, confusion.t, certificate.witness)
		results = {'kind': 'storage', 't': confusion.t, 'alpha': certificate.alpha, 'r': code.r, 'codebook': render_vertices(code.codebook, confusion.t),
			'summary': 'storage code with r=%d from alpha=%d' % (code.r, certificate.alpha)}
	else: raise CodeFormatError('unknown code kind %s, expected index, storage or strategy' % str(config.kind))

	report = verify_code(code)
	if config.code_path is not None:
		save_code(code, config.code_path)
		results['code_file'] = config.code_path
	return results, {'verified': report.passed}

def cmd_verify(config):
	'''
	load a code or strategy document and check it exhaustively
	'''
	_require(config, 'code_path')
	document = load_json_file(config.code_path)
	if isinstance(document, dict) and document.get('kind') == 'strategy':
		strategy = import_strategy(document)
		numbers = guessing_numbers(strategy)
		results = {'kind': 'strategy', 't': strategy.t, 'winning_set_size': len(strategy.winning_set), 'p_win': strategy.p_win,
			'winning_set': render_vertices(strategy.winning_set, strategy.t), 'summary': 'strategy winning on %d tuples' % len(strategy.winning_set)}
		if not numbers.is_infinite(): results['k'] = numbers.k
		return results, {'nonempty_winning_set': len(strategy.winning_set) > 0}

	code = import_code(document)
	report = verify_code(code)
	results = {'kind': report.kind, 't': code.t, 'r': code.r, 'checked': report.checked, 'counterexample': report.counterexample,
		'summary': '%s code %s' % (report.kind, 'passed' if report.passed else 'failed')}
	checks = {'verified': report.passed, 'round_trip': export_code(import_code(export_code(code))) == export_code(code)}
	if isinstance(code, StorageCode) and report.passed:
		for m, failed in itertools.product(range(len(code.codebook)), range(code.graph.n)): simulate_failure(code, m, failed)
		results['failures_simulated'] = len(code.codebook) * code.graph.n
	return results, checks

COMMANDS = {
	'confusion': cmd_confusion,
	'alpha': cmd_alpha,
	'chromatic': cmd_chromatic,
	'capacity': cmd_capacity,
	'storage-rate': cmd_storage_rate,
	'duality': cmd_duality,
	'sum': cmd_sum,
	'weighted': cmd_weighted,
	'region': cmd_region,
	'guess': cmd_guess,
	'codegen': cmd_codegen,
	'verify': cmd_verify,
}
