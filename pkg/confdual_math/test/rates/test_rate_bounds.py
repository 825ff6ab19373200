import pytest
from fractions import Fraction

import init_paths
from confdual_graph import make_side_information_graph, complete_digraph, edgeless_digraph, random_digraph
from confdual_math import admissible_scalings, enumerate_tuples, evaluate_tuples, capacity_lower_bound, storage_rate_upper_bound
from confdual_math import duality_identity_report, duality_identity_check, complementarity_report, broadcast_rate_bound, normalized_rate_bound
from confdual_math import normalize_direction, direction_witness, scaling_monotonicity_check, LogExpr, LogRatio
from confdual_miscellaneous import NoAdmissibleScalingError, CapExceededError, Caps, CHECK_EQ_LIST_ORDERED, make_rng

def three_node_graph():
	# A_1 = {2,3}, A_2 = {1}, A_3 = {1,2}
	return make_side_information_graph(3, [(1, 0), (2, 0), (0, 1), (0, 2), (1, 2)])

def test_admissible_scalings():
	print('only r with r * lambda integral are admissible')
	scalings = admissible_scalings((Fraction(1, 2), 1, 1), [4, 1, 2, 3], max_bits=20)
	assert CHECK_EQ_LIST_ORDERED(scalings, [(2, (1, 2, 2)), (4, (2, 4, 4))])

	print('scalings beyond the bit cap are dropped')
	scalings = admissible_scalings((1, 1, 1), [1, 2, 3], max_bits=6)
	assert CHECK_EQ_LIST_ORDERED(scalings, [(1, (1, 1, 1)), (2, (2, 2, 2))])

	with pytest.raises(NoAdmissibleScalingError): admissible_scalings((Fraction(1, 3), 1), [1, 2], max_bits=20)
	with pytest.raises(NoAdmissibleScalingError): admissible_scalings((1, 1), [5], max_bits=4)
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_enumerate_tuples():
	tuples = enumerate_tuples((1, 2), max_bits=20)
	assert CHECK_EQ_LIST_ORDERED(tuples, [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2)])
	assert len(enumerate_tuples((1, 1, 1), max_bits=2)) == 6
	with pytest.raises(CapExceededError): enumerate_tuples((3, 3), max_bits=0)

def test_evaluate_tuples_pool():
	print('the process pool returns the same alphas in the same order')
	graph = three_node_graph()
	tuples = [(1, 1, 1), (1, 0, 1), (2, 1, 1), (0, 1, 0)]
	serial = evaluate_tuples(graph, tuples, threads=1)
	pooled = evaluate_tuples(graph, tuples, threads=2)
	assert [evaluation.alpha for evaluation in serial] == [evaluation.alpha for evaluation in pooled]
	assert [evaluation.t for evaluation in pooled] == tuples
	assert serial[0].alpha == 2 and serial[0].chi_f == 4
	assert serial[3].alpha == 1
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_symmetric_bounds_three_node():
	print('capacity and storage bounds of the three node example at r = 1')
	graph = three_node_graph()
	capacity = capacity_lower_bound(graph, (1, 1, 1), [1])
	storage = storage_rate_upper_bound(graph, (1, 1, 1), [1])
	assert capacity.direction == 'lower' and storage.direction == 'upper'
	assert capacity.value == LogRatio.from_rational(Fraction(1, 2))
	assert storage.value == LogRatio.from_rational(1)
	assert capacity.witness['r'] == 1 and capacity.witness['alpha'] == 2 and capacity.witness['chi_f'] == 4
	assert capacity.witness['t'] == (1, 1, 1)
	assert len(capacity.witness['independent_set']) == 2
	assert capacity.exhausted_range['r'] == [1]
	assert not capacity.is_infinite() and not storage.is_infinite()

	print('a wider range never lowers the capacity bound')
	wider = capacity_lower_bound(graph, (1, 1, 1), [1, 2])
	assert wider.value >= capacity.value
	assert wider.witness['r'] in (1, 2)
	assert wider.exhausted_range['r'] == [1, 2]
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_symmetric_bounds_complete():
	graph = complete_digraph(3)
	capacity = capacity_lower_bound(graph, (1, 1, 1), [1])
	storage = storage_rate_upper_bound(graph, (1, 1, 1), [1])
	assert capacity.value == LogRatio.from_rational(1)
	assert storage.value == LogRatio.from_rational(Fraction(1, 2))
	assert broadcast_rate_bound(capacity).value == LogExpr(1)
	assert broadcast_rate_bound(capacity).direction == 'upper'
	assert normalized_rate_bound(storage).value == LogExpr(2)

def test_storage_infinite_marker():
	print('storage is impossible when every alpha is one')
	graph = edgeless_digraph(2)
	storage = storage_rate_upper_bound(graph, (1, 1), [1])
	assert storage.is_infinite()
	assert storage.witness is None
	assert storage.skipped == (1,)
	assert storage.exhausted_range['skipped_r'] == [1]
	assert normalized_rate_bound(storage).value == LogExpr(0)

	capacity = capacity_lower_bound(graph, (1, 1), [1])
	assert capacity.value == LogRatio.from_rational(Fraction(1, 2))
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_duality_identity():
	graph = three_node_graph()
	report = duality_identity_report(graph, (1, 1, 1), 1)
	assert report['t'] == (1, 1, 1)
	assert report['chi_f'] == 4 and report['alpha'] == 2
	assert report['product'] == report['expected'] == 8
	assert report['holds']
	assert duality_identity_check(complete_digraph(3), (1, 1, 1), 2)

	print('the LP cap is enforced')
	with pytest.raises(CapExceededError): duality_identity_report(graph, (1, 1, 1), 1, caps=Caps(lp_max_vertices=4))

def test_complementarity_exact():
	print('bounds from the same scaling satisfy the complementarity exactly')
	graph = three_node_graph()
	capacity = capacity_lower_bound(graph, (1, 1, 1), [1])
	storage = storage_rate_upper_bound(graph, (1, 1, 1), [1])
	report = complementarity_report(capacity, storage, (1, 1, 1))
	assert report.same_witness and report.exact
	assert report.inverse_capacity == LogExpr(2)
	assert report.rate_complement == LogExpr(2)
	assert report.residual == LogExpr(0)
	assert report.residual_interval == (LogExpr(0), LogExpr(0))
	assert report.implied_storage == storage.value
	assert report.implied_capacity == capacity.value
	assert report.normalized['inverse_capacity'] == LogExpr(2)
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_complementarity_normalized():
	print('doubling lambda halves the capacity but leaves the normalized report unchanged')
	graph = three_node_graph()
	single = complementarity_report(capacity_lower_bound(graph, (1, 1, 1), [2]), storage_rate_upper_bound(graph, (1, 1, 1), [2]), (1, 1, 1))
	double = complementarity_report(capacity_lower_bound(graph, (2, 2, 2), [1]), storage_rate_upper_bound(graph, (2, 2, 2), [1]), (2, 2, 2))
	assert double.inverse_capacity == single.inverse_capacity * 2
	assert double.normalized['inverse_capacity'] == single.normalized['inverse_capacity']
	assert double.normalized['rate_complement'] == single.normalized['rate_complement']
	assert double.normalized['lambda'] == (1, 1, 1)
	assert single.exact and double.exact

	print('a direction mismatch is rejected')
	with pytest.raises(AssertionError):
		complementarity_report(capacity_lower_bound(graph, (1, 1, 1), [1]), storage_rate_upper_bound(graph, (1, 1, 1), [1]), (2, 2, 2))
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_complementarity_random_suite():
	print('bounds at one scaling satisfy the complementarity exactly on random instances')
	rng = make_rng(7)
	checked = 0
	while checked < 20:
		n = int(rng.randint(1, 5))
		graph = random_digraph(n, float(rng.uniform(0.2, 0.8)), int(rng.randint(0, 1000)))
		lam = tuple(Fraction(int(rng.randint(0, 3)), int(rng.randint(1, 3))) for _ in range(n))
		if sum(lam) == 0: continue
		r = int(rng.randint(1, 5))
		try: admissible_scalings(lam, [r], max_bits=8)
		except NoAdmissibleScalingError: continue
		capacity = capacity_lower_bound(graph, lam, [r])
		storage = storage_rate_upper_bound(graph, lam, [r])
		if storage.is_infinite(): continue
		report = complementarity_report(capacity, storage, lam)
		assert report.same_witness and report.exact
		assert report.inverse_capacity == LogExpr(sum(lam)) - storage.value.reciprocal()
		checked += 1

	print('at lambda = 1 the inverse capacity is n minus the inverse storage rate')
	graph = three_node_graph()
	capacity = capacity_lower_bound(graph, (1, 1, 1), [2])
	storage = storage_rate_upper_bound(graph, (1, 1, 1), [2])
	assert capacity.value.reciprocal() == LogExpr(3) - storage.value.reciprocal()
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_normalize_direction():
	assert normalize_direction((1, 2, 3)) == (Fraction(1, 2), Fraction(1), Fraction(3, 2))
	assert normalize_direction((Fraction(1, 3), Fraction(1, 3))) == (1, 1)
	with pytest.raises(AssertionError): normalize_direction((0, 0))

def test_direction_witness():
	assert direction_witness((2, 3, 4), (1, 1, 1)) == (2, 0)
	assert direction_witness((3, 1, 5), (Fraction(1, 2), 1, 0)) == (2, 1)
	print('ties keep the lowest node')
	assert direction_witness((2, 2), (1, 1)) == (2, 0)

def test_scaling_monotonicity():
	graph = three_node_graph()
	assert scaling_monotonicity_check(graph, (1, 1, 1), 1, 2)
	assert scaling_monotonicity_check(complete_digraph(2), (1, 1), 1, 3)

if __name__ == '__main__':
	test_admissible_scalings()
	test_enumerate_tuples()
	test_evaluate_tuples_pool()
	test_symmetric_bounds_three_node()
	test_symmetric_bounds_complete()
	test_storage_infinite_marker()
	test_duality_identity()
	test_complementarity_exact()
	test_complementarity_normalized()
	test_complementarity_random_suite()
	test_normalize_direction()
	test_direction_witness()
	test_scaling_monotonicity()
