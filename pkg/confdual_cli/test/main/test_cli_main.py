import os, re, json, pytest

import init_paths
from confdual_cli import main, build_parser, parse_config, strip_timing, EXIT_SUCCESS, EXIT_IDENTITY_FAILURE, EXIT_ERROR
from confdual_io import load_json_file, save_json_file, dump_json_string, load_graphs_from_folder

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '../fixtures')

def fixture(name):
	return os.path.join(FIXTURES, name)

def run_json(capsys, argv, environ=None):
	exit_code = main(argv, environ={} if environ is None else environ)
	out = capsys.readouterr().out
	return exit_code, json.loads(out)

def test_confusion_command(capsys):
	print('the confusion graph of the three node example has 8 vertices of degree 4')
	exit_code, report = run_json(capsys, ['confusion', '--graph', fixture('three_node.g'), '--t', '1,1,1'])
	assert exit_code == EXIT_SUCCESS
	results = report['results']
	assert results['vertices'] == 8 and results['degree'] == 4 and results['edges'] == 16
	assert results['diffs'] == ['001', '010', '011', '100']
	assert results['summary'] == 'vertices=8, degree=4'
	assert report['checks'] == {'translation_automorphism': True}
	assert report['config']['t'] == [1, 1, 1]

def test_confusion_zero_bits(capsys):
	exit_code, report = run_json(capsys, ['confusion', '--graph', fixture('single.g'), '--t', '0'])
	assert exit_code == EXIT_SUCCESS
	assert report['results']['vertices'] == 1 and report['results']['degree'] == 0

def test_confusion_dump(capsys, tmp_path):
	dump_path = os.path.join(str(tmp_path), 'confusion.txt')
	exit_code, report = run_json(capsys, ['confusion', '--graph', fixture('k3.g'), '--t', '1,1,1', '--dump', dump_path])
	assert exit_code == EXIT_SUCCESS
	assert report['checks']['edge_count']
	with open(dump_path, 'r') as file: lines = file.read().splitlines()
	assert lines[1] == 'n 8' and len(lines) == 2 + 12

def test_errors_exit_two(capsys):
	print('cap, usage and parse errors exit with code 2')
	assert main(['confusion', '--graph', fixture('three_node.g'), '--t', '10,10,10'], environ={}) == EXIT_ERROR
	assert 'error: confusion:' in capsys.readouterr().err

	assert main(['capacity', '--graph', fixture('three_node.g')], environ={}) == EXIT_ERROR
	assert 'error: cli: the capacity command needs --lambda' in capsys.readouterr().err

	assert main(['capacity', '--graph', fixture('three_node.g'), '--lambda', '1/3,1,1', '--r', '1'], environ={}) == EXIT_ERROR
	assert 'error: rates:' in capsys.readouterr().err

	assert main(['confusion', '--graph', fixture('missing.g'), '--t', '1'], environ={}) == EXIT_ERROR
	assert main(['confusion', '--graph', fixture('three_node.g'), '--t', '1,1'], environ={}) == EXIT_ERROR
	assert main(['capacity', '--graph', fixture('three_node.g'), '--lambda', '1,1,1', '--r', '1', '--r-max', '2'], environ={}) == EXIT_ERROR
	with pytest.raises(SystemExit): main(['unknown'], environ={})

def test_max_bits_environment(capsys):
	exit_code, report = run_json(capsys, ['confusion', '--graph', fixture('three_node.g'), '--t', '1,1,1'], environ={'CONFDUAL_MAX_BITS': '4'})
	assert exit_code == EXIT_SUCCESS
	assert report['config']['caps']['max_bits'] == 4
	assert main(['confusion', '--graph', fixture('three_node.g'), '--t', '2,2,2'], environ={'CONFDUAL_MAX_BITS': '4'}) == EXIT_ERROR
	print('the flag overrides the environment')
	exit_code, report = run_json(capsys, ['confusion', '--graph', fixture('three_node.g'), '--t', '2,2,2', '--max-bits', '6'], environ={'CONFDUAL_MAX_BITS': '4'})
	assert exit_code == EXIT_SUCCESS and report['results']['vertices'] == 64

def test_alpha_command(capsys):
	exit_code, report = run_json(capsys, ['alpha', '--graph', fixture('k3.g'), '--t', '1,1,1'])
	assert exit_code == EXIT_SUCCESS
	assert report['results']['alpha'] == 4
	assert report['results']['chi_f']['exact'] == '2'
	assert report['results']['log2_alpha']['exact'] == '2'
	assert len(report['results']['independent_set']) == 4
	assert report['checks'] == {'independent': True}

def test_chromatic_command(capsys):
	exit_code, report = run_json(capsys, ['chromatic', '--graph', fixture('three_node.g'), '--t', '1,1,1'])
	assert exit_code == EXIT_SUCCESS
	results = report['results']
	assert results['chi_f']['exact'] == '4' and results['chi_f_lp']['exact'] == '4'
	assert results['chromatic_number'] == 4
	assert all(report['checks'].values())

def test_capacity_command(capsys):
	print('the capacity bound over r = 1, 2 records its witness and the exhausted range')
	exit_code, report = run_json(capsys, ['capacity', '--graph', fixture('three_node.g'), '--lambda', '1,1,1', '--r-max', '2'])
	assert exit_code == EXIT_SUCCESS
	bound = report['results']['bound']
	assert bound['quantity'] == 'C(lambda)' and bound['direction'] == 'lower'
	assert bound['exhausted_range'] == {'r': [1, 2]}
	assert bound['witness']['r'] in (1, 2)
	assert bound['value']['float'] >= 0.5
	assert report['config']['r'] == [1, 2] and report['config']['lambda'] == ['1', '1', '1']
	assert 'broadcast_rate' in report['results']

def test_storage_rate_infinite(capsys):
	exit_code, report = run_json(capsys, ['storage-rate', '--graph', fixture('edgeless2.g'), '--lambda', '1,1'])
	assert exit_code == EXIT_SUCCESS
	bound = report['results']['bound']
	assert bound['value'] == {'exact': 'inf', 'rational': None, 'float': None, 'infinite': True}
	assert bound['witness'] is None and bound['skipped'] == [1]
	assert report['results']['normalized_rate']['value']['exact'] == '0'

def test_duality_text(capsys):
	print('the duality summary of the three node example is exact')
	exit_code = main(['duality', '--graph', fixture('three_node.g'), '--lambda', '1,1,1', '--r', '1', '--format', 'text'], environ={})
	assert exit_code == EXIT_SUCCESS
	lines = capsys.readouterr().out.splitlines()
	assert lines[0] == 'duality (schema 1)'
	assert lines[1] == '1/C=2, Σλ−1/R=2, exact: true'
	assert 'checks.chi_f_alpha_identity: true' in lines
	assert 'checks.complementarity: true' in lines
	assert lines[-1].startswith('timing.seconds: ')

def test_duality_skips_inadmissible(capsys):
	exit_code, report = run_json(capsys, ['duality', '--graph', fixture('three_node.g'), '--lambda', '1/2,1,1', '--r-max', '2'])
	assert exit_code == EXIT_SUCCESS
	assert [identity['r'] for identity in report['results']['identities']] == [2]

def test_sum_command(capsys):
	exit_code, report = run_json(capsys, ['sum', '--graph', fixture('k3.g'), '--t-max', '1,1,1'])
	assert exit_code == EXIT_SUCCESS
	assert report['results']['summary'] == "C_sum>=3, R_sum<=3/2, k>=2, k'<=1"
	assert len(report['results']['identities']) == 7
	assert report['checks'] == {'per_tuple_identity': True, 'guessing_identity': True, 'guessing_equals_n_over_rate': True}

def test_weighted_and_region(capsys):
	exit_code, report = run_json(capsys, ['weighted', '--graph', fixture('three_node.g'), '--mu', '1,0,0', '--t-max', '1,1,1'])
	assert exit_code == EXIT_SUCCESS
	assert report['results']['capacity']['quantity'] == 'C_bar(mu)'
	assert report['config']['mu'] == ['1', '0', '0']

	exit_code, report = run_json(capsys, ['region', '--graph', fixture('three_node.g'), '--t-max', '1,0,1'])
	assert exit_code == EXIT_SUCCESS
	assert len(report['results']['points']) == 3
	assert report['results']['summary'] == '3 tuples'

def test_guess_command(capsys, tmp_path):
	strategy_path = os.path.join(str(tmp_path), 'strategy.json')
	exit_code, report = run_json(capsys, ['guess', '--graph', fixture('three_node.g'), '--t', '1,1,1', '--samples', '500', '--code', strategy_path])
	assert exit_code == EXIT_SUCCESS
	results = report['results']
	assert results['alpha'] == 2 and results['winning_set_size'] == 2
	assert results['p_win']['exact'] == '1/4'
	assert results['k']['exact'] == '1' and results['k_complement']['exact'] == '2'
	assert results['sampled']['samples'] == 500
	assert all(report['checks'].values())
	assert load_json_file(strategy_path)['kind'] == 'strategy'

def test_codegen_then_verify(capsys, tmp_path):
	print('generated codes verify from their files')
	code_path = os.path.join(str(tmp_path), 'storage.json')
	exit_code, report = run_json(capsys, ['codegen', '--graph', fixture('k3.g'), '--t', '1,1,1', '--kind', 'storage', '--code', code_path])
	assert exit_code == EXIT_SUCCESS
	assert report['results']['r'] == 2 and report['checks'] == {'verified': True}

	exit_code, report = run_json(capsys, ['verify', '--code', code_path])
	assert exit_code == EXIT_SUCCESS
	assert report['results']['kind'] == 'storage' and report['results']['failures_simulated'] == 12
	assert report['checks'] == {'verified': True, 'round_trip': True}

	print('a corrupted codebook fails verification with exit code 1')
	document = load_json_file(code_path)
	document['codebook'][1] = document['codebook'][0]
	save_json_file(document, code_path)
	exit_code, report = run_json(capsys, ['verify', '--code', code_path])
	assert exit_code == EXIT_IDENTITY_FAILURE
	assert not report['checks']['verified']
	assert report['results']['summary'] == 'storage code failed'

	index_path = os.path.join(str(tmp_path), 'index.json')
	exit_code, report = run_json(capsys, ['codegen', '--graph', fixture('three_node.g'), '--t', '1,1,1', '--kind', 'index', '--code', index_path])
	assert exit_code == EXIT_SUCCESS and report['results']['colors'] == 4 and report['results']['r'] == 2
	exit_code, report = run_json(capsys, ['verify', '--code', index_path])
	assert exit_code == EXIT_SUCCESS and report['results']['checked'] == 24

	strategy_path = os.path.join(str(tmp_path), 'strategy.json')
	exit_code, report = run_json(capsys, ['codegen', '--graph', fixture('k3.g'), '--t', '1,1,1', '--kind', 'strategy', '--code', strategy_path])
	assert exit_code == EXIT_SUCCESS
	exit_code, report = run_json(capsys, ['verify', '--code', strategy_path])
	assert exit_code == EXIT_SUCCESS and report['results']['winning_set_size'] == 4
	print('\n\nDONE! SUCCESSFUL!!\n')

def test_deterministic_reports(capsys, tmp_path):
	print('two runs of one configuration write the same report apart from the timing')
	paths = [os.path.join(str(tmp_path), 'run%d.json' % index) for index in range(2)]
	for path in paths:
		assert main(['sum', '--graph', fixture('three_node.g'), '--t-max', '1,1,1', '--output', path], environ={}) == EXIT_SUCCESS
	capsys.readouterr()
	raw = []
	for path in paths:
		with open(path, 'rb') as file: raw.append(re.sub(rb'"seconds": [-+.0-9eE]+', b'"seconds": 0', file.read()))
	assert raw[0] == raw[1]

	first, second = [load_json_file(path) for path in paths]
	assert 'timing' in first
	assert dump_json_string(strip_timing(first)).encode('utf-8') == dump_json_string(strip_timing(second)).encode('utf-8')

def test_golden_keys(capsys):
	golden = load_json_file(fixture('golden_report_keys.json'))
	arguments = {'confusion': ['--t', '1,1,1'], 'alpha': ['--t', '1,1,1'], 'capacity': ['--lambda', '1,1,1'], 'storage-rate': ['--lambda', '1,1,1'],
		'duality': ['--lambda', '1,1,1'], 'sum': ['--t-max', '1,1,1'], 'guess': ['--t', '1,1,1']}
	for command, extra in arguments.items():
		exit_code, report = run_json(capsys, [command, '--graph', fixture('three_node.g')] + extra)
		assert exit_code == EXIT_SUCCESS
		assert sorted(report.keys()) == golden['report']
		assert sorted(report['results'].keys()) == golden['results'][command], command
		assert set(golden['config']) <= set(report['config'].keys())
		assert sorted(report['config']['caps'].keys()) == golden['caps']
		if command == 'capacity':
			bound = report['results']['bound']
			assert sorted(bound.keys()) == golden['bound']
			assert sorted(bound['value'].keys()) == golden['value']
			assert sorted(bound['witness'].keys()) == golden['witness']

def test_fixture_graphs():
	graphs = load_graphs_from_folder(FIXTURES)
	assert sorted(graphs.keys()) == ['edgeless2', 'k3', 'pentagon', 'single', 'three_node']
	assert graphs['pentagon'].num_edges == 10 and graphs['k3'].num_edges == 6
	assert graphs['three_node'].in_sets[0] == frozenset([1, 2])

def test_parse_config():
	args = build_parser().parse_args(['capacity', '--graph', fixture('three_node.g'), '--lambda', '1/2,1,0', '--r-max', '3', '--threads', '2'])
	config = parse_config(args, environ={})
	assert config.r_range == (1, 2, 3)
	assert config.graph.n == 3
	assert config.threads == 2
	assert config.echo()['lambda'] == ['1/2', '1', '0']

if __name__ == '__main__':
	pytest.main([__file__])
