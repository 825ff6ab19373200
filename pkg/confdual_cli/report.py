# this file contains the versioned report of a command and its json and text renderings,
# exact values are rendered as strings and floats only accompany them as display hints
import math
from fractions import Fraction

import numpy as np

from confdual_miscellaneous import rational2str, vertex2bitstring, isdict, issequence, isset, print_log
from confdual_math import LogExpr, LogRatio, RateBound
from confdual_io import dump_json_string, save_txt_file

SCHEMA_VERSION = '1'
REPORT_KEYS = ('schema', 'command', 'config', 'results', 'checks', 'timing')

def render_value(value):
	'''
	{exact, rational, float, infinite} of an exact value, rational is None when the value involves a logarithm
	'''
	if isinstance(value, LogRatio):
		fraction, infinite = value.to_fraction(), value.is_infinite()
		return {'exact': value.render(), 'rational': None if fraction is None else rational2str(fraction), 'float': None if infinite else value.to_float(), 'infinite': infinite}
	if isinstance(value, LogExpr):
		fraction = value.to_fraction()
		return {'exact': value.render(), 'rational': None if fraction is None else rational2str(fraction), 'float': value.to_float(), 'infinite': False}
	fraction = Fraction(value)
	return {'exact': rational2str(fraction), 'rational': rational2str(fraction), 'float': float(fraction), 'infinite': False}

def render_vertices(vertices, t):
	'''
	vertex labels as bit strings, x_1 first
	'''
	return [vertex2bitstring(int(x), t, debug=False) for x in vertices]

def render_witness(witness):
	if witness is None: return None
	rendered = {'t': list(witness['t']), 'alpha': witness['alpha']}
	if 'r' in witness: rendered['r'] = witness['r']
	if 'chi_f' in witness: rendered['chi_f'] = rational2str(witness['chi_f'])
	if 'independent_set' in witness: rendered['independent_set'] = render_vertices(witness['independent_set'], witness['t'])
	return rendered

def render_bound(bound):
	'''
	json form of a RateBound
	'''
	return {'quantity': bound.quantity, 'direction': bound.direction, 'value': render_value(bound.value), 'witness': render_witness(bound.witness),
		'exhausted_range': jsonable(bound.exhausted_range), 'skipped': jsonable(list(bound.skipped))}

def jsonable(data):
	'''
	convert nested results to json types: tuples to lists, exact values to rendered dictionaries
	'''
	if isinstance(data, RateBound): return render_bound(data)
	if isinstance(data, (LogExpr, LogRatio, Fraction)): return render_value(data)
	if isinstance(data, bool) or data is None: return data
	if isinstance(data, (np.integer,)): return int(data)
	if isinstance(data, (np.floating, float)): return None if math.isinf(data) or math.isnan(data) else float(data)
	if isdict(data): return {str(key): jsonable(value) for key, value in data.items()}
	if issequence(data) or isset(data): return [jsonable(value) for value in data]
	return data

def make_report(command, config, results, checks, seconds):
	'''
	the report of one command, schema "1"
	'''
	return {'schema': SCHEMA_VERSION, 'command': command, 'config': jsonable(config), 'results': jsonable(results), 'checks': jsonable(checks), 'timing': {'seconds': seconds}}

def strip_timing(report):
	'''
	the report without its timing section, equal across repeated runs of one configuration
	'''
	return {key: value for key, value in report.items() if key != 'timing'}

def _flatten(prefix, data, lines):
	if isdict(data):
		if set(data.keys()) == {'exact', 'rational', 'float', 'infinite'}:
			lines.append('%s: %s' % (prefix, data['exact']))
			return
		for key in sorted(data.keys()): _flatten('%s.%s' % (prefix, key) if prefix else key, data[key], lines)
	elif isinstance(data, list) and any(isdict(value) for value in data):
		for index, value in enumerate(data): _flatten('%s[%d]' % (prefix, index), value, lines)
	elif isinstance(data, list): lines.append('%s: %s' % (prefix, ', '.join(str(value) for value in data)))
	else: lines.append('%s: %s' % (prefix, str(data).lower() if isinstance(data, bool) else str(data)))

def format_text(report):
	'''
	human readable report: the summary line of the command first, then every field as a dotted path
	'''
	lines = ['%s (schema %s)' % (report['command'], report['schema'])]
	summary = report['results'].get('summary')
	if summary: lines.append(summary)
	body = []
	for section in ('results', 'checks'):
		_flatten(section, {key: value for key, value in report[section].items() if key != 'summary'}, body)
	lines += body
	lines.append('timing.seconds: %.3f' % report['timing']['seconds'])
	return '\n'.join(lines) + '\n'

def emit_report(report, fmt='json', output=None, log=None):
	'''
	print the report and optionally write it to a file
	'''
	text = dump_json_string(report) if fmt == 'json' else format_text(report)
	print_log(text.rstrip('\n'), log=log)
	if output is not None: save_txt_file(text, output)
	return text
