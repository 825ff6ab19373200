# this file contains the json documents of index codes, storage codes and guessing strategies,
# tuples and observations are written as hex blocks joined by '.'
from confdual_miscellaneous import vertex2blocks, blocks2vertex, blocks2hex, hex2blocks, isdict, CodeFormatError
from confdual_graph import make_side_information_graph
from confdual_coding import IndexCode, StorageCode, observation_widths, evaluate_strategy
from .file_io import save_json_file, load_json_file

SCHEMA_VERSION = '1'

def _graph_document(graph):
	return {'n': graph.n, 'edges': [[i + 1, j + 1] for i, j in graph.edges()]}

def _graph_from_document(document):
	n, edges = document['n'], document['edges']
	if any(len(edge) != 2 or not (1 <= edge[0] <= n and 1 <= edge[1] <= n) or edge[0] == edge[1] for edge in edges):
		raise CodeFormatError('the graph of the document has an invalid edge')
	return make_side_information_graph(n, [(i - 1, j - 1) for i, j in edges])

def _tuple_hex(vertex, t):
	return blocks2hex(vertex2blocks(vertex, t, debug=False), t, debug=False)

def _hex_tuple(text, t):
	return blocks2vertex(hex2blocks(text, t), t)

######################################################### export #########################################################
def export_code(code):
	'''
	json document of an IndexCode or a StorageCode
	'''
	graph, t = code.graph, code.t
	document = {'schema': SCHEMA_VERSION, 'graph': _graph_document(graph), 't': list(t), 'r': code.r}
	if isinstance(code, IndexCode):
		document['kind'] = 'index'
		document['encoder'] = {_tuple_hex(x, t): index for x, index in enumerate(code.encoder)}
		decoders = []
		for j, decoder in enumerate(code.decoders):
			widths = observation_widths(graph, t, j)
			decoders.append({'%d|%s' % (index, blocks2hex(side, widths, debug=False)): blocks2hex((block,), (t[j],), debug=False) for (index, side), block in sorted(decoder.items())})
		document['decoders'] = decoders
	else:
		document['kind'] = 'storage'
		document['codebook'] = [_tuple_hex(x, t) for x in code.codebook]
		document['recovery'] = [{blocks2hex(side, observation_widths(graph, t, j), debug=False): blocks2hex((block,), (t[j],), debug=False) for side, block in sorted(table.items())}
			for j, table in enumerate(code.recovery)]
	return document

def export_strategy(strategy):
	'''
	json document of the guess tables of a strategy
	'''
	graph, t = strategy.graph, strategy.t
	tables = [{blocks2hex(key, observation_widths(graph, t, j), debug=False): blocks2hex((guess,), (t[j],), debug=False) for key, guess in sorted(table.items())}
		for j, table in enumerate(strategy.guess_tables)]
	return {'schema': SCHEMA_VERSION, 'kind': 'strategy', 'graph': _graph_document(graph), 't': list(t), 'tables': tables}

######################################################### import #########################################################
def _check_document(document, kinds):
	if not isdict(document): raise CodeFormatError('the document is not a json object')
	if document.get('schema') != SCHEMA_VERSION: raise CodeFormatError('unsupported schema %s' % str(document.get('schema')))
	if document.get('kind') not in kinds: raise CodeFormatError('unexpected kind %s' % str(document.get('kind')))

def import_code(document):
	'''
	rebuild an IndexCode or a StorageCode from its json document, bit-exact inverse of export_code
	'''
	_check_document(document, ('index', 'storage'))
	try:
		graph = _graph_from_document(document['graph'])
		t, r = tuple(int(bits) for bits in document['t']), int(document['r'])
		if len(t) != graph.n: raise CodeFormatError('%d block lengths for %d nodes' % (len(t), graph.n))
		if document['kind'] == 'index':
			encoder = [None] * (1 << sum(t))
			for text, index in document['encoder'].items(): encoder[_hex_tuple(text, t)] = int(index)
			if any(index is None for index in encoder): raise CodeFormatError('the encoder does not cover every message tuple')
			decoders = []
			for j, table in enumerate(document['decoders']):
				widths = observation_widths(graph, t, j)
				decoder = dict()
				for key, block in table.items():
					index, side = key.split('|', 1)
					decoder[(int(index), hex2blocks(side, widths))] = hex2blocks(block, (t[j],))[0]
				decoders.append(decoder)
			return IndexCode(graph=graph, t=t, r=r, encoder=tuple(encoder), decoders=tuple(decoders))

		codebook = tuple(_hex_tuple(text, t) for text in document['codebook'])
		recovery = tuple({hex2blocks(side, observation_widths(graph, t, j)): hex2blocks(block, (t[j],))[0] for side, block in table.items()}
			for j, table in enumerate(document['recovery']))
		return StorageCode(graph=graph, t=t, r=r, codebook=codebook, recovery=recovery)
	except (KeyError, ValueError, TypeError, AssertionError) as error:
		raise CodeFormatError('malformed code document: %s' % str(error))

def import_strategy(document):
	'''
	rebuild and evaluate a strategy from its json document
	'''
	_check_document(document, ('strategy',))
	try:
		graph = _graph_from_document(document['graph'])
		t = tuple(int(bits) for bits in document['t'])
		tables = [{hex2blocks(key, observation_widths(graph, t, j)): hex2blocks(guess, (t[j],))[0] for key, guess in table.items()} for j, table in enumerate(document['tables'])]
	except (KeyError, ValueError, TypeError, AssertionError) as error:
		raise CodeFormatError('malformed strategy document: %s' % str(error))
	return evaluate_strategy(tables, graph, t)

def save_code(code, save_path, debug=True):
	save_json_file(export_code(code), save_path, debug=debug)

def load_code(file_path, debug=True):
	return import_code(load_json_file(file_path, debug=debug))

def save_strategy(strategy, save_path, debug=True):
	save_json_file(export_strategy(strategy), save_path, debug=debug)

def load_strategy(file_path, debug=True):
	return import_strategy(load_json_file(file_path, debug=debug))
