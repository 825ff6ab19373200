# this file contains the command line entry point: argument parsing, the run of one subcommand and the exit codes,
# 0 on success, 1 when a computed identity fails, 2 on usage, cap and domain errors
import argparse, sys

from confdual_miscellaneous import get_default_caps, update_caps, parse_vector, parse_integer_vector, prepare_seed, Timer, ConfdualError
from confdual_io import load_graph
from .commands import COMMANDS, RunConfig
from .report import make_report, emit_report

EXIT_SUCCESS, EXIT_IDENTITY_FAILURE, EXIT_ERROR = 0, 1, 2

def build_parser():
	parser = argparse.ArgumentParser(prog='confdual', description='exact confusion graph computations for index coding, locally recoverable storage and guessing games')
	parser.add_argument('command', choices=sorted(COMMANDS.keys()))
	parser.add_argument('--graph', help='side information graph file, "n <count>" and "e <i> <j>" lines, 1-indexed')
	parser.add_argument('--t', help='block lengths, e.g., 1,1,1')
	parser.add_argument('--lambda', dest='lam', help='rate direction, rationals such as 1,1/2,0')
	parser.add_argument('--mu', help='weights of the weighted sum quantities')
	parser.add_argument('--r', type=int, help='a single scaling r')
	parser.add_argument('--r-max', type=int, help='every scaling r in 1..r_max')
	parser.add_argument('--t-max', help='componentwise bound of the enumerated tuples')
	parser.add_argument('--max-bits', type=int, help='cap on the total bits of a confusion graph')
	parser.add_argument('--max-vertices', type=int, help='cap on the vertices of an explicit graph')
	parser.add_argument('--timeout', type=float, help='seconds per solver call')
	parser.add_argument('--format', dest='fmt', choices=['json', 'text'], default='json')
	parser.add_argument('--seed', type=int, default=0)
	parser.add_argument('--threads', type=int, default=1)
	parser.add_argument('--samples', type=int, help='sampled winning probability of the guess command')
	parser.add_argument('--kind', choices=['index', 'storage', 'strategy'], help='code kind of the codegen command')
	parser.add_argument('--code', dest='code_path', help='code or strategy file written by codegen and guess, read by verify')
	parser.add_argument('--dump', dest='dump_path', help='write the explicit confusion graph')
	parser.add_argument('--output', help='also write the report to this file')
	parser.add_argument('--log', dest='log_path', help='append solver progress to this file')
	return parser

def parse_config(args, log=None, environ=None):
	'''
	turn parsed arguments into a RunConfig, the graph is loaded and every vector parsed exactly
	'''
	caps = update_caps(get_default_caps(environ=environ), max_bits=args.max_bits, max_vertices=args.max_vertices, timeout=args.timeout)
	assert args.threads >= 1, 'the number of threads should be positive'
	assert args.r is None or args.r_max is None, '--r and --r-max are exclusive'
	if args.r is not None: r_range = (args.r,)
	elif args.r_max is not None:
		assert args.r_max >= 1, '--r-max should be positive'
		r_range = tuple(range(1, args.r_max + 1))
	else: r_range = None

	config = RunConfig(command=args.command, graph_path=args.graph, caps=caps, fmt=args.fmt, seed=args.seed, threads=args.threads, samples=args.samples,
		kind=args.kind, code_path=args.code_path, dump_path=args.dump_path, output=args.output, log=log, r_range=r_range)
	if args.graph is not None: config.graph = load_graph(args.graph)
	if args.t is not None: config.t = parse_integer_vector(args.t)
	if args.lam is not None: config.lam = parse_vector(args.lam)
	if args.mu is not None: config.mu = parse_vector(args.mu)
	if args.t_max is not None: config.t_max = parse_integer_vector(args.t_max)
	return config

def run(config):
	'''
	outputs:
		report:			the report dictionary
		exit_code:		0 when every check holds, 1 otherwise
	'''
	timer = Timer()
	timer.tic()
	results, checks = COMMANDS[config.command](config)
	report = make_report(config.command, config.echo(), results, checks, timer.toc())
	emit_report(report, fmt=config.fmt, output=config.output, log=None)
	return report, EXIT_SUCCESS if all(checks.values()) else EXIT_IDENTITY_FAILURE

def main(argv=None, environ=None):
	args = build_parser().parse_args(argv)
	prepare_seed(args.seed)
	log = open(args.log_path, 'a') if args.log_path is not None else None
	try:
		config = parse_config(args, log=log, environ=environ)
		_, exit_code = run(config)
	except (ConfdualError, AssertionError, ValueError, ZeroDivisionError, OSError) as error:
		message = str(error) if isinstance(error, ConfdualError) else 'cli: %s' % str(error)
		print('error: %s' % message, file=sys.stderr)
		exit_code = EXIT_ERROR
	finally:
		if log is not None: log.close()
	return exit_code
