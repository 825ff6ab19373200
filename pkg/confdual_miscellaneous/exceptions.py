# exceptions raised for failures a user can trigger with well-formed input,
# programming errors are still caught by the debug asserts

class ConfdualError(Exception):
	module = 'confdual'

	def __str__(self):
		return '%s: %s' % (self.module, super(ConfdualError, self).__str__())

class GraphParseError(ConfdualError):
	module = 'graph_core'

	def __init__(self, message, line_number=None):
		if line_number is not None: message = 'line %d: %s' % (line_number, message)
		super(GraphParseError, self).__init__(message)
		self.line_number = line_number

class CapExceededError(ConfdualError):
	def __init__(self, message, module='confdual'):
		super(CapExceededError, self).__init__(message)
		self.module = module

class SolverTimeout(ConfdualError):
	'''
	the exact search did not finish, no partial value is reported
	'''
	def __init__(self, message, module='independence', nodes_explored=0):
		super(SolverTimeout, self).__init__('incomplete: ' + message)
		self.module = module
		self.nodes_explored = nodes_explored

class TupleError(ConfdualError):
	module = 'confusion'

class ImproperColoringError(ConfdualError):
	module = 'coding'

	def __init__(self, message, edge):
		super(ImproperColoringError, self).__init__(message)
		self.edge = edge

class NotIndependentError(ConfdualError):
	module = 'coding'

	def __init__(self, message, pair, node):
		super(NotIndependentError, self).__init__(message)
		self.pair = pair
		self.node = node

class NoAdmissibleScalingError(ConfdualError):
	module = 'rates'

class RecoveryDomainError(ConfdualError):
	module = 'coding'

class ExhaustiveCapError(ConfdualError):
	module = 'guessing'

	def __init__(self, message, module=None):
		super(ExhaustiveCapError, self).__init__(message)
		if module is not None: self.module = module

class CodeFormatError(ConfdualError):
	module = 'coding'
