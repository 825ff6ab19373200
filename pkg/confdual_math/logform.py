# this file contains exact values of the form sum_k a_k log2(p_k) + c with rational a_k and c, and their ratios q / (...),
# log2 of distinct primes are linearly independent over the rationals, so the factored form is canonical
import math
from fractions import Fraction
from functools import total_ordering

from confdual_miscellaneous import isrational, rational2str

TRIAL_DIVISION_LIMIT = 1 << 16

def factorize(number):
	'''
	factors of a positive integer as a dictionary from factor to exponent, primes up to TRIAL_DIVISION_LIMIT are split off
	and a larger cofactor is kept as a single factor
	'''
	assert number >= 1, 'only positive integers can be factorized'
	factors = dict()
	divisor = 2
	while divisor * divisor <= number and divisor <= TRIAL_DIVISION_LIMIT:
		while number % divisor == 0:
			factors[divisor] = factors.get(divisor, 0) + 1
			number //= divisor
		divisor += 1 if divisor == 2 else 2
	if number > 1: factors[number] = factors.get(number, 0) + 1
	return factors

def _lcm(a, b):
	return a * b // math.gcd(a, b)

@total_ordering
class LogExpr(object):
	'''
	constant + sum of coefficient * log2(base) over terms, the bases are odd factors > 1 and the coefficients nonzero
	'''
	__slots__ = ('constant', 'terms')

	def __init__(self, constant=0, terms=None):
		assert isrational(constant), 'the constant should be an exact rational'
		self.constant = Fraction(constant)
		merged = dict()
		for base, coefficient in (terms or dict()).items():
			if coefficient == 0: continue
			merged[base] = merged.get(base, Fraction(0)) + Fraction(coefficient)
		self.terms = tuple(sorted((base, coefficient) for base, coefficient in merged.items() if coefficient != 0))

	@classmethod
	def log2(cls, value):
		'''
		the exact log2 of a positive rational
		'''
		assert isrational(value) and value > 0, 'log2 needs a positive rational, got %s' % str(value)
		value = Fraction(value)
		constant, terms = Fraction(0), dict()
		for number, sign in ((value.numerator, 1), (value.denominator, -1)):
			for base, exponent in factorize(number).items():
				if base == 2: constant += sign * exponent
				else: terms[base] = terms.get(base, 0) + sign * exponent
		return cls(constant, terms)

	######################################################### arithmetic
	def __add__(self, other):
		other = _as_logexpr(other)
		if other is NotImplemented: return other
		terms = dict(self.terms)
		for base, coefficient in other.terms: terms[base] = terms.get(base, Fraction(0)) + coefficient
		return LogExpr(self.constant + other.constant, terms)

	__radd__ = __add__

	def __neg__(self):
		return LogExpr(-self.constant, {base: -coefficient for base, coefficient in self.terms})

	def __sub__(self, other):
		other = _as_logexpr(other)
		if other is NotImplemented: return other
		return self + (-other)

	def __rsub__(self, other):
		return (-self) + other

	def __mul__(self, scalar):
		if not isrational(scalar): return NotImplemented
		scalar = Fraction(scalar)
		return LogExpr(self.constant * scalar, {base: coefficient * scalar for base, coefficient in self.terms})

	__rmul__ = __mul__

	def __truediv__(self, scalar):
		if not isrational(scalar): return NotImplemented
		assert scalar != 0, 'division of a log form by zero'
		return self * (1 / Fraction(scalar))

	######################################################### comparison
	def sign(self):
		'''
		exact sign: with L the lcm of all denominators, L * value = log2(prod base^(L a_k) * 2^(L c)), which is compared with 0
		by comparing two integers
		'''
		if not self.terms: return (self.constant > 0) - (self.constant < 0)
		scale = self.constant.denominator
		for _, coefficient in self.terms: scale = _lcm(scale, coefficient.denominator)
		upper, lower = 1, 1
		exponent = int(self.constant * scale)
		if exponent > 0: upper <<= exponent
		else: lower <<= -exponent
		for base, coefficient in self.terms:
			power = int(coefficient * scale)
			if power > 0: upper *= base ** power
			else: lower *= base ** (-power)
		return (upper > lower) - (upper < lower)

	def __eq__(self, other):
		other = _as_logexpr(other)
		if other is NotImplemented: return False
		return self.constant == other.constant and self.terms == other.terms

	def __lt__(self, other):
		other = _as_logexpr(other)
		if other is NotImplemented: return other
		return (self - other).sign() < 0

	def __hash__(self):
		return hash((self.constant, self.terms))

	######################################################### conversion
	def is_rational(self):
		return len(self.terms) == 0

	def to_fraction(self):
		'''
		the exact rational value, None when the value involves a logarithm
		'''
		return self.constant if self.is_rational() else None

	def to_float(self):
		return float(self.constant) + sum(float(coefficient) * math.log2(base) for base, coefficient in self.terms)

	def render(self):
		'''
		exact string such as '3 - log2(3)' or '1/2*log2(5) + 1'
		'''
		parts = []
		if self.constant != 0 or not self.terms: parts.append(rational2str(self.constant))
		for base, coefficient in self.terms:
			magnitude = abs(coefficient)
			term = 'log2(%d)' % base if magnitude == 1 else '%s*log2(%d)' % (rational2str(magnitude), base)
			if not parts: parts.append(term if coefficient > 0 else '-' + term)
			else: parts.append(('+ ' if coefficient > 0 else '- ') + term)
		return ' '.join(parts)

	def __repr__(self):
		return 'LogExpr(%s)' % self.render()

	def __str__(self):
		return self.render()

def _as_logexpr(value):
	if isinstance(value, LogExpr): return value
	if isrational(value): return LogExpr(value)
	return NotImplemented

@total_ordering
class LogRatio(object):
	'''
	numerator / denominator with a nonnegative rational numerator and a LogExpr denominator, positive for finite values,
	a positive numerator over a zero denominator is the infinite marker
	'''
	__slots__ = ('numerator', 'denominator')

	def __init__(self, numerator, denominator):
		assert isrational(numerator) and numerator >= 0, 'the numerator should be a nonnegative rational'
		denominator = _as_logexpr(denominator)
		assert denominator is not NotImplemented, 'the denominator should be a log form'
		sign = denominator.sign()
		assert sign > 0 or (sign == 0 and numerator > 0), 'the denominator of a ratio should be positive'
		self.numerator = Fraction(numerator)
		self.denominator = denominator

	@classmethod
	def infinity(cls):
		return cls(1, LogExpr(0))

	@classmethod
	def from_rational(cls, value):
		return cls(value, LogExpr(1))

	def is_infinite(self):
		return self.denominator.sign() == 0

	def reciprocal(self):
		'''
		denominator / numerator as a LogExpr, zero for the infinite marker
		'''
		if self.is_infinite(): return LogExpr(0)
		assert self.numerator > 0, 'the reciprocal of zero is not defined'
		return self.denominator / self.numerator

	def scaled(self, factor):
		'''
		factor * value for a positive rational factor
		'''
		assert isrational(factor) and factor > 0, 'the scale factor should be a positive rational'
		if self.is_infinite(): return self
		return LogRatio(self.numerator * factor, self.denominator)

	def __eq__(self, other):
		if not isinstance(other, LogRatio): return False
		if self.is_infinite() or other.is_infinite(): return self.is_infinite() and other.is_infinite()
		return (self.denominator * other.numerator - other.denominator * self.numerator).sign() == 0

	def __lt__(self, other):
		if not isinstance(other, LogRatio): return NotImplemented
		if self.is_infinite(): return False
		if other.is_infinite(): return True
		# a / D1 < b / D2 iff a * D2 < b * D1 for positive D1 and D2
		return (self.numerator * other.denominator - other.numerator * self.denominator).sign() < 0

	def __hash__(self):
		fraction = self.to_fraction()
		if fraction is not None: return hash(fraction)
		return hash(('inf',)) if self.is_infinite() else hash(self.denominator / self.numerator)

	def to_fraction(self):
		if self.is_infinite(): return None
		if self.numerator == 0: return Fraction(0)
		denominator = self.denominator.to_fraction()
		return None if denominator is None else self.numerator / denominator

	def to_float(self):
		if self.is_infinite(): return math.inf
		return float(self.numerator) / self.denominator.to_float()

	def render(self):
		if self.is_infinite(): return 'inf'
		fraction = self.to_fraction()
		if fraction is not None: return rational2str(fraction)
		return '%s/(%s)' % (rational2str(self.numerator), self.denominator.render())

	def __repr__(self):
		return 'LogRatio(%s)' % self.render()

	def __str__(self):
		return self.render()
