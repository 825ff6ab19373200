# this file contains an exact rational tableau simplex for max c^T y subject to A y <= b, y >= 0 with b >= 0,
# the origin is feasible so no first phase is needed, Bland's rule guarantees termination
from fractions import Fraction

from confdual_miscellaneous import issequence, isrational

class SimplexTableau(object):
	'''
	dictionary form tableau: the rows express the basic variables through the nonbasic ones,
	variables 0 .. n-1 are the structural variables and n .. n+m-1 the slacks of the m constraints

	A:			m x n coefficients of the nonbasic variables in every row
	b:			values of the basic variables
	c:			reduced costs of the nonbasic variables
	value:		objective value of the current basic solution
	'''
	def __init__(self, A, b, c, debug=True):
		if debug:
			assert issequence(A) and issequence(b) and issequence(c), 'the tableau data should be lists'
			assert len(A) == len(b) and all(len(row) == len(c) for row in A), 'the constraint matrix does not match b and c'
			assert all(isrational(entry) and entry >= 0 for entry in b), 'the right hand side should be nonnegative rationals'
		self.m, self.n = len(b), len(c)
		self.num_structural = self.n
		self.A = [[Fraction(entry) for entry in row] for row in A]
		self.b = [Fraction(entry) for entry in b]
		self.c = [Fraction(entry) for entry in c]
		self.value = Fraction(0)
		self.nb_vars = list(range(self.n))
		self.b_vars = list(range(self.n, self.n + self.m))
		self.pivots = 0

	def pivot(self, i, j):
		'''
		exchange the basic variable of row i with the nonbasic variable of column j
		'''
		A, b, c = self.A, self.b, self.c
		piv = A[i][j]
		delta = c[j] / piv
		self.value += delta * b[i]
		for l in range(self.n): c[l] -= delta * A[i][l]
		c[j] = -delta

		row = A[i]
		for l in range(self.n): row[l] = 1 / piv if l == j else row[l] / piv
		b[i] /= piv
		for k in range(self.m):
			if k == i: continue
			f = A[k][j]
			if f == 0: continue
			other = A[k]
			for l in range(self.n): other[l] = -f / piv if l == j else other[l] - f * row[l]
			b[k] -= f * b[i]

		self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
		self.pivots += 1

	def bland_step(self):
		'''
		one pivot with the lowest-index entering and leaving variables, returns 'optimal', 'unbounded' or 'go_on'
		'''
		entering = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
		if not entering: return 'optimal'
		_, j = min(entering)
		leaving = [(self.b[i] / self.A[i][j], self.b_vars[i], i) for i in range(self.m) if self.A[i][j] > 0]
		if not leaving: return 'unbounded'
		_, _, i = min(leaving)
		self.pivot(i, j)
		return 'go_on'

	def solve(self):
		while True:
			status = self.bland_step()
			if status != 'go_on': return status

	def add_row(self, coefficients, rhs):
		'''
		append the constraint sum_v coefficients[v] y_v <= rhs, written in the current nonbasic variables,
		the current basic solution may violate it, dual_solve restores feasibility
		'''
		assert len(coefficients) == self.num_structural, 'one coefficient per structural variable is required'
		row, rhs = [Fraction(0)] * self.n, Fraction(rhs)
		nonbasic_column = {var: j for j, var in enumerate(self.nb_vars)}
		basic_row = {var: i for i, var in enumerate(self.b_vars)}
		for var, coefficient in enumerate(coefficients):
			if coefficient == 0: continue
			if var in nonbasic_column: row[nonbasic_column[var]] += coefficient
			else:
				i = basic_row[var]
				for l in range(self.n): row[l] -= coefficient * self.A[i][l]
				rhs -= coefficient * self.b[i]
		self.A.append(row)
		self.b.append(rhs)
		self.b_vars.append(self.num_structural + self.m)
		self.m += 1

	def dual_step(self):
		'''
		one dual simplex pivot with the lowest-index infeasible row, returns 'optimal', 'infeasible' or 'go_on'
		'''
		rows = [(self.b_vars[i], i) for i in range(self.m) if self.b[i] < 0]
		if not rows: return 'optimal'
		_, i = min(rows)
		entering = [(self.c[j] / self.A[i][j], self.nb_vars[j], j) for j in range(self.n) if self.A[i][j] < 0]
		if not entering: return 'infeasible'
		_, _, j = min(entering)
		self.pivot(i, j)
		return 'go_on'

	def dual_solve(self):
		while True:
			status = self.dual_step()
			if status != 'go_on': return status

	def primal_values(self):
		'''
		values of the structural variables
		'''
		values = [Fraction(0)] * self.n
		for i, var in enumerate(self.b_vars):
			if var < self.num_structural: values[var] = self.b[i]
		return values

	def shadow_prices(self):
		'''
		optimal dual value of every constraint, read from the reduced costs of the slacks
		'''
		prices = [Fraction(0)] * self.m
		for j, var in enumerate(self.nb_vars):
			if var >= self.num_structural: prices[var - self.num_structural] = -self.c[j]
		return prices

def solve_packing_lp(A, c, debug=True):
	'''
	max c^T y subject to A y <= 1, y >= 0

	outputs:
		value:		Fraction
		y:			optimal structural values
		prices:		optimal dual values of the constraints
	'''
	tableau = SimplexTableau(A, [1] * len(A), c, debug=debug)
	status = tableau.solve()
	if debug: assert status == 'optimal', 'the packing program is unbounded, a column is not covered by any constraint'
	return tableau.value, tableau.primal_values(), tableau.shadow_prices()
