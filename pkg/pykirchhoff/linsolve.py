# Copyright 2024 The pykirchhoff Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Graded membership problems and their exact linear systems.

All polynomials handled here are homogeneous, so deciding whether a target is
a combination of generators with polynomial cofactors reduces to a single
graded piece: the cofactor of generator g has the forced degree
deg(target) - deg(g), and comparing coefficients monomial by monomial gives a
linear system over the rationals.  Several identities may share a cofactor
("slot"); the shared unknowns then appear in the rows of every identity that
mentions them.

Systems are solved with sympy's sparse DomainMatrix over QQ.  Free variables
are set to zero so solutions are reproducible.
"""

import collections
import fractions
import itertools
import logging

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from pykirchhoff import errors
from pykirchhoff import poly

logger = logging.getLogger('pykirchhoff.linsolve')

Summand = collections.namedtuple('Summand', ['generator', 'slot'])
Identity = collections.namedtuple('Identity', ['target', 'summands'])
SolveResult = collections.namedtuple('SolveResult',
                                     ['feasible', 'assignment', 'transcript'])


class GradedMembershipProblem(object):
  """Identities target = sum(slot * generator) with shared slots.

  Attributes:
    identities: list of Identity tuples.
    slot_degrees: dict mapping each slot id to the degree of its unknown.
  """

  def __init__(self, identities, slot_degrees):
    self.identities = list(identities)
    self.slot_degrees = dict(slot_degrees)
    for identity in self.identities:
      for summand in identity.summands:
        if summand.slot not in self.slot_degrees:
          raise errors.DegreeMismatchError('Slot %r has no degree' %
                                           (summand.slot,))

  def Residuals(self, assignment):
    """target - sum(slot * generator) for each identity."""
    residuals = []
    for identity in self.identities:
      combination = poly.Sum(
          assignment.get(s.slot, poly.Polynomial.Zero()) * s.generator
          for s in identity.summands)
      residuals.append(identity.target - combination)
    return residuals


class SparseLinearSystem(object):
  """Coefficient-comparison system of a GradedMembershipProblem."""

  def __init__(self, rows, columns, entries, rhs):
    self.rows = rows
    self.columns = columns
    self.entries = entries
    self.rhs = rhs

  def Shape(self):
    return (len(self.rows), len(self.columns))

  def Dump(self):
    """Matrix-market-like text: 1-based 'row col num/den' lines, rhs last."""
    lines = ['%d %d' % (len(self.rows), len(self.columns) + 1)]
    for (row, col), value in sorted(self.entries.items()):
      lines.append('%d %d %s' % (row + 1, col + 1, poly.FormatRational(value)))
    for row, value in sorted(self.rhs.items()):
      lines.append('%d %d %s' % (row + 1, len(self.columns) + 1,
                                 poly.FormatRational(value)))
    return '\n'.join(lines) + '\n'


def MonomialsOfDegree(variables, degree):
  """All monomials of the given total degree over sorted variables."""
  result = []
  for combo in itertools.combinations_with_replacement(sorted(variables),
                                                       degree):
    result.append(poly.MakeMonomial(collections.Counter(combo)))
  return result


def _IdentityDegree(identity, slot_degrees):
  if identity.target:
    grading = identity.target.Homogeneity()
    if not grading.is_homogeneous:
      raise errors.DegreeMismatchError('Target is not homogeneous')
    return grading.degree
  for summand in identity.summands:
    if summand.generator:
      return summand.generator.Degree() + slot_degrees[summand.slot]
  return None


def BuildSystem(problem):
  """Expands a graded membership problem into a sparse linear system.

  Raises:
    DegreeMismatchError: when a summand's generator and slot degree do not
        add up to the degree of its identity.
  """
  degrees = []
  slot_variables = collections.defaultdict(set)
  for identity in problem.identities:
    degree = _IdentityDegree(identity, problem.slot_degrees)
    degrees.append(degree)
    variables = set(identity.target.Variables())
    for summand in identity.summands:
      variables.update(summand.generator.Variables())
    for summand in identity.summands:
      if not summand.generator:
        continue
      slot_degree = problem.slot_degrees[summand.slot]
      grading = summand.generator.Homogeneity()
      if (slot_degree < 0 or not grading.is_homogeneous or
          grading.degree + slot_degree != degree):
        raise errors.DegreeMismatchError(
            'Summand for slot %r does not have degree %s' %
            (summand.slot, degree))
      slot_variables[summand.slot].update(variables)

  columns = []
  for slot in sorted(slot_variables, key=repr):
    for monomial in MonomialsOfDegree(slot_variables[slot],
                                      problem.slot_degrees[slot]):
      columns.append((slot, monomial))
  column_index = {column: i for i, column in enumerate(columns)}

  cells = collections.defaultdict(fractions.Fraction)
  targets = {}
  for number, identity in enumerate(problem.identities):
    for monomial, coeff in identity.target.Items():
      targets[(number, monomial)] = coeff
    for summand in identity.summands:
      if not summand.generator:
        continue
      slot_degree = problem.slot_degrees[summand.slot]
      for slot_monomial in MonomialsOfDegree(slot_variables[summand.slot],
                                             slot_degree):
        column = column_index[(summand.slot, slot_monomial)]
        for monomial, coeff in summand.generator.Items():
          row = (number, poly.MultiplyMonomials(slot_monomial, monomial))
          cells[(row, column)] += coeff

  row_keys = sorted({row for row, _ in cells} | set(targets),
                    key=lambda key: (key[0], key[1]))
  row_index = {key: i for i, key in enumerate(row_keys)}
  entries = {(row_index[row], column): value
             for (row, column), value in cells.items() if value}
  rhs = {row_index[row]: value for row, value in targets.items()}
  logger.debug('Graded system with %d rows and %d columns',
               len(row_keys), len(columns))
  return SparseLinearSystem(row_keys, columns, entries, rhs)


def _ToQQ(value):
  return QQ(value.numerator, value.denominator)


def _FromQQ(value):
  return fractions.Fraction(int(value.numerator), int(value.denominator))


def Solve(system, transcript=False):
  """Finds one exact solution, or reports the system infeasible.

  Args:
    system: a SparseLinearSystem.
    transcript: when True, the result carries a short text account of the
        reduction (pivot columns, and the inconsistent row if any).

  Returns:
    A SolveResult whose assignment maps slot -> Polynomial (None when the
    system is infeasible).
  """
  n_rows, n_cols = system.Shape()
  lines = []
  values = {}
  if n_rows:
    rows = collections.defaultdict(dict)
    for (row, column), value in system.entries.items():
      rows[row][column] = _ToQQ(value)
    for row, value in system.rhs.items():
      rows[row][n_cols] = _ToQQ(value)
    matrix = DomainMatrix(dict(rows), (n_rows, n_cols + 1), QQ)
    reduced, pivots = matrix.rref()
    reduced_rows = reduced.to_sparse().rep
    if transcript:
      lines.append('pivots: %s' % list(pivots))
    if n_cols in pivots:
      bad_row = list(pivots).index(n_cols)
      logger.debug('Graded system is infeasible (reduced row %d)', bad_row)
      if transcript:
        lines.append('reduced row %d reads 0 = 1' % bad_row)
      return SolveResult(False, None, '\n'.join(lines))
    for row, pivot in enumerate(pivots):
      value = reduced_rows.get(row, {}).get(n_cols)
      if value:
        values[pivot] = _FromQQ(value)

  assignment = {}
  for column, value in values.items():
    slot, monomial = system.columns[column]
    term = poly.Polynomial({monomial: value})
    assignment[slot] = assignment.get(slot, poly.Polynomial.Zero()) + term
  return SolveResult(True, assignment, '\n'.join(lines))


def SolveProblem(problem, transcript=False):
  """Builds, solves and re-checks a graded membership problem.

  Every slot of the problem is present in a feasible assignment (zero when
  unconstrained).

  Raises:
    CertificateError: if a returned solution fails to satisfy the problem.
  """
  result = Solve(BuildSystem(problem), transcript=transcript)
  if not result.feasible:
    return result
  assignment = {slot: result.assignment.get(slot, poly.Polynomial.Zero())
                for slot in problem.slot_degrees}
  if any(problem.Residuals(assignment)):
    raise errors.CertificateError('Linear solution does not satisfy the '
                                  'graded identities')
  return SolveResult(True, assignment, result.transcript)
