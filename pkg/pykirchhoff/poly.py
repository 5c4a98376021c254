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

"""Exact sparse multivariate polynomials over the rationals.

A Polynomial maps monomials to fractions.Fraction coefficients.  A monomial is
a tuple of (variable, exponent) pairs sorted by variable name with no zero
exponents stored; variables are edge ids.  Polynomials are immutable values:
arithmetic always allocates a fresh result.

Terms are printed in graded reverse lexicographic order (descending), with
variables compared by their names.  The order only affects printing.
"""

import collections
import fractions
import re

from pykirchhoff import errors

Homogeneity = collections.namedtuple(
    'Homogeneity', ['is_homogeneous', 'degree', 'components'])

ONE_MONOMIAL = ()


def MonomialDegree(monomial):
  return sum(exp for _, exp in monomial)


def MakeMonomial(exponents):
  """Builds a monomial from a mapping of variable name to exponent."""
  return tuple(sorted((var, exp) for var, exp in exponents.items() if exp))


def MultiplyMonomials(a, b):
  if not a:
    return b
  if not b:
    return a
  exps = dict(a)
  for var, exp in b:
    exps[var] = exps.get(var, 0) + exp
  return tuple(sorted(exps.items()))


def MonomialToString(monomial):
  return '*'.join(var if exp == 1 else '%s^%d' % (var, exp)
                  for var, exp in monomial)


def FormatRational(value):
  if value.denominator == 1:
    return '%d' % value.numerator
  return '%d/%d' % (value.numerator, value.denominator)


def _Scalar(value):
  if isinstance(value, fractions.Fraction):
    return value
  if isinstance(value, int):
    return fractions.Fraction(value)
  raise TypeError('Not an exact scalar: %r' % (value,))


def _IsScalar(value):
  return isinstance(value, (int, fractions.Fraction))


def _AddInto(terms, monomial, coeff):
  total = terms.get(monomial, 0) + coeff
  if total:
    terms[monomial] = total
  else:
    terms.pop(monomial, None)


class Polynomial(object):
  """An immutable sparse polynomial with rational coefficients."""

  __slots__ = ('_terms', '_hash')

  def __init__(self, terms=None):
    self._terms = {}
    self._hash = None
    if terms:
      items = terms.items() if isinstance(terms, dict) else terms
      for monomial, coeff in items:
        coeff = _Scalar(coeff)
        if coeff:
          _AddInto(self._terms, monomial, coeff)

  @classmethod
  def _Wrap(cls, terms):
    poly = cls.__new__(cls)
    poly._terms = terms
    poly._hash = None
    return poly

  @classmethod
  def Constant(cls, value):
    value = _Scalar(value)
    return cls._Wrap({ONE_MONOMIAL: value} if value else {})

  @classmethod
  def Variable(cls, name):
    return cls._Wrap({((name, 1),): fractions.Fraction(1)})

  @classmethod
  def Zero(cls):
    return cls._Wrap({})

  @classmethod
  def One(cls):
    return cls.Constant(1)

  @classmethod
  def FromString(cls, text):
    return _Parser(text).Parse()

  # Container protocol.

  def __bool__(self):
    return bool(self._terms)

  def __len__(self):
    return len(self._terms)

  def __eq__(self, other):
    other = _Coerce(other)
    if other is None:
      return NotImplemented
    return self._terms == other._terms

  def __hash__(self):
    if self._hash is None:
      self._hash = hash(frozenset(self._terms.items()))
    return self._hash

  def __str__(self):
    return self.ToString()

  def __repr__(self):
    return 'Polynomial(%r)' % self.ToString()

  # Arithmetic.

  def __add__(self, other):
    other = _Coerce(other)
    if other is None:
      return NotImplemented
    terms = dict(self._terms)
    for monomial, coeff in other._terms.items():
      _AddInto(terms, monomial, coeff)
    return Polynomial._Wrap(terms)

  __radd__ = __add__

  def __neg__(self):
    return Polynomial._Wrap({m: -c for m, c in self._terms.items()})

  def __sub__(self, other):
    other = _Coerce(other)
    if other is None:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    other = _Coerce(other)
    if other is None:
      return NotImplemented
    return other + (-self)

  def __mul__(self, other):
    if _IsScalar(other):
      other = _Scalar(other)
      if not other:
        return Polynomial.Zero()
      return Polynomial._Wrap({m: c * other for m, c in self._terms.items()})
    other = _Coerce(other)
    if other is None:
      return NotImplemented
    terms = {}
    for m1, c1 in self._terms.items():
      for m2, c2 in other._terms.items():
        _AddInto(terms, MultiplyMonomials(m1, m2), c1 * c2)
    return Polynomial._Wrap(terms)

  __rmul__ = __mul__

  def __truediv__(self, scalar):
    if not _IsScalar(scalar):
      return NotImplemented
    return self * (1 / _Scalar(scalar))

  def __pow__(self, exponent):
    if not isinstance(exponent, int) or exponent < 0:
      raise errors.PolynomialError('Exponent must be a non-negative int')
    result = Polynomial.One()
    for _ in range(exponent):
      result = result * self
    return result

  # Queries.

  def IsZero(self):
    return not self._terms

  def IsConstant(self):
    return all(not m for m in self._terms)

  def ConstantValue(self):
    return self._terms.get(ONE_MONOMIAL, fractions.Fraction(0))

  def Coefficient(self, monomial):
    return self._terms.get(monomial, fractions.Fraction(0))

  def Items(self):
    """Returns (monomial, coefficient) pairs in no particular order."""
    return self._terms.items()

  def Terms(self):
    """Returns (monomial, coefficient) pairs in canonical order."""
    order = sorted(self.Variables(), reverse=True)

    def Key(item):
      exps = dict(item[0])
      return (MonomialDegree(item[0]),
              tuple(-exps.get(var, 0) for var in order))

    return sorted(self._terms.items(), key=Key, reverse=True)

  def Degree(self):
    """Total degree, or None for the zero polynomial."""
    if not self._terms:
      return None
    return max(MonomialDegree(m) for m in self._terms)

  def Variables(self):
    return frozenset(var for m in self._terms for var, _ in m)

  def DegreeIn(self, var):
    return max([dict(m).get(var, 0) for m in self._terms] or [0])

  def IsMultilinear(self):
    return all(exp == 1 for m in self._terms for _, exp in m)

  # Calculus and substitution.

  def Derivative(self, var):
    terms = {}
    for monomial, coeff in self._terms.items():
      exps = dict(monomial)
      exp = exps.get(var, 0)
      if not exp:
        continue
      exps[var] = exp - 1
      _AddInto(terms, MakeMonomial(exps), coeff * exp)
    return Polynomial._Wrap(terms)

  def Substitute(self, var, value):
    """Replaces var by a scalar or by another polynomial."""
    if _IsScalar(value):
      value = Polynomial.Constant(value)
    powers = {0: Polynomial.One()}
    result = {}
    for monomial, coeff in self._terms.items():
      exps = dict(monomial)
      exp = exps.pop(var, 0)
      if not exp:
        _AddInto(result, monomial, coeff)
        continue
      if exp not in powers:
        powers[exp] = value ** exp
      rest = MakeMonomial(exps)
      for m2, c2 in powers[exp]._terms.items():
        _AddInto(result, MultiplyMonomials(rest, m2), coeff * c2)
    return Polynomial._Wrap(result)

  def RenameVariables(self, mapping):
    """Applies a simultaneous renaming of variables."""
    terms = {}
    for monomial, coeff in self._terms.items():
      exps = {}
      for var, exp in monomial:
        new_var = mapping.get(var, var)
        exps[new_var] = exps.get(new_var, 0) + exp
      _AddInto(terms, MakeMonomial(exps), coeff)
    return Polynomial._Wrap(terms)

  def SwapVariables(self, u, v):
    return self.RenameVariables({u: v, v: u})

  def Evaluate(self, values):
    total = fractions.Fraction(0)
    for monomial, coeff in self._terms.items():
      term = coeff
      for var, exp in monomial:
        if var not in values:
          raise errors.PolynomialError('No value for variable %r' % var)
        term *= _Scalar(values[var]) ** exp
      total += term
    return total

  def CoefficientOf(self, exponents):
    """Extracts the coefficient of a monomial in a subset of variables.

    Args:
      exponents: dict mapping each selected variable to its exponent (0 is
          allowed and means the variable must be absent).

    Returns:
      A Polynomial free of the selected variables.
    """
    terms = {}
    for monomial, coeff in self._terms.items():
      exps = dict(monomial)
      if any(exps.pop(var, 0) != exp for var, exp in exponents.items()):
        continue
      _AddInto(terms, MakeMonomial(exps), coeff)
    return Polynomial._Wrap(terms)

  # Grading.

  def Homogeneity(self):
    components = {}
    for monomial, coeff in self._terms.items():
      components.setdefault(MonomialDegree(monomial), {})[monomial] = coeff
    components = {d: Polynomial._Wrap(t) for d, t in components.items()}
    if len(components) == 1:
      degree = next(iter(components))
      return Homogeneity(True, degree, components)
    return Homogeneity(not components, None, components)

  def IsHomogeneous(self):
    return self.Homogeneity().is_homogeneous

  def EulerIdentityHolds(self):
    """Checks m*p == sum_v v * dp/dv for a homogeneous p of degree m.

    Raises:
      NotHomogeneousError: if the polynomial is not homogeneous.
    """
    grading = self.Homogeneity()
    if not grading.is_homogeneous:
      raise errors.NotHomogeneousError('Polynomial is not homogeneous')
    degree = grading.degree or 0
    rhs = Sum(Polynomial.Variable(var) * self.Derivative(var)
              for var in sorted(self.Variables()))
    return self * degree == rhs

  # Rendering.

  def ToString(self):
    if not self._terms:
      return '0'
    pieces = []
    for monomial, coeff in self.Terms():
      magnitude = abs(coeff)
      if not monomial:
        body = FormatRational(magnitude)
      elif magnitude == 1:
        body = MonomialToString(monomial)
      else:
        body = '%s*%s' % (FormatRational(magnitude), MonomialToString(monomial))
      if not pieces:
        pieces.append('-' + body if coeff < 0 else body)
      else:
        pieces.append(('- ' if coeff < 0 else '+ ') + body)
    return ' '.join(pieces)


def _Coerce(value):
  if isinstance(value, Polynomial):
    return value
  if _IsScalar(value):
    return Polynomial.Constant(value)
  return None


def Sum(polynomials):
  terms = {}
  for poly in polynomials:
    for monomial, coeff in _Coerce(poly)._terms.items():
      _AddInto(terms, monomial, coeff)
  return Polynomial._Wrap(terms)


def Product(polynomials):
  result = Polynomial.One()
  for poly in polynomials:
    result = result * poly
  return result


def Var(name):
  return Polynomial.Variable(name)


def VarSum(names):
  """Sum of the variables in names."""
  return Polynomial._Wrap(
      {((name, 1),): fractions.Fraction(1) for name in names})


_TOKEN_RE = re.compile(
    r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
    r'|(?P<op>[-+*/^()]))')


class _Parser(object):
  """Recursive descent parser for the canonical text rendering.

  Grammar:
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' NUMBER]
    atom   := NUMBER ['/' NUMBER] | NAME | '(' expr ')'
  """

  def __init__(self, text):
    self.text = text
    self.tokens = []
    pos = 0
    while pos < len(text):
      if text[pos:].strip() == '':
        break
      match = _TOKEN_RE.match(text, pos)
      if not match:
        raise errors.PolynomialError('Unexpected character %r' %
                                     text[pos:].lstrip()[:1], pos)
      start = match.start(match.lastgroup)
      self.tokens.append((match.lastgroup, match.group(match.lastgroup),
                          start))
      pos = match.end()
    self.index = 0

  def _Peek(self):
    if self.index < len(self.tokens):
      return self.tokens[self.index]
    return (None, None, len(self.text))

  def _Next(self):
    token = self._Peek()
    self.index += 1
    return token

  def _Expect(self, kind, value=None):
    token = self._Next()
    if token[0] != kind or (value is not None and token[1] != value):
      raise errors.PolynomialError(
          'Expected %s' % (value or kind), token[2])
    return token

  def Parse(self):
    if not self.tokens:
      raise errors.PolynomialError('Empty polynomial', 0)
    result = self._Expr()
    token = self._Peek()
    if token[0] is not None:
      raise errors.PolynomialError('Unexpected %r' % token[1], token[2])
    return result

  def _Expr(self):
    sign = 1
    if self._Peek()[1] in ('+', '-'):
      sign = -1 if self._Next()[1] == '-' else 1
    result = self._Term() * sign
    while self._Peek()[1] in ('+', '-'):
      op = self._Next()[1]
      term = self._Term()
      result = result + term if op == '+' else result - term
    return result

  def _Term(self):
    result = self._Factor()
    while self._Peek()[1] == '*':
      self._Next()
      result = result * self._Factor()
    return result

  def _Factor(self):
    base = self._Atom()
    if self._Peek()[1] == '^':
      self._Next()
      return base ** int(self._Expect('number')[1])
    return base

  def _Atom(self):
    kind, value, pos = self._Next()
    if kind == 'number':
      numerator = int(value)
      if self._Peek()[1] == '/':
        self._Next()
        denominator = int(self._Expect('number')[1])
        if not denominator:
          raise errors.PolynomialError('Zero denominator', pos)
        return Polynomial.Constant(fractions.Fraction(numerator, denominator))
      return Polynomial.Constant(numerator)
    if kind == 'name':
      return Polynomial.Variable(value)
    if value == '(':
      result = self._Expr()
      self._Expect('op', ')')
      return result
    raise errors.PolynomialError(
        'Unexpected %s' % (repr(value) if value else 'end of input'), pos)
