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

"""Tests for pykirchhoff.poly."""

import fractions
import unittest

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from pykirchhoff import errors
from pykirchhoff import poly

P = poly.Polynomial.FromString
Var = poly.Var

_VARS = ['a', 'b', 'c', 'x']


@st.composite
def polynomials(draw, max_terms=4):
  terms = draw(st.lists(
      st.tuples(st.dictionaries(st.sampled_from(_VARS),
                                st.integers(min_value=1, max_value=2),
                                max_size=3),
                st.fractions(min_value=-5, max_value=5, max_denominator=4)),
      max_size=max_terms))
  return poly.Sum(poly.Polynomial({poly.MakeMonomial(m): c})
                  for m, c in terms)


class PolynomialTest(unittest.TestCase):

  def testCanonicalOrderIsGradedRevlex(self):
    self.assertEqual(str(P('c + b + a')), 'a + b + c')
    self.assertEqual(str((Var('x') + Var('y')) ** 2), 'x^2 + 2*x*y + y^2')

  def testRendering(self):
    self.assertEqual(str(poly.Polynomial.Zero()), '0')
    self.assertEqual(str(P('1/2*y*z')), '1/2*y*z')
    self.assertEqual(str(P('-x + y')), '-x + y')
    self.assertEqual(str(P('x - 3')), 'x - 3')

  def testParseRenderRoundTrip(self):
    for text in ['a + b + c', 'x^2 + 2*x*y + y^2', '-3/4*a*b - c', '7']:
      self.assertEqual(str(P(text)), text)

  def testParserErrorsCarryPositions(self):
    with self.assertRaises(errors.PolynomialError) as ctx:
      P('x + * y')
    self.assertEqual(ctx.exception.position, 4)
    self.assertRaises(errors.PolynomialError, P, '')
    self.assertRaises(errors.PolynomialError, P, '(x + y')
    self.assertRaises(errors.PolynomialError, P, '1/0')
    self.assertRaises(errors.PolynomialError, P, 'x $ y')

  def testArithmeticWithScalars(self):
    x = Var('x')
    self.assertEqual(x + 1 - 1, x)
    self.assertEqual(2 * x / 4, P('1/2*x'))
    self.assertEqual(1 - x, P('-x + 1'))
    self.assertEqual(x * 0, 0)
    self.assertTrue(P('3') == 3)

  def testPowerRejectsNegativeExponent(self):
    self.assertRaises(errors.PolynomialError, lambda: Var('x') ** -1)

  def testQueries(self):
    p = P('x^2*y + 3*y + 2')
    self.assertEqual(p.Degree(), 3)
    self.assertIsNone(poly.Polynomial.Zero().Degree())
    self.assertEqual(p.Variables(), frozenset(['x', 'y']))
    self.assertEqual(p.DegreeIn('x'), 2)
    self.assertFalse(p.IsMultilinear())
    self.assertTrue(P('x*y + z').IsMultilinear())
    self.assertEqual(p.ConstantValue(), 2)
    self.assertEqual(p.Coefficient((('y', 1),)), 3)
    self.assertTrue(P('5').IsConstant())

  def testDerivativeAndSubstitution(self):
    p = P('x^2*y + x*z')
    self.assertEqual(p.Derivative('x'), P('2*x*y + z'))
    self.assertEqual(p.Derivative('w'), 0)
    self.assertEqual(p.Substitute('x', 0), 0)
    self.assertEqual(p.Substitute('x', P('y + z')),
                     P('(y + z)^2*y + (y + z)*z'))

  def testRenameIsSimultaneous(self):
    p = P('x^2*y')
    self.assertEqual(p.SwapVariables('x', 'y'), P('x*y^2'))
    self.assertEqual(p.RenameVariables({'x': 'y'}), P('y^3'))

  def testEvaluate(self):
    p = P('x*y + 1/2')
    self.assertEqual(p.Evaluate({'x': 2, 'y': fractions.Fraction(1, 4)}), 1)
    self.assertRaises(errors.PolynomialError, p.Evaluate, {'x': 1})

  def testCoefficientOf(self):
    p = P('x^2*a + x*y*b + y*c + d')
    self.assertEqual(p.CoefficientOf({'x': 2, 'y': 0}), Var('a'))
    self.assertEqual(p.CoefficientOf({'x': 1, 'y': 1}), Var('b'))
    self.assertEqual(p.CoefficientOf({'x': 0, 'y': 0}), Var('d'))

  def testHomogeneity(self):
    self.assertTrue(P('x*y + z^2').IsHomogeneous())
    grading = P('x*y + z').Homogeneity()
    self.assertFalse(grading.is_homogeneous)
    self.assertEqual(sorted(grading.components), [1, 2])
    self.assertTrue(P('x*y*z + x^3').EulerIdentityHolds())
    self.assertRaises(errors.NotHomogeneousError,
                      P('x + 1').EulerIdentityHolds)

  def testHashMatchesEquality(self):
    self.assertEqual(hash(P('a + b')), hash(P('b + a')))
    self.assertEqual(len({P('a + b'), P('b + a'), P('a')}), 2)

  @given(polynomials(), polynomials(), polynomials())
  @settings(max_examples=60, deadline=None)
  def testRingLaws(self, p, q, r):
    self.assertEqual(p * (q + r), p * q + p * r)
    self.assertEqual((p + q) - q, p)
    self.assertEqual(p * q, q * p)

  @given(polynomials(), polynomials())
  @settings(max_examples=60, deadline=None)
  def testLeibnizRule(self, p, q):
    self.assertEqual((p * q).Derivative('a'),
                     p.Derivative('a') * q + p * q.Derivative('a'))

  @given(polynomials())
  @settings(max_examples=60, deadline=None)
  def testTextRoundTrip(self, p):
    self.assertEqual(P(str(p)), p)


if __name__ == '__main__':
  unittest.main()
