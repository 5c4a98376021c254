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

"""Tests for pykirchhoff.kirchhoff."""

import unittest

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from pykirchhoff import errors
from pykirchhoff import graph as graph_lib
from pykirchhoff import kirchhoff
from pykirchhoff import poly
from pykirchhoff import spbuild
from pykirchhoff.tests.lib import util

P = poly.Polynomial.FromString
Psi = kirchhoff.KirchhoffPolynomial


class KirchhoffTest(unittest.TestCase):

  def testSmallGraphs(self):
    self.assertEqual(str(Psi(util.Triangle())), 'a + b + c')
    double = spbuild.Cycle(1, 1).graph
    self.assertEqual(Psi(double), P('x1 + y1'))
    loop = graph_lib.Multigraph(['u'], [('l', 'u', 'u')])
    self.assertEqual(Psi(loop), P('l'))
    self.assertEqual(Psi(spbuild.Path(3).graph), 1)

  def testDisconnectedGraphIsZero(self):
    g = graph_lib.Multigraph(['u', 'v', 'w'], [('a', 'u', 'v')])
    result = kirchhoff.Kirchhoff(g)
    self.assertEqual(str(result.polynomial), '0')
    self.assertEqual(result.graph_loop_number, 0)

  def testExampleH(self):
    h = util.ExampleH()
    self.assertEqual(Psi(h.graph),
                     P('(x + y)*eta + x*y + (x + y)*(z + w)'))
    self.assertEqual(kirchhoff.Breaker(h),
                     P('eta*(x*y + (x + y)*(z + w))'))

  def testWheelDegreeAndTreeCount(self):
    for n in range(3, 6):
      wheel = spbuild.Wheel(n)
      psi = Psi(wheel)
      self.assertEqual(psi.Degree(), n)
      self.assertEqual(psi.Evaluate({j: 1 for j in wheel.EdgeIds()}),
                       wheel.SpanningTreeCount())

  def testRandomCorpusAgainstLaplacian(self):
    for g in util.RandomCorpus(200, 12, seed=7):
      psi = Psi(g)
      self.assertEqual(psi.Evaluate({j: 1 for j in g.EdgeIds()}),
                       g.SpanningTreeCount())
      self.assertTrue(psi.EulerIdentityHolds())
      self.assertEqual(psi.Degree(), g.LoopNumber())
      self.assertTrue(psi.IsMultilinear())

  def testRandomCorpusAgainstEnumeration(self):
    for g in util.RandomCorpus(60, 10, seed=11):
      self.assertEqual(Psi(g), util.SpanningTreeOracle(g))

  def testContractionDeletion(self):
    for g in util.RandomCorpus(80, 9, seed=3):
      for edge in g.Edges():
        if edge.IsSelfLoop() or g.IsBridge(edge.id):
          continue
        t = poly.Var(edge.id)
        self.assertEqual(
            Psi(g), t * Psi(g.DeleteEdge(edge.id)) +
            Psi(g.ContractEdge(edge.id)))
        self.assertEqual(Psi(g).Substitute(edge.id, 0),
                         Psi(g.ContractEdge(edge.id)))

  def testFactorByBlocks(self):
    g = graph_lib.Multigraph(
        ['u', 'v', 'w'], [('a', 'u', 'v'), ('b', 'u', 'v'), ('c', 'v', 'w'),
                          ('l', 'w', 'w')])
    blocks = kirchhoff.FactorByBlocks(g)
    self.assertEqual([b.polynomial for b in blocks],
                     [P('a + b'), P('1'), P('l')])
    self.assertEqual(poly.Product(b.polynomial for b in blocks), Psi(g))

  def testFactorByBlocksRejectsDisconnected(self):
    g = graph_lib.Multigraph(['u', 'v', 'w'], [('a', 'u', 'v')])
    self.assertRaises(errors.DisconnectedGraphError, kirchhoff.FactorByBlocks,
                      g)

  def testIdentifiedKirchhoff(self):
    path = spbuild.Path(2).graph
    self.assertEqual(kirchhoff.IdentifiedKirchhoff(path, [{'s', 't'}]),
                     P('e1 + e2'))

  def testBreakerCoprimality(self):
    self.assertTrue(kirchhoff.BreakerCoprimalityCertified(util.ExampleH()))
    loop = graph_lib.Multigraph(['s', 't'], [('a', 's', 't'),
                                             ('l', 't', 't')])
    self.assertFalse(kirchhoff.BreakerCoprimalityCertified(
        graph_lib.SourceTerminalGraph(loop, 's', 't')))

  def testBreakerCoprimalityFlagsOffRouteBlock(self):
    g = graph_lib.Multigraph(
        ['s', 't', 'p', 'q'],
        [('a', 's', 't'), ('b', 't', 'p'), ('c', 'p', 'q'), ('d', 'q', 't')])
    st_graph = graph_lib.SourceTerminalGraph(g, 's', 't')
    self.assertFalse(kirchhoff.BreakerCoprimalityCertified(st_graph))
    self.assertEqual(Psi(g), P('b + c + d'))

  def testJoinPolynomialsMatchRealization(self):
    tree = util.ExampleHTree()
    psi, breaker = kirchhoff.TreePolynomials(tree)
    realized = tree.Realize()
    self.assertEqual(psi, Psi(realized.graph))
    self.assertEqual(breaker, kirchhoff.Breaker(realized))

  @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0))
  @settings(max_examples=40, deadline=None)
  def testTreePolynomialsForEnumeratedTrees(self, size, pick):
    trees = spbuild.EnumerateTrees(size)
    tree = trees[pick % len(trees)]
    psi, breaker = kirchhoff.TreePolynomials(tree)
    realized = tree.Realize()
    self.assertEqual(psi, Psi(realized.graph))
    self.assertEqual(breaker, kirchhoff.Breaker(realized))

  def testJoinPolynomialsRejectsUnknownKind(self):
    one = (poly.Polynomial.One(), poly.Var('a'))
    self.assertRaises(errors.TreeError, kirchhoff.JoinPolynomials, one, one,
                      'Q')


if __name__ == '__main__':
  unittest.main()
