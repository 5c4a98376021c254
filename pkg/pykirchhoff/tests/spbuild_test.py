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

"""Tests for pykirchhoff.spbuild."""

import unittest

from pykirchhoff import errors
from pykirchhoff import graph as graph_lib
from pykirchhoff import kirchhoff
from pykirchhoff import poly
from pykirchhoff import spbuild
from pykirchhoff.tests.lib import util

SPTree = spbuild.SPTree
Leaf = SPTree.Leaf


class SPTreeTest(unittest.TestCase):

  def testValidation(self):
    self.assertRaises(errors.TreeError, SPTree, spbuild.LEAF)
    self.assertRaises(errors.TreeError, SPTree.Series, Leaf('a'))
    self.assertRaises(errors.TreeError, SPTree.Parallel, Leaf('a'), Leaf('a'))
    self.assertRaises(errors.TreeError, SPTree, 'Q', children=[Leaf('a'),
                                                               Leaf('b')])

  def testPrintsGrammar(self):
    self.assertEqual(str(util.ExampleHTree()), util.EXAMPLE_H_EXPRESSION)

  def testDualSwapsKinds(self):
    dual = SPTree.Series(Leaf('a'), Leaf('b')).Dual()
    self.assertEqual(str(dual), '(P a b)')
    self.assertEqual(spbuild.UpsilonDual(dual), SPTree.Series(Leaf('a'),
                                                              Leaf('b')))

  def testRealize(self):
    realized = util.ExampleHTree().Realize()
    self.assertEqual((realized.source, realized.terminal), ('s', 't'))
    self.assertEqual(len(realized.graph.Vertices()), 4)
    self.assertEqual(util.ExampleHTree().VertexCount(), 4)
    self.assertEqual(sorted(realized.EdgeIds()),
                     ['eta', 'w', 'x', 'y', 'z'])

  def testIsPath(self):
    self.assertTrue(spbuild.PathTree(['a', 'b', 'c']).IsPath())
    self.assertFalse(spbuild.CycleTree(['a'], ['b']).IsPath())

  def testFlattenSplicesSameKind(self):
    inner = SPTree.Series(Leaf('a'), Leaf('b'))
    flat = spbuild.Flatten(spbuild.SERIES, [inner, Leaf('c')])
    self.assertEqual(str(flat), '(S a b c)')
    self.assertEqual(spbuild.Flatten(spbuild.PARALLEL, [Leaf('a')]),
                     Leaf('a'))


class JoinTest(unittest.TestCase):

  def testSeriesAndParallelJoin(self):
    series = spbuild.Join(spbuild.SingleEdge('a'), spbuild.SingleEdge('b'),
                          spbuild.SERIES)
    self.assertTrue(series.IsPath())
    parallel = spbuild.Join(spbuild.SingleEdge('a'), spbuild.SingleEdge('b'),
                            spbuild.PARALLEL)
    self.assertEqual(parallel.graph.LoopNumber(), 1)

  def testJoinRejectsSharedEdges(self):
    self.assertRaises(errors.GraphError, spbuild.Join,
                      spbuild.SingleEdge('a'), spbuild.SingleEdge('a'),
                      spbuild.SERIES)

  def testRestrictedJoins(self):
    cycle = spbuild.Cycle(1, 1)
    for kind, loops in ((spbuild.STAR_EDGE, 2), (spbuild.EDGE_SERIES, 1),
                        (spbuild.SERIES_EDGE, 1)):
      joined = spbuild.RestrictedJoin(cycle, 'e', kind)
      self.assertEqual(joined.graph.LoopNumber(), loops)
    self.assertRaises(errors.TreeError, spbuild.RestrictedJoin, cycle, 'e',
                      'nope')

  def testJoinMatchesPolynomialIdentities(self):
    first, second = spbuild.Cycle(2, 1), util.ExampleH()
    for kind in (spbuild.SERIES, spbuild.PARALLEL):
      joined = spbuild.Join(first, second, kind)
      expected = kirchhoff.JoinPolynomials(
          (kirchhoff.KirchhoffPolynomial(first.graph),
           kirchhoff.Breaker(first)),
          (kirchhoff.KirchhoffPolynomial(second.graph),
           kirchhoff.Breaker(second)), kind)
      self.assertEqual((kirchhoff.KirchhoffPolynomial(joined.graph),
                        kirchhoff.Breaker(joined)), expected)


class FamilyTest(unittest.TestCase):

  def testWheelNaming(self):
    wheel = spbuild.Wheel(4)
    self.assertEqual(sorted(wheel.EdgeIds()),
                     ['r1', 'r2', 'r3', 'r4', 's1', 's2', 's3', 's4'])
    self.assertEqual(wheel.Degree('h'), 4)
    self.assertEqual(wheel.GetEdge('r4').Ends(), ('v1', 'v4'))
    self.assertRaises(errors.GraphError, spbuild.Wheel, 2)

  def testRimContractionGivesSmallerWheel(self):
    # Contracting r1 doubles s1/s2; deleting one of them leaves W3.
    wheel = spbuild.Wheel(4).ContractEdge('r1').DeleteEdge('s2')
    self.assertEqual(kirchhoff.KirchhoffPolynomial(wheel).Degree(), 3)
    self.assertEqual(wheel.SpanningTreeCount(),
                     spbuild.Wheel(3).SpanningTreeCount())

  def testPathAndCycle(self):
    self.assertEqual(spbuild.Path(3).EdgeIds(), ('e1', 'e2', 'e3'))
    cycle = spbuild.Cycle(2, 3)
    self.assertEqual(sorted(cycle.EdgeIds()),
                     ['x1', 'x2', 'y1', 'y2', 'y3'])
    self.assertEqual(kirchhoff.KirchhoffPolynomial(cycle.graph),
                     poly.VarSum(cycle.EdgeIds()))
    self.assertRaises(errors.GraphError, spbuild.Path, 0)

  def testFamilyDispatch(self):
    self.assertEqual(spbuild.Family('wheel', 5), spbuild.Wheel(5))
    self.assertRaises(errors.GraphError, spbuild.Family, 'star', 3)

  def testRandomMultigraphIsConnectedAndSeeded(self):
    first = spbuild.RandomMultigraph(5, 9, util.Rng(1))
    second = spbuild.RandomMultigraph(5, 9, util.Rng(1))
    self.assertEqual(first, second)
    self.assertTrue(first.IsConnected())
    self.assertEqual(len(first.Edges()), 9)
    no_loops = spbuild.RandomMultigraph(4, 12, util.Rng(2), loops=False)
    self.assertFalse(any(e.IsSelfLoop() for e in no_loops.Edges()))
    self.assertRaises(errors.GraphError, spbuild.RandomMultigraph, 5, 3,
                      util.Rng())


class ArcDiagramTest(unittest.TestCase):

  def testValidation(self):
    self.assertRaises(errors.TreeError, spbuild.ArcDiagram, ['a'])
    self.assertRaises(errors.TreeError, spbuild.ArcDiagram,
                      ['a', 'b', 'c', 'd'], [(0, 2, 'x'), (1, 3, 'y')])
    self.assertRaises(errors.TreeError, spbuild.ArcDiagram, ['a', 'b'],
                      [(0, 2, 'x')])

  def testToTree(self):
    diagram = spbuild.ArcDiagram(['a', 'b', 'c'], [(0, 2, 'z'), (0, 2, 'w')],
                                 spine_edges=['x', 'y'])
    self.assertTrue(diagram.HasOuterArc())
    self.assertFalse(diagram.IsPath())
    self.assertEqual(str(diagram.ToTree()), '(P (S x y) z w)')

  def testNestedArcs(self):
    diagram = spbuild.ArcDiagram(['a', 'b', 'c', 'd'],
                                 [(1, 3, 'q'), (0, 3, 'r')])
    self.assertEqual(str(diagram.ToTree()), '(P (S p1 (P (S p2 p3) q)) r)')

  def testTreeMatchesGraph(self):
    diagram = spbuild.ArcDiagram(['a', 'b', 'c', 'd'],
                                 [(0, 2, 'q'), (0, 3, 'r')])
    st_graph = spbuild.ArcDiagramToGraph(diagram)
    realized = diagram.ToTree().Realize()
    self.assertEqual(kirchhoff.KirchhoffPolynomial(st_graph.graph),
                     kirchhoff.KirchhoffPolynomial(realized.graph))
    self.assertEqual(kirchhoff.Breaker(st_graph), kirchhoff.Breaker(realized))


class ReplaceAndTransformTest(unittest.TestCase):

  def testReplaceEdge(self):
    replaced = spbuild.ReplaceEdge(util.Triangle(), 'a', spbuild.Cycle(1, 1))
    self.assertEqual(sorted(replaced.EdgeIds()), ['b', 'c', 'x1', 'y1'])
    self.assertEqual(replaced.LoopNumber(), 2)
    self.assertEqual(replaced.GetEdge('x1').Ends(), ('u', 'v'))

  def testReplaceRenamesInnerVertices(self):
    replaced = spbuild.ReplaceEdge(util.Triangle(), 'a', spbuild.Path(2))
    self.assertIn('a:v0', replaced.Vertices())

  def testReplaceRejectsLoopsAndCollisions(self):
    loop = graph_lib.Multigraph(['u'], [('l', 'u', 'u')])
    self.assertRaises(errors.GraphError, spbuild.ReplaceEdge, loop, 'l',
                      spbuild.Path(1))
    self.assertRaises(errors.GraphError, spbuild.ReplaceEdge,
                      util.Triangle(), 'a', spbuild.SingleEdge('b'))

  def testDeltaToY(self):
    k4 = spbuild.Wheel(3)
    star = spbuild.DeltaToY(k4, ['r1', 'r2', 'r3'])
    self.assertEqual(len(star.Vertices()), 5)
    self.assertEqual(sorted(star.EdgeIds()), sorted(k4.EdgeIds()))
    self.assertEqual(star.GetEdge('r1').Ends(), ('v3', 'y0'))
    self.assertRaises(errors.GraphError, spbuild.DeltaToY, k4,
                      ['r1', 'r2', 's1'])


class EnumerationTest(unittest.TestCase):

  def testCountsAreSeriesParallelNetworkNumbers(self):
    counts = [len(spbuild.EnumerateTrees(n)) for n in range(1, 7)]
    self.assertEqual(counts, [1, 2, 4, 10, 24, 66])

  def testLeavesAreLabelledInOrder(self):
    for tree in spbuild.EnumerateTrees(4):
      self.assertEqual(tree.Leaves(), ['e1', 'e2', 'e3', 'e4'])

  def testTreesAreDistinct(self):
    trees = spbuild.EnumerateTrees(5)
    self.assertEqual(len(set(str(t) for t in trees)), len(trees))
    self.assertEqual(spbuild.EnumerateTrees(0), [])


if __name__ == '__main__':
  unittest.main()
