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

"""Tests for pykirchhoff.graph."""

import unittest

from pykirchhoff import errors
from pykirchhoff import graph as graph_lib
from pykirchhoff import spbuild
from pykirchhoff.tests.lib import util

Multigraph = graph_lib.Multigraph
EdgeClass = graph_lib.EdgeClass


def TripleEdge():
  return Multigraph(['u', 'v'], [('a', 'u', 'v'), ('b', 'u', 'v'),
                                 ('c', 'v', 'u')])


class MultigraphTest(unittest.TestCase):

  def testValidation(self):
    self.assertRaises(errors.GraphError, Multigraph, [], [])
    self.assertRaises(errors.GraphError, Multigraph, ['u', 'v'],
                      [('a', 'u', 'v'), ('a', 'v', 'u')])
    self.assertRaises(errors.GraphError, Multigraph, ['u'], [('a', 'u', 'v')])

  def testAccessors(self):
    g = Multigraph(['v', 'u'], [('a', 'u', 'v'), ('l', 'u', 'u')])
    self.assertEqual(g.Vertices(), ('u', 'v'))
    self.assertEqual(g.EdgeIds(), ('a', 'l'))
    self.assertEqual(g.Degree('u'), 3)
    self.assertTrue(g.IsSelfLoop('l'))
    self.assertRaises(errors.UnknownEdgeError, g.GetEdge, 'zz')

  def testEqualityIgnoresEdgeOrientation(self):
    first = Multigraph(['u', 'v'], [('a', 'u', 'v')])
    second = Multigraph(['u', 'v'], [('a', 'v', 'u')])
    self.assertEqual(first, second)
    self.assertEqual(hash(first), hash(second))

  def testContractKeepsSmallerEndpoint(self):
    g = util.Triangle().ContractEdge('a')
    self.assertEqual(g.Vertices(), ('u', 'w'))
    self.assertEqual(sorted(e.Ends() for e in g.Edges()),
                     [('u', 'w'), ('u', 'w')])

  def testContractSelfLoopRaises(self):
    g = Multigraph(['u'], [('l', 'u', 'u')])
    self.assertRaises(errors.GraphError, g.ContractEdge, 'l')

  def testIdentifyVertices(self):
    g = spbuild.Path(3).graph.IdentifyVertices([{'s', 't'}])
    self.assertEqual(len(g.Vertices()), 3)
    self.assertEqual(g.LoopNumber(), 1)
    self.assertRaises(errors.GraphError, util.Triangle().IdentifyVertices,
                      [{'u', 'v'}, {'v', 'w'}])

  def testUnionRejectsSharedEdgeIds(self):
    g = util.Triangle()
    self.assertRaises(errors.GraphError, g.Union, g)

  def testLoopNumber(self):
    self.assertEqual(util.Triangle().LoopNumber(), 1)
    self.assertEqual(TripleEdge().LoopNumber(), 2)
    self.assertEqual(spbuild.Wheel(4).LoopNumber(), 4)
    disconnected = Multigraph(['u', 'v', 'w'], [('a', 'u', 'v')])
    self.assertEqual(disconnected.ComponentCount(), 2)
    self.assertEqual(disconnected.LoopNumber(), 0)

  def testBridgesIgnoreParallelPairs(self):
    g = Multigraph(['u', 'v', 'w'], [('a', 'u', 'v'), ('b', 'u', 'v'),
                                     ('c', 'v', 'w')])
    self.assertEqual(g.Bridges(), ['c'])
    self.assertEqual(g.CutVertices(), ['v'])

  def testBiconnectedComponents(self):
    g = Multigraph(['u', 'v', 'w'], [('a', 'u', 'v'), ('b', 'u', 'v'),
                                     ('c', 'v', 'w'), ('l', 'w', 'w')])
    self.assertEqual(g.BiconnectedComponents(),
                     [frozenset(['a', 'b']), frozenset(['c']),
                      frozenset(['l'])])

  def testTwoEdgeCuts(self):
    self.assertEqual(util.Triangle().TwoEdgeCuts(),
                     [('a', 'b'), ('a', 'c'), ('b', 'c')])
    self.assertEqual(TripleEdge().TwoEdgeCuts(), [])
    theta = spbuild.SPTree.Parallel(
        spbuild.PathTree(['a1', 'a2']), spbuild.PathTree(['b1', 'b2']),
        spbuild.PathTree(['c1', 'c2'])).Realize().graph
    self.assertEqual(len(theta.TwoEdgeCuts()), 3)

  def testConnectivitySuite(self):
    report = spbuild.Wheel(4).ConnectivitySuite()
    self.assertEqual(len(report.components), 1)
    self.assertEqual(report.bridges, [])
    self.assertEqual(report.self_loops, [])
    self.assertEqual(report.cut_vertices, [])
    self.assertEqual(len(report.biconnected_components), 1)

  def testClassifyEdge(self):
    g = Multigraph(['u', 'v', 'w'], [('a', 'u', 'v'), ('b', 'u', 'v'),
                                     ('c', 'v', 'w'), ('l', 'w', 'w')])
    self.assertEqual(g.ClassifyEdge('l'), EdgeClass.SELF_LOOP)
    self.assertEqual(g.ClassifyEdge('c'), EdgeClass.BRIDGE)
    self.assertEqual(g.ClassifyEdge('a'), EdgeClass.REGULAR)
    self.assertEqual(util.Triangle().ClassifyEdge('a'),
                     EdgeClass.TREE_COMPLEMENT)
    disconnected = Multigraph(['u', 'v', 'w'], [('a', 'u', 'v')])
    self.assertRaises(errors.DisconnectedGraphError,
                      disconnected.ClassifyEdge, 'a')

  def testSpanningTreeCount(self):
    self.assertEqual(util.Triangle().SpanningTreeCount(), 3)
    self.assertEqual(spbuild.Wheel(4).SpanningTreeCount(), 45)
    self.assertEqual(TripleEdge().SpanningTreeCount(), 3)

  def testSpanningTreeCountMatchesEnumeration(self):
    for g in util.RandomCorpus(40, 8):
      self.assertEqual(g.SpanningTreeCount(), len(util.SpanningTrees(g)))

  def testToNetworkxKeepsEdgeIdsAsKeys(self):
    nx_graph = TripleEdge().ToNetworkx()
    self.assertEqual(sorted(k for _, _, k in nx_graph.edges(keys=True)),
                     ['a', 'b', 'c'])


class SourceTerminalGraphTest(unittest.TestCase):

  def testValidation(self):
    g = util.Triangle()
    self.assertRaises(errors.GraphError, graph_lib.SourceTerminalGraph, g,
                      'u', 'u')
    self.assertRaises(errors.GraphError, graph_lib.SourceTerminalGraph, g,
                      'u', 'zz')

  def testIsPath(self):
    self.assertTrue(spbuild.Path(3).IsPath())
    self.assertFalse(spbuild.Cycle(1, 1).IsPath())

  def testIdentified(self):
    identified = spbuild.Cycle(2, 1).Identified()
    self.assertEqual(len(identified.Vertices()), 2)


if __name__ == '__main__':
  unittest.main()
