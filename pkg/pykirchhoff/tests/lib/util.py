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

"""Testing utilities for pykirchhoff.

Seeded generators for random connected multigraphs, the worked example
graph used throughout the tests, and a brute-force spanning-tree oracle
that the kernel is cross-checked against.
"""

import itertools
import random

from pykirchhoff import graph as graph_lib
from pykirchhoff import model
from pykirchhoff import poly
from pykirchhoff import spbuild

DEFAULT_SEED = 20240501

EXAMPLE_H_EXPRESSION = '(P (S (P x y) z w) eta)'


def Rng(seed=DEFAULT_SEED):
  return random.Random(seed)


def RandomConnectedMultigraph(rng, max_edges, loops=True, max_vertices=6):
  """A connected multigraph with 1..max_edges edges."""
  edges = rng.randint(1, max_edges)
  vertices = rng.randint(1, min(edges + 1, max_vertices))
  if vertices == 1 and not loops:
    vertices = 2
  return spbuild.RandomMultigraph(vertices, edges, rng, loops=loops)


def RandomCorpus(count, max_edges, seed=DEFAULT_SEED, loops=True):
  rng = Rng(seed)
  return [RandomConnectedMultigraph(rng, max_edges, loops=loops)
          for _ in range(count)]


def RandomRegularInstance(rng, max_edges, max_vertices=6):
  """A random connected multigraph and one of its regular edges."""
  while True:
    graph = RandomConnectedMultigraph(rng, max_edges,
                                      max_vertices=max_vertices)
    regular = [e for e in graph.EdgeIds()
               if graph.ClassifyEdge(e) == graph_lib.EdgeClass.REGULAR]
    if regular:
      return graph, rng.choice(regular)


def Prefixed(graph, prefix):
  """Copy of graph with every vertex and edge name prefixed."""
  return (graph.RenameVertices({v: prefix + v for v in graph.Vertices()})
          .RenameEdges({e: prefix + e for e in graph.EdgeIds()}))


def RandomTree(rng, max_edges, prefix='e'):
  """A random decomposition tree with 1..max_edges leaves."""
  n = rng.randint(1, max_edges)
  return rng.choice(spbuild.EnumerateTrees(n, prefix=prefix))


def ExampleHTree():
  leaf = spbuild.SPTree.Leaf
  return spbuild.SPTree.Parallel(
      spbuild.SPTree.Series(spbuild.SPTree.Parallel(leaf('x'), leaf('y')),
                            leaf('z'), leaf('w')),
      leaf('eta'))


def ExampleH():
  return ExampleHTree().Realize()


def ExampleHCertificate():
  """The hand-written S(H, eta) certificate with B = 0 and C = y."""
  p = poly.Polynomial.FromString
  return model.SCertificate(
      'eta',
      {'x': p('1/2*y*z + 1/2*y*w - 1/2*y*eta'),
       'y': p('x*y + x*z + x*w + x*eta + 1/2*y*z + 1/2*y*w + 3/2*y*eta'),
       'z': p('0'),
       'w': p('-x*y - x*z - x*w - x*eta - 3/2*y*z - 3/2*y*w + 1/2*y*eta'
              ' - z^2 - 2*z*w - w^2')},
      poly.Polynomial.Zero(), p('y'))


def Triangle():
  return graph_lib.Multigraph(['u', 'v', 'w'], [('a', 'u', 'v'),
                                                ('b', 'v', 'w'),
                                                ('c', 'w', 'u')])


def DoubleEdgeCertificate():
  """T of the double edge x, y: A_x = xy, A_y = 0, C = y."""
  x, y = poly.Var('x'), poly.Var('y')
  return model.TCertificate({'x': x * y, 'y': poly.Polynomial.Zero()}, y)


def _IsSpanningTree(vertex_count, index, edges):
  parent = list(range(vertex_count))

  def Find(i):
    while parent[i] != i:
      parent[i] = parent[parent[i]]
      i = parent[i]
    return i

  for _, u, v in edges:
    a, b = Find(index[u]), Find(index[v])
    if a == b:
      return False
    parent[a] = b
  return True


def SpanningTrees(graph):
  """Edge id sets of all spanning trees, by filtering edge subsets."""
  vertices = graph.Vertices()
  index = {v: i for i, v in enumerate(vertices)}
  edges = [(e.id, e.u, e.v) for e in graph.Edges()]
  trees = []
  for subset in itertools.combinations(edges, len(vertices) - 1):
    if _IsSpanningTree(len(vertices), index, subset):
      trees.append(frozenset(edge_id for edge_id, _, _ in subset))
  return trees


def SpanningTreeOracle(graph):
  """Psi_G as the sum over spanning trees of the complement monomials."""
  all_ids = set(graph.EdgeIds())
  return poly.Sum(poly.Product(poly.Var(j) for j in sorted(all_ids - tree))
                  for tree in SpanningTrees(graph))
