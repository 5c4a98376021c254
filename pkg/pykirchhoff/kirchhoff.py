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

"""Kirchhoff polynomials of multigraphs.

Psi_G is the sum over spanning trees T of G of the product of the variables
of the edges outside T.  It is computed by deletion-contraction, pivoting on
a parallel class of maximal multiplicity so that a whole class is resolved in
one step:

  Psi_G = (prod_P t) Psi_{G-P} + sum_i (prod_{P-i} t) Psi_{G/i}

Self-loops factor out as their own variables and bridges contribute 1.  The
recursion works on dense integer vertex labels internally; results are keyed
by the caller's edge ids.
"""

import collections
import logging

from pykirchhoff import errors
from pykirchhoff import poly
from pykirchhoff import spbuild

logger = logging.getLogger('pykirchhoff.kirchhoff')

KirchhoffResult = collections.namedtuple('KirchhoffResult',
                                         ['polynomial', 'graph_loop_number'])

Block = collections.namedtuple('Block', ['edges', 'polynomial'])


def _Connected(count, edges):
  parent = list(range(count))

  def Find(i):
    while parent[i] != i:
      parent[i] = parent[parent[i]]
      i = parent[i]
    return i

  components = count
  for _, a, b in edges:
    root_a, root_b = Find(a), Find(b)
    if root_a != root_b:
      parent[root_a] = root_b
      components -= 1
  return components == 1


def _Merge(vertex, keep, drop):
  # keep < drop, so indices above drop shift down by one.
  if vertex == drop:
    return keep
  return vertex - 1 if vertex > drop else vertex


def _Complements(count, edges):
  """Lists the complements of all spanning trees as frozensets of edge ids."""
  loops = frozenset(edge_id for edge_id, a, b in edges if a == b)
  rest = [edge for edge in edges if edge[1] != edge[2]]
  if not _Connected(count, rest):
    return []
  if count == 1:
    return [loops]

  classes = collections.OrderedDict()
  for edge_id, a, b in rest:
    classes.setdefault((min(a, b), max(a, b)), []).append(edge_id)
  (keep, drop), members = max(classes.items(), key=lambda item: len(item[1]))
  members = frozenset(members)
  others = [edge for edge in rest if edge[0] not in members]

  result = [c | members for c in _Complements(count, others)]
  merged = [(edge_id, _Merge(a, keep, drop), _Merge(b, keep, drop))
            for edge_id, a, b in others]
  for complement in _Complements(count - 1, merged):
    for member in members:
      result.append(complement | (members - {member}))
  return [c | loops for c in result]


def _FromComplements(complements):
  return poly.Polynomial(
      {tuple(sorted((edge_id, 1) for edge_id in c)): 1 for c in complements})


def Kirchhoff(graph):
  """Computes Psi_G.

  Args:
    graph: a Multigraph.

  Returns:
    A KirchhoffResult; the polynomial is 0 when the graph is disconnected.
  """
  index = {v: i for i, v in enumerate(graph.Vertices())}
  edges = tuple((e.id, index[e.u], index[e.v]) for e in graph.Edges())
  complements = _Complements(len(index), edges)
  logger.debug('Kirchhoff polynomial of %d edges has %d terms',
               len(edges), len(complements))
  return KirchhoffResult(_FromComplements(complements), graph.LoopNumber())


def KirchhoffPolynomial(graph):
  return Kirchhoff(graph).polynomial


def Breaker(st_graph):
  """Psi of the source-terminal graph with source and terminal identified."""
  return KirchhoffPolynomial(st_graph.Identified())


def IdentifiedKirchhoff(graph, parts):
  return KirchhoffPolynomial(graph.IdentifyVertices(parts))


def FactorByBlocks(graph):
  """Splits Psi_G into one factor per biconnected component.

  Self-loops are blocks of their own with factor t_e and bridges contribute
  the factor 1.

  Raises:
    DisconnectedGraphError: if the graph is not connected.
  """
  if not graph.IsConnected():
    raise errors.DisconnectedGraphError('Block factorization needs a '
                                        'connected graph')
  blocks = []
  for block in graph.BiconnectedComponents():
    edge_ids = sorted(block)
    if len(edge_ids) == 1 and graph.IsSelfLoop(edge_ids[0]):
      factor = poly.Var(edge_ids[0])
    else:
      factor = KirchhoffPolynomial(graph.EdgeSubgraph(edge_ids))
    blocks.append(Block(block, factor))
  return blocks


def BreakerCoprimalityCertified(st_graph):
  """Structural check that Psi_H and its breaker share no factor.

  A common factor of Psi_H and Psi of H with s,t identified can only come
  from a self-loop or from a nontrivial block that survives the
  identification unchanged, i.e. a block off every s-t route.

  Returns:
    True when neither obstruction is present.
  """
  graph = st_graph.graph
  if not graph.IsConnected():
    raise errors.DisconnectedGraphError('Coprimality needs a connected graph')
  if any(e.IsSelfLoop() for e in graph.Edges()):
    return False
  identified_blocks = set(st_graph.Identified().BiconnectedComponents())
  marks = {st_graph.source, st_graph.terminal}
  for block in graph.BiconnectedComponents():
    if len(block) < 2:
      continue
    vertices = {v for edge_id in block for v in graph.GetEdge(edge_id).Ends()}
    if marks <= vertices:
      continue
    if block in identified_blocks:
      logger.debug('Block %s survives identification', sorted(block))
      return False
  return True


def JoinPolynomials(first, second, kind):
  """Combines (Psi, breaker) pairs along a series or parallel join."""
  psi, breaker = first
  other_psi, other_breaker = second
  if kind == spbuild.SERIES:
    return (psi * other_psi, breaker * other_psi + psi * other_breaker)
  if kind == spbuild.PARALLEL:
    return (psi * other_breaker + breaker * other_psi, breaker * other_breaker)
  raise errors.TreeError('Unknown join kind %r' % (kind,))


def TreePolynomials(tree):
  """(Psi, breaker) of the graph realized by a decomposition tree."""
  if tree.kind == spbuild.LEAF:
    return (poly.Polynomial.One(), poly.Var(tree.edge))
  children = [TreePolynomials(child) for child in tree.children]
  result = children[0]
  for child in children[1:]:
    result = JoinPolynomials(result, child, tree.kind)
  return result
