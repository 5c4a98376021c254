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

"""Multigraphs and the graph-theoretic primitives used by the deciders.

Multigraph values are immutable: every operation returns a new graph.  Vertex
and edge ids are opaque strings; contraction keeps the lexicographically
smaller endpoint name and identification names each merged vertex after the
smallest member of its part.  Connectivity questions are answered by networkx
on the underlying simple graph, with edge multiplicity handled here.
"""

import collections
import itertools
import logging

import networkx as nx
import sympy

from pykirchhoff import errors

logger = logging.getLogger('pykirchhoff.graph')

ConnectivityReport = collections.namedtuple('ConnectivityReport', [
    'components', 'bridges', 'self_loops', 'cut_vertices',
    'biconnected_components', 'two_edge_cuts'
])


class Edge(collections.namedtuple('Edge', ['id', 'u', 'v'])):
  """A labelled edge; the endpoint pair is unordered."""

  __slots__ = ()

  def IsSelfLoop(self):
    return self.u == self.v

  def Ends(self):
    return tuple(sorted((self.u, self.v)))

  def Other(self, vertex):
    return self.v if vertex == self.u else self.u


class EdgeClass(object):
  """The case split on an edge of a connected graph."""
  SELF_LOOP = 'SelfLoop'
  BRIDGE = 'Bridge'
  TREE_COMPLEMENT = 'TreeComplement'
  REGULAR = 'Regular'

  ALL = (SELF_LOOP, BRIDGE, TREE_COMPLEMENT, REGULAR)


class Multigraph(object):
  """A finite multigraph with labelled edges.

  Self-loops and parallel edges are allowed.  The empty graph is not.
  """

  def __init__(self, vertices, edges):
    self._vertices = tuple(sorted(set(vertices)))
    if not self._vertices:
      raise errors.GraphError('A multigraph needs at least one vertex')
    self._edges = tuple(Edge(*edge) for edge in edges)
    self._index = {}
    known = set(self._vertices)
    for edge in self._edges:
      if edge.id in self._index:
        raise errors.GraphError('Duplicate edge id %r' % edge.id)
      if edge.u not in known or edge.v not in known:
        raise errors.GraphError('Edge %r has an endpoint outside the graph' %
                                edge.id)
      self._index[edge.id] = edge

  def __eq__(self, other):
    if not isinstance(other, Multigraph):
      return NotImplemented
    return (self._vertices == other._vertices and
            self._Signature() == other._Signature())

  def __hash__(self):
    return hash((self._vertices, frozenset(self._Signature())))

  def __repr__(self):
    return 'Multigraph(vertices=%r, edges=%r)' % (
        list(self._vertices), [tuple(e) for e in self._edges])

  def _Signature(self):
    return {(e.id,) + e.Ends() for e in self._edges}

  # Accessors.

  def Vertices(self):
    return self._vertices

  def Edges(self):
    return self._edges

  def EdgeIds(self):
    return tuple(e.id for e in self._edges)

  def HasEdge(self, edge_id):
    return edge_id in self._index

  def GetEdge(self, edge_id):
    try:
      return self._index[edge_id]
    except KeyError:
      raise errors.UnknownEdgeError(edge_id)

  def Degree(self, vertex):
    return sum((e.u == vertex) + (e.v == vertex) for e in self._edges)

  def IncidentEdges(self, vertex):
    return [e for e in self._edges if vertex in (e.u, e.v)]

  def ParallelClasses(self):
    """Groups non-loop edge ids by their endpoint pair, in edge order."""
    classes = collections.OrderedDict()
    for edge in self._edges:
      if not edge.IsSelfLoop():
        classes.setdefault(edge.Ends(), []).append(edge.id)
    return list(classes.values())

  # Constructions.

  def DeleteEdge(self, edge_id):
    self.GetEdge(edge_id)
    return Multigraph(self._vertices,
                      [e for e in self._edges if e.id != edge_id])

  def DeleteEdges(self, edge_ids):
    edge_ids = set(edge_ids)
    for edge_id in edge_ids:
      self.GetEdge(edge_id)
    return Multigraph(self._vertices,
                      [e for e in self._edges if e.id not in edge_ids])

  def ContractEdge(self, edge_id):
    edge = self.GetEdge(edge_id)
    if edge.IsSelfLoop():
      raise errors.GraphError('Cannot contract self-loop %r' % edge_id)
    keep, drop = edge.Ends()
    return self.DeleteEdge(edge_id).RenameVertices({drop: keep})

  def IdentifyVertices(self, parts):
    """Merges each part to a single vertex named after its smallest member."""
    mapping = {}
    for part in parts:
      part = set(part)
      for vertex in part:
        if vertex not in self._vertices:
          raise errors.GraphError('Unknown vertex %r' % vertex)
        if vertex in mapping:
          raise errors.GraphError('Vertex %r lies in two parts' % vertex)
        mapping[vertex] = min(part)
    return self.RenameVertices(mapping)

  def RenameVertices(self, mapping):
    """Renames vertices; distinct vertices mapped to one name are merged."""
    rename = lambda v: mapping.get(v, v)
    return Multigraph([rename(v) for v in self._vertices],
                      [(e.id, rename(e.u), rename(e.v)) for e in self._edges])

  def RenameEdges(self, mapping):
    return Multigraph(self._vertices,
                      [(mapping.get(e.id, e.id), e.u, e.v)
                       for e in self._edges])

  def AddEdge(self, edge_id, u, v):
    if edge_id in self._index:
      raise errors.GraphError('Duplicate edge id %r' % edge_id)
    return Multigraph(self._vertices + (u, v), self._edges + ((edge_id, u, v),))

  def Union(self, other):
    """Union of two graphs; shared vertex names are glued."""
    clash = set(self._index).intersection(other.EdgeIds())
    if clash:
      raise errors.GraphError('Edge id collision: %s' % sorted(clash))
    return Multigraph(self._vertices + other.Vertices(),
                      self._edges + other.Edges())

  def EdgeSubgraph(self, edge_ids):
    """The subgraph spanned by edge_ids (only their endpoints kept)."""
    edges = [self.GetEdge(edge_id) for edge_id in edge_ids]
    if not edges:
      raise errors.GraphError('Edge subgraph needs at least one edge')
    return Multigraph([v for e in edges for v in (e.u, e.v)], edges)

  # Connectivity.

  def ToNetworkx(self):
    """Exports as a networkx MultiGraph whose edge keys are edge ids."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(self._vertices)
    for edge in self._edges:
      graph.add_edge(edge.u, edge.v, key=edge.id)
    return graph

  def _SimpleGraph(self):
    graph = nx.Graph()
    graph.add_nodes_from(self._vertices)
    graph.add_edges_from(e.Ends() for e in self._edges if not e.IsSelfLoop())
    return graph

  def ComponentCount(self):
    return nx.number_connected_components(self._SimpleGraph())

  def IsConnected(self):
    return self.ComponentCount() == 1

  def LoopNumber(self):
    return len(self._edges) - len(self._vertices) + self.ComponentCount()

  def IsSelfLoop(self, edge_id):
    return self.GetEdge(edge_id).IsSelfLoop()

  def Bridges(self):
    simple_bridges = {tuple(sorted(pair))
                      for pair in nx.bridges(self._SimpleGraph())}
    return [ids[0] for ids in self.ParallelClasses()
            if len(ids) == 1 and self._index[ids[0]].Ends() in simple_bridges]

  def IsBridge(self, edge_id):
    return edge_id in self.Bridges()

  def CutVertices(self):
    return sorted(nx.articulation_points(self._SimpleGraph()))

  def BiconnectedComponents(self):
    """Partitions the edges into blocks; each self-loop is its own block."""
    by_ends = {}
    for ids in self.ParallelClasses():
      by_ends[self._index[ids[0]].Ends()] = ids
    blocks = []
    for pairs in nx.biconnected_component_edges(self._SimpleGraph()):
      ids = []
      for pair in pairs:
        ids.extend(by_ends[tuple(sorted(pair))])
      blocks.append(frozenset(ids))
    blocks.extend(frozenset([e.id]) for e in self._edges if e.IsSelfLoop())
    return sorted(blocks, key=lambda block: sorted(block))

  def TwoEdgeCuts(self):
    """Pairs of non-bridge, non-loop edges whose removal disconnects G."""
    base = self.ComponentCount()
    bridges = set(self.Bridges())
    candidates = [e for e in self._edges
                  if not e.IsSelfLoop() and e.id not in bridges]
    cuts = []
    for first, second in itertools.combinations(candidates, 2):
      remainder = self.DeleteEdges([first.id, second.id])
      if remainder.ComponentCount() > base:
        cuts.append(tuple(sorted((first.id, second.id))))
    return cuts

  def ConnectivitySuite(self):
    components = sorted(
        (frozenset(c) for c in nx.connected_components(self._SimpleGraph())),
        key=sorted)
    return ConnectivityReport(
        components=components,
        bridges=self.Bridges(),
        self_loops=[e.id for e in self._edges if e.IsSelfLoop()],
        cut_vertices=self.CutVertices(),
        biconnected_components=self.BiconnectedComponents(),
        two_edge_cuts=self.TwoEdgeCuts())

  def ClassifyEdge(self, edge_id):
    edge = self.GetEdge(edge_id)
    if not self.IsConnected():
      raise errors.DisconnectedGraphError(
          'Cannot classify an edge of a disconnected graph')
    if edge.IsSelfLoop():
      return EdgeClass.SELF_LOOP
    if self.IsBridge(edge_id):
      return EdgeClass.BRIDGE
    if len(self._edges) == len(self._vertices):
      # Connected with one cycle through e: G minus e is a spanning tree.
      return EdgeClass.TREE_COMPLEMENT
    return EdgeClass.REGULAR

  def SpanningTreeCount(self):
    """Counts spanning trees with an exact Laplacian cofactor determinant."""
    if not self.IsConnected():
      return 0
    if len(self._vertices) == 1:
      return 1
    position = {v: i for i, v in enumerate(self._vertices)}
    size = len(self._vertices)
    laplacian = sympy.zeros(size, size)
    for edge in self._edges:
      if edge.IsSelfLoop():
        continue
      i, j = position[edge.u], position[edge.v]
      laplacian[i, i] += 1
      laplacian[j, j] += 1
      laplacian[i, j] -= 1
      laplacian[j, i] -= 1
    return int(laplacian[1:, 1:].det(method='bareiss'))


class SourceTerminalGraph(object):
  """A multigraph with two distinct marked vertices."""

  def __init__(self, graph, source, terminal):
    if source == terminal:
      raise errors.GraphError('Source and terminal must differ')
    for vertex in (source, terminal):
      if vertex not in graph.Vertices():
        raise errors.GraphError('Marked vertex %r not in graph' % vertex)
    self.graph = graph
    self.source = source
    self.terminal = terminal

  def __eq__(self, other):
    if not isinstance(other, SourceTerminalGraph):
      return NotImplemented
    return (self.graph == other.graph and self.source == other.source and
            self.terminal == other.terminal)

  def __hash__(self):
    return hash((self.graph, self.source, self.terminal))

  def __repr__(self):
    return 'SourceTerminalGraph(%r, source=%r, terminal=%r)' % (
        self.graph, self.source, self.terminal)

  def EdgeIds(self):
    return self.graph.EdgeIds()

  def Identified(self):
    """The graph with source and terminal merged."""
    return self.graph.IdentifyVertices([{self.source, self.terminal}])

  def IsPath(self):
    """True when the graph is a simple s-t path (every edge a bridge)."""
    graph = self.graph
    if not graph.IsConnected() or graph.LoopNumber():
      return False
    ends = [v for v in graph.Vertices() if graph.Degree(v) == 1]
    return (sorted(ends) == sorted((self.source, self.terminal)) and
            all(graph.Degree(v) <= 2 for v in graph.Vertices()))
