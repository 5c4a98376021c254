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

"""Series-parallel construction toolkit.

Source-terminal graphs are combined by series and parallel joins; a
decomposition tree (SPTree) records a join expression with edges at the
leaves, and its dual swaps every series node with a parallel one.  The module
also builds the named families (paths, cycles, wheels), graphs drawn as
non-crossing arc diagrams, edge replacement and the Delta-Y transform.
"""

import itertools
import logging

from pykirchhoff import errors
from pykirchhoff import graph as graph_lib

logger = logging.getLogger('pykirchhoff.spbuild')

LEAF = 'leaf'
SERIES = 'S'
PARALLEL = 'P'

STAR_EDGE = 'star_e'
EDGE_SERIES = 'e_series'
SERIES_EDGE = 'series_e'


def _Opposite(kind):
  return PARALLEL if kind == SERIES else SERIES


class SPTree(object):
  """A rooted n-ary decomposition tree of a series-parallel graph.

  Leaves carry edge ids.  Series nodes keep their children in order; the
  order of parallel children only affects vertex naming on realization.
  """

  def __init__(self, kind, edge=None, children=()):
    if kind == LEAF:
      if not edge or children:
        raise errors.TreeError('A leaf needs an edge id and no children')
    elif kind in (SERIES, PARALLEL):
      if len(children) < 2:
        raise errors.TreeError('%s node needs at least two children' % kind)
      if not all(isinstance(child, SPTree) for child in children):
        raise errors.TreeError('Children must be SPTree nodes')
    else:
      raise errors.TreeError('Unknown node kind %r' % (kind,))
    self.kind = kind
    self.edge = edge
    self.children = tuple(children)
    leaves = self.Leaves()
    if len(set(leaves)) != len(leaves):
      raise errors.TreeError('Leaf edge ids must be distinct')

  @staticmethod
  def Leaf(edge):
    return SPTree(LEAF, edge=edge)

  @staticmethod
  def Series(*children):
    return SPTree(SERIES, children=children)

  @staticmethod
  def Parallel(*children):
    return SPTree(PARALLEL, children=children)

  def __eq__(self, other):
    if not isinstance(other, SPTree):
      return NotImplemented
    return (self.kind, self.edge, self.children) == (other.kind, other.edge,
                                                     other.children)

  def __hash__(self):
    return hash((self.kind, self.edge, self.children))

  def __str__(self):
    if self.kind == LEAF:
      return self.edge
    return '(%s %s)' % (self.kind, ' '.join(str(c) for c in self.children))

  def __repr__(self):
    return 'SPTree(%r)' % str(self)

  def IsLeaf(self):
    return self.kind == LEAF

  def Leaves(self):
    if self.kind == LEAF:
      return [self.edge]
    return [leaf for child in self.children for leaf in child.Leaves()]

  def IsPath(self):
    if self.kind == LEAF:
      return True
    return self.kind == SERIES and all(c.IsPath() for c in self.children)

  def VertexCount(self):
    if self.kind == LEAF:
      return 2
    glued = 1 if self.kind == SERIES else 2
    return (sum(c.VertexCount() for c in self.children) -
            glued * (len(self.children) - 1))

  def Dual(self):
    if self.kind == LEAF:
      return self
    return SPTree(_Opposite(self.kind),
                  children=[child.Dual() for child in self.children])

  def Realize(self):
    """Folds the joins into a SourceTerminalGraph with source s, terminal t."""
    counter = itertools.count()
    edges = []

    def Build(node, source, terminal):
      if node.kind == LEAF:
        edges.append((node.edge, source, terminal))
      elif node.kind == PARALLEL:
        for child in node.children:
          Build(child, source, terminal)
      else:
        points = ([source] +
                  ['v%d' % next(counter) for _ in node.children[1:]] +
                  [terminal])
        for i, child in enumerate(node.children):
          Build(child, points[i], points[i + 1])

    Build(self, 's', 't')
    vertices = ['s', 't'] + [v for _, u, w in edges for v in (u, w)]
    return graph_lib.SourceTerminalGraph(
        graph_lib.Multigraph(vertices, edges), 's', 't')


def UpsilonDual(tree):
  return tree.Dual()


def Flatten(kind, children):
  """Builds a kind node, splicing in children of the same kind."""
  spliced = []
  for child in children:
    if child.kind == kind:
      spliced.extend(child.children)
    else:
      spliced.append(child)
  if len(spliced) == 1:
    return spliced[0]
  return SPTree(kind, children=spliced)


def PathTree(edge_ids):
  leaves = [SPTree.Leaf(edge_id) for edge_id in edge_ids]
  return leaves[0] if len(leaves) == 1 else SPTree.Series(*leaves)


def CycleTree(first_ids, second_ids):
  return SPTree.Parallel(PathTree(first_ids), PathTree(second_ids))


def _FreshName(name, taken):
  while name in taken:
    name += "'"
  return name


def Join(first, second, kind):
  """Series or parallel join of two source-terminal graphs.

  Vertex names of the first graph are kept; clashing names in the second
  graph are primed.

  Raises:
    GraphError: if the two graphs share an edge id.
  """
  if kind == PARALLEL:
    glue = {second.source: first.source, second.terminal: first.terminal}
  elif kind == SERIES:
    glue = {second.source: first.terminal}
  else:
    raise errors.TreeError('Unknown join kind %r' % (kind,))
  taken = set(first.graph.Vertices())
  mapping = {}
  for vertex in second.graph.Vertices():
    if vertex in glue:
      mapping[vertex] = glue[vertex]
    else:
      mapping[vertex] = _FreshName(vertex, taken)
      taken.add(mapping[vertex])
  joined = first.graph.Union(second.graph.RenameVertices(mapping))
  terminal = first.terminal if kind == PARALLEL else mapping[second.terminal]
  return graph_lib.SourceTerminalGraph(joined, first.source, terminal)


def JoinAll(graphs, kind):
  result = graphs[0]
  for other in graphs[1:]:
    result = Join(result, other, kind)
  return result


def SingleEdge(edge_id):
  """K2 as a source-terminal graph."""
  return graph_lib.SourceTerminalGraph(
      graph_lib.Multigraph(['s', 't'], [(edge_id, 's', 't')]), 's', 't')


def RestrictedJoin(st_graph, edge_id, kind):
  """Joins a single fresh edge: G star e, e series G, or G series e."""
  edge = SingleEdge(edge_id)
  if kind == STAR_EDGE:
    return Join(st_graph, edge, PARALLEL)
  if kind == EDGE_SERIES:
    return Join(edge, st_graph, SERIES)
  if kind == SERIES_EDGE:
    return Join(st_graph, edge, SERIES)
  raise errors.TreeError('Unknown restricted join %r' % (kind,))


def Path(n, prefix='e'):
  if n < 1:
    raise errors.GraphError('A path needs at least one edge')
  return PathTree(['%s%d' % (prefix, i) for i in range(1, n + 1)]).Realize()


def Cycle(n, m):
  """Two paths x1..xn and y1..ym joined in parallel."""
  if n < 1 or m < 1:
    raise errors.GraphError('Both sides of a cycle need an edge')
  return CycleTree(['x%d' % i for i in range(1, n + 1)],
                   ['y%d' % i for i in range(1, m + 1)]).Realize()


def Wheel(n):
  """The wheel W_n: hub h, rim vertices v1..vn, rim ri = vi v(i+1), spoke si."""
  if n < 3:
    raise errors.GraphError('A wheel needs at least three spokes')
  rim = ['v%d' % i for i in range(1, n + 1)]
  edges = []
  for i in range(n):
    edges.append(('r%d' % (i + 1), rim[i], rim[(i + 1) % n]))
  for i in range(n):
    edges.append(('s%d' % (i + 1), 'h', rim[i]))
  return graph_lib.Multigraph(['h'] + rim, edges)


def RandomMultigraph(vertex_count, edge_count, rng, loops=True):
  """A connected multigraph: a random spanning tree plus random extra edges.

  Vertices are v0..v(n-1) and edges e1..em; extra edges may be parallel or,
  when loops is set, self-loops.

  Args:
    vertex_count: number of vertices, at least 1.
    edge_count: number of edges, at least vertex_count - 1.
    rng: a random.Random instance.
    loops: whether self-loops may be drawn.
  """
  if vertex_count < 1 or edge_count < vertex_count - 1:
    raise errors.GraphError('Cannot connect %d vertices with %d edges' %
                            (vertex_count, edge_count))
  if vertex_count == 1 and edge_count and not loops:
    raise errors.GraphError('A single vertex only carries self-loops')
  vertices = ['v%d' % i for i in range(vertex_count)]
  pairs = [(vertices[i], vertices[rng.randrange(i)])
           for i in range(1, vertex_count)]
  while len(pairs) < edge_count:
    u, v = rng.choice(vertices), rng.choice(vertices)
    if u != v or loops:
      pairs.append((u, v))
  rng.shuffle(pairs)
  return graph_lib.Multigraph(
      vertices, [('e%d' % (k + 1), u, v) for k, (u, v) in enumerate(pairs)])


def Family(kind, *params):
  builders = {'path': Path, 'cycle': Cycle, 'wheel': Wheel}
  if kind not in builders:
    raise errors.GraphError('Unknown family %r' % (kind,))
  return builders[kind](*params)


class ArcDiagram(object):
  """A Hamilton path (the spine) plus pairwise non-crossing arcs over it.

  Attributes:
    spine: ordered list of vertex ids, source first and terminal last.
    arcs: list of (i, j, edge_id) with i < j positions on the spine.
    spine_edges: edge ids of the spine, spine_edges[i] joins spine[i] and
        spine[i + 1].
  """

  def __init__(self, spine, arcs=(), spine_edges=None):
    spine = list(spine)
    if len(spine) < 2 or len(set(spine)) != len(spine):
      raise errors.TreeError('Spine needs at least two distinct vertices')
    if spine_edges is None:
      spine_edges = ['p%d' % i for i in range(1, len(spine))]
    if len(spine_edges) != len(spine) - 1:
      raise errors.TreeError('Spine of %d vertices needs %d edges' %
                             (len(spine), len(spine) - 1))
    arcs = [tuple(arc) for arc in arcs]
    for i, j, _ in arcs:
      if not 0 <= i < j < len(spine):
        raise errors.TreeError('Arc (%d, %d) is off the spine' % (i, j))
    for (i, j, first), (k, l, second) in itertools.combinations(arcs, 2):
      if i < k < j < l or k < i < l < j:
        raise errors.TreeError('Arcs %s and %s cross' % (first, second))
    ids = list(spine_edges) + [edge_id for _, _, edge_id in arcs]
    if len(set(ids)) != len(ids):
      raise errors.TreeError('Arc diagram edge ids must be distinct')
    self.spine = spine
    self.arcs = arcs
    self.spine_edges = list(spine_edges)

  def EdgeIds(self):
    return self.spine_edges + [edge_id for _, _, edge_id in self.arcs]

  def HasOuterArc(self):
    last = len(self.spine) - 1
    return any(i == 0 and j == last for i, j, _ in self.arcs)

  def IsPath(self):
    return not self.arcs

  def ToGraph(self):
    edges = [(edge_id, self.spine[i], self.spine[i + 1])
             for i, edge_id in enumerate(self.spine_edges)]
    edges.extend((edge_id, self.spine[i], self.spine[j])
                 for i, j, edge_id in self.arcs)
    return graph_lib.SourceTerminalGraph(
        graph_lib.Multigraph(self.spine, edges), self.spine[0], self.spine[-1])

  def ToTree(self):
    """Decomposition tree of the diagram's source-terminal graph."""
    return self._Segment(0, len(self.spine) - 1)

  def _Segment(self, start, end):
    exact = [edge_id for i, j, edge_id in self.arcs if (i, j) == (start, end)]
    if end == start + 1:
      inner = SPTree.Leaf(self.spine_edges[start])
    else:
      inside = [(i, j) for i, j, _ in self.arcs
                if start <= i and j <= end and (i, j) != (start, end)]
      cuts = [p for p in range(start + 1, end)
              if not any(i < p < j for i, j in inside)]
      points = [start] + cuts + [end]
      inner = Flatten(SERIES, [self._Segment(a, b)
                               for a, b in zip(points, points[1:])])
    if not exact:
      return inner
    return Flatten(PARALLEL, [inner] + [SPTree.Leaf(e) for e in exact])


def ArcDiagramToGraph(diagram):
  return diagram.ToGraph()


def ReplaceEdge(graph, edge_id, piece):
  """Replaces a non-loop edge by a source-terminal graph.

  The piece's source is glued to the lexicographically smaller endpoint and
  its inner vertices are renamed '<edge>:<vertex>'.
  """
  edge = graph.GetEdge(edge_id)
  if edge.IsSelfLoop():
    raise errors.GraphError('Cannot replace self-loop %r' % edge_id)
  rest = graph.DeleteEdge(edge_id)
  clash = set(rest.EdgeIds()).intersection(piece.EdgeIds())
  if clash:
    raise errors.GraphError('Edge id collision: %s' % sorted(clash))
  low, high = edge.Ends()
  taken = set(rest.Vertices())
  mapping = {piece.source: low, piece.terminal: high}
  for vertex in piece.graph.Vertices():
    if vertex not in mapping:
      mapping[vertex] = _FreshName('%s:%s' % (edge_id, vertex), taken)
      taken.add(mapping[vertex])
  logger.debug('Replacing %s by a %d-edge piece', edge_id,
               len(piece.EdgeIds()))
  return rest.Union(piece.graph.RenameVertices(mapping))


def DeltaToY(graph, triangle, center='y0'):
  """Replaces a triangle by a star on a new center vertex.

  The Y edge from the center to vertex v reuses the id of the triangle edge
  opposite v.
  """
  edges = [graph.GetEdge(edge_id) for edge_id in triangle]
  corners = {v for e in edges for v in (e.u, e.v)}
  if (len(set(triangle)) != 3 or len(corners) != 3 or
      any(e.IsSelfLoop() for e in edges) or
      len({e.Ends() for e in edges}) != 3):
    raise errors.GraphError('Edges %s do not form a triangle' % list(triangle))
  center = _FreshName(center, set(graph.Vertices()))
  result = graph.DeleteEdges(triangle)
  for edge in edges:
    opposite = (corners - {edge.u, edge.v}).pop()
    result = result.AddEdge(edge.id, center, opposite)
  return result


def _ShapeOptions(size, kind, cache):
  if size == 1:
    return [LEAF]
  return _Shapes(size, kind, cache)


def _ChildCombos(remaining, bound, kind, cache):
  """Non-increasing sequences of (size, index) items summing to remaining."""
  if remaining == 0:
    yield ()
    return
  for size in range(min(remaining, bound[0]), 0, -1):
    options = _ShapeOptions(size, kind, cache)
    top = len(options) - 1
    if size == bound[0]:
      top = min(top, bound[1])
    for index in range(top, -1, -1):
      for rest in _ChildCombos(remaining - size, (size, index), kind, cache):
        yield ((size, index),) + rest


def _Shapes(n, kind, cache):
  """Unlabelled trees with n leaves, root of the given kind, kinds alternate."""
  key = (n, kind)
  if key not in cache:
    child_kind = _Opposite(kind)
    shapes = []
    for combo in _ChildCombos(n, (n - 1, n * n), child_kind, cache):
      shapes.append((kind, tuple(_ShapeOptions(size, child_kind, cache)[index]
                                 for size, index in combo)))
    cache[key] = shapes
  return cache[key]


def _LabelShape(shape, counter, prefix):
  if shape == LEAF:
    return SPTree.Leaf('%s%d' % (prefix, next(counter)))
  kind, children = shape
  return SPTree(kind, children=[_LabelShape(c, counter, prefix)
                                for c in children])


def EnumerateTrees(n, prefix='e'):
  """All series-parallel networks with exactly n edges, up to reordering.

  Leaves are labelled prefix1..prefixn in depth-first order.
  """
  if n < 1:
    return []
  if n == 1:
    return [SPTree.Leaf('%s1' % prefix)]
  cache = {}
  shapes = _Shapes(n, SERIES, cache) + _Shapes(n, PARALLEL, cache)
  return [_LabelShape(shape, itertools.count(1), prefix) for shape in shapes]
