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

"""Reading and writing graphs: JSON documents, SP expressions and DOT.

A graph document is a JSON object

  {"vertices": [...], "edges": [{"id": ..., "ends": [u, v]}, ...],
   "source": ..., "terminal": ...}

where source and terminal are optional but come together.  Parse errors
name the offending line; SP expression errors name the character position.
"""

import json
import logging
import re

from pykirchhoff import errors
from pykirchhoff import graph as graph_lib
from pykirchhoff import spbuild

logger = logging.getLogger('pykirchhoff.document')


def _LineOf(text, edge_id, occurrence=0):
  pattern = r'"id"\s*:\s*%s' % re.escape(json.dumps(edge_id))
  matches = list(re.finditer(pattern, text))
  if len(matches) <= occurrence:
    return None
  return text.count('\n', 0, matches[occurrence].start()) + 1


def _LineOfKey(text, key):
  match = re.search(r'"%s"\s*:' % re.escape(key), text)
  if not match:
    return None
  return text.count('\n', 0, match.start()) + 1


def _IsName(value):
  return isinstance(value, str) and bool(value)


class GraphDocument(object):
  """A multigraph with optional source and terminal, as stored on disk."""

  def __init__(self, graph, source=None, terminal=None):
    if (source is None) != (terminal is None):
      raise errors.DocumentError('source and terminal must be given together')
    self.graph = graph
    self.source = source
    self.terminal = terminal
    if source is not None:
      # Validates the marks.
      self.SourceTerminal()

  @classmethod
  def FromSourceTerminal(cls, st_graph):
    return cls(st_graph.graph, st_graph.source, st_graph.terminal)

  @classmethod
  def FromJson(cls, text):
    """Parses and validates a document.

    Raises:
      DocumentError: on malformed JSON or an invalid graph, with the line of
          the offending item when it can be located.
    """
    try:
      data = json.loads(text)
    except ValueError as e:
      raise errors.DocumentError(
          '%s (column %d)' % (getattr(e, 'msg', str(e)), getattr(e, 'colno',
                                                                 0)),
          line=getattr(e, 'lineno', None))
    if not isinstance(data, dict):
      raise errors.DocumentError('Document must be a JSON object', line=1)
    unknown = sorted(set(data) - {'vertices', 'edges', 'source', 'terminal'})
    if unknown:
      raise errors.DocumentError('Unknown field %r' % unknown[0],
                                 line=_LineOfKey(text, unknown[0]))
    vertices = data.get('vertices')
    if (not isinstance(vertices, list) or
        not all(_IsName(v) for v in vertices)):
      raise errors.DocumentError('"vertices" must be a list of strings',
                                 line=_LineOfKey(text, 'vertices'))
    if len(set(vertices)) != len(vertices):
      raise errors.DocumentError('Duplicate vertex',
                                 line=_LineOfKey(text, 'vertices'))
    edges = data.get('edges')
    if not isinstance(edges, list):
      raise errors.DocumentError('"edges" must be a list',
                                 line=_LineOfKey(text, 'edges'))
    known = set(vertices)
    seen = {}
    triples = []
    for item in edges:
      if not isinstance(item, dict) or not _IsName(item.get('id')):
        raise errors.DocumentError('Every edge needs a string "id"',
                                   line=_LineOfKey(text, 'edges'))
      edge_id = item['id']
      occurrence = seen.get(edge_id, 0)
      seen[edge_id] = occurrence + 1
      line = _LineOf(text, edge_id, occurrence)
      if occurrence:
        raise errors.DocumentError('Duplicate edge id %r' % edge_id, line=line)
      ends = item.get('ends')
      if (not isinstance(ends, list) or len(ends) != 2 or
          not all(_IsName(v) for v in ends)):
        raise errors.DocumentError(
            'Edge %r needs "ends" with two vertex names' % edge_id, line=line)
      for vertex in ends:
        if vertex not in known:
          raise errors.DocumentError(
              'Edge %r uses unknown vertex %r' % (edge_id, vertex), line=line)
      triples.append((edge_id, ends[0], ends[1]))
    try:
      graph = graph_lib.Multigraph(vertices, triples)
    except errors.GraphError as e:
      raise errors.DocumentError(str(e), line=_LineOfKey(text, 'vertices'))
    source, terminal = data.get('source'), data.get('terminal')
    for key, value in (('source', source), ('terminal', terminal)):
      if value is not None and value not in known:
        raise errors.DocumentError('%s %r is not a vertex' % (key, value),
                                   line=_LineOfKey(text, key))
    if (source is None) != (terminal is None):
      missing = 'terminal' if terminal is None else 'source'
      raise errors.DocumentError('Missing %s' % missing,
                                 line=_LineOfKey(text, 'terminal' if
                                                 source is None else 'source'))
    if source is not None and source == terminal:
      raise errors.DocumentError('source and terminal must differ',
                                 line=_LineOfKey(text, 'terminal'))
    logger.debug('Parsed document with %d vertices and %d edges',
                 len(vertices), len(triples))
    return cls(graph, source, terminal)

  def HasSourceTerminal(self):
    return self.source is not None

  def SourceTerminal(self):
    if self.source is None:
      raise errors.DocumentError('Document has no source and terminal')
    try:
      return graph_lib.SourceTerminalGraph(self.graph, self.source,
                                           self.terminal)
    except errors.GraphError as e:
      raise errors.DocumentError(str(e))

  def ToJson(self):
    """Canonical text: sorted vertices, edges in graph order, one per line."""
    lines = ['{', '  "vertices": %s,' % json.dumps(self.graph.Vertices())]
    edge_lines = ['    %s' % json.dumps({'id': e.id, 'ends': [e.u, e.v]})
                  for e in self.graph.Edges()]
    lines.append('  "edges": [')
    lines.append(',\n'.join(edge_lines))
    tail = '  ]'
    if self.source is not None:
      lines.append(tail + ',')
      lines.append('  "source": %s,' % json.dumps(self.source))
      lines.append('  "terminal": %s' % json.dumps(self.terminal))
    else:
      lines.append(tail)
    lines.append('}')
    return '\n'.join(line for line in lines if line) + '\n'

  def __eq__(self, other):
    if not isinstance(other, GraphDocument):
      return NotImplemented
    return ((self.graph, self.source, self.terminal) ==
            (other.graph, other.source, other.terminal))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __repr__(self):
    return 'GraphDocument(%d edges, source=%r, terminal=%r)' % (
        len(self.graph.Edges()), self.source, self.terminal)


def ReadDocument(path):
  with open(path) as f:
    return GraphDocument.FromJson(f.read())


def WriteDocument(path, document):
  with open(path, 'w') as f:
    f.write(document.ToJson())


_TREE_TOKEN_RE = re.compile(r'\s*(?:(\()|(\))|([^\s()]+))')


def _TreeTokens(text):
  position = 0
  tokens = []
  while True:
    match = _TREE_TOKEN_RE.match(text, position)
    if not match:
      rest = text[position:]
      if rest.strip():
        raise errors.DocumentError('Unexpected character',
                                   position=position + len(rest) -
                                   len(rest.lstrip()))
      return tokens
    start = match.start(match.lastindex)
    tokens.append((match.group(match.lastindex), start))
    position = match.end()


class _TreeParser(object):
  """expr := NAME | "(" ("S"|"P") expr expr+ ")"."""

  def __init__(self, text):
    self.text = text
    self.tokens = _TreeTokens(text)
    self.index = 0

  def _Next(self):
    if self.index >= len(self.tokens):
      raise errors.DocumentError('Unexpected end of expression',
                                 position=len(self.text))
    token = self.tokens[self.index]
    self.index += 1
    return token

  def Parse(self):
    tree = self._Expr()
    if self.index < len(self.tokens):
      raise errors.DocumentError('Trailing input',
                                 position=self.tokens[self.index][1])
    return tree

  def _Expr(self):
    token, start = self._Next()
    if token == ')':
      raise errors.DocumentError('Unexpected ")"', position=start)
    if token != '(':
      return spbuild.SPTree.Leaf(token)
    kind, kind_start = self._Next()
    if kind not in (spbuild.SERIES, spbuild.PARALLEL):
      raise errors.DocumentError('Expected S or P, got %r' % kind,
                                 position=kind_start)
    children = []
    while True:
      if self.index >= len(self.tokens):
        raise errors.DocumentError('Missing ")"', position=len(self.text))
      if self.tokens[self.index][0] == ')':
        self.index += 1
        break
      children.append(self._Expr())
    if len(children) < 2:
      raise errors.DocumentError('%s needs at least two operands' % kind,
                                 position=start)
    try:
      return spbuild.SPTree(kind, children=children)
    except errors.TreeError as e:
      raise errors.DocumentError(str(e), position=start)


def ParseTree(text):
  """Parses an SP expression such as "(P (S x y) z)" into an SPTree.

  Raises:
    DocumentError: with the character position of the first error.
  """
  return _TreeParser(text).Parse()


def _Quote(name):
  return '"%s"' % name.replace('\\', '\\\\').replace('"', '\\"')


def ToDot(graph, name='G'):
  """Undirected DOT text; every edge is labelled with its id."""
  lines = ['graph %s {' % _Quote(name)]
  for vertex in graph.Vertices():
    lines.append('  %s;' % _Quote(vertex))
  for edge in graph.Edges():
    lines.append('  %s -- %s [label=%s];' % (_Quote(edge.u), _Quote(edge.v),
                                             _Quote(edge.id)))
  lines.append('}')
  return '\n'.join(lines) + '\n'


_ARC_RE = re.compile(r'^([^\s:|]+):(\d+)-(\d+)$')


def ParseArcDiagram(text):
  """Parses "p1 p2 p3 | z:0-3 w:1-3" into an ArcDiagram.

  Spine edge ids come before the bar, arcs after it as id:i-j over spine
  positions.  Spine vertices are named u0, u1, ...
  """
  spine_text, _, arc_text = text.partition('|')
  spine_edges = spine_text.split()
  if not spine_edges:
    raise errors.DocumentError('Arc diagram needs at least one spine edge',
                               position=0)
  arcs = []
  offset = len(spine_text) + 1
  for match in re.finditer(r'\S+', arc_text):
    arc = _ARC_RE.match(match.group())
    if not arc:
      raise errors.DocumentError('Bad arc %r' % match.group(),
                                 position=offset + match.start())
    arcs.append((int(arc.group(2)), int(arc.group(3)), arc.group(1)))
  spine = ['u%d' % i for i in range(len(spine_edges) + 1)]
  try:
    return spbuild.ArcDiagram(spine, arcs, spine_edges=spine_edges)
  except errors.TreeError as e:
    raise errors.DocumentError(str(e), position=0)
