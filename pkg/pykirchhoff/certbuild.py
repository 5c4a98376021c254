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

"""Closed-form certificate builders.

Each builder takes the certificates its construction needs as inputs,
assembles the coefficients of the joined graph from the (Psi, breaker) pairs
of the pieces, and re-verifies the result by exact arithmetic before
returning it.  Every denominator is checked first; a degenerate one raises
HypothesisError instead of producing a wrong certificate.

Notation used below: h, hh are Psi and the breaker of a piece H, n = deg hh,
and primed names refer to the second piece of a join.
"""

import collections
import logging

import networkx as nx

from pykirchhoff import conditions
from pykirchhoff import errors
from pykirchhoff import graph as graph_lib
from pykirchhoff import kirchhoff
from pykirchhoff import model
from pykirchhoff import poly
from pykirchhoff import spbuild

logger = logging.getLogger('pykirchhoff.certbuild')

Var = poly.Var
VarSum = poly.VarSum

Polys = collections.namedtuple('Polys', ['psi', 'breaker', 'edges'])

SpokeConfiguration = collections.namedtuple(
    'SpokeConfiguration',
    ['graph', 'edge', 'center', 'x', 'y', 'z', 'loop_number'])

TransportComponents = collections.namedtuple(
    'TransportComponents',
    ['p0', 'p1', 'p2', 'p11', 'q0', 'q10', 'q01', 'q20', 'q02', 'q11'])

TransportResult = collections.namedtuple(
    'TransportResult', ['components', 'deleted', 'added', 'contracted'])

LiftResult = collections.namedtuple('LiftResult', ['graph', 'certificate'])

CombinedResult = collections.namedtuple(
    'CombinedResult', ['graph', 's_certificate', 't_certificate'])

CoHamiltonianResult = collections.namedtuple(
    'CoHamiltonianResult',
    ['dual_tree', 'tree', 'graph', 's_certificates', 't_certificate'])

ReplacementResult = collections.namedtuple('ReplacementResult',
                                           ['graph', 'verdicts'])

CASE_PATH = 'i'
CASE_T_PIECES = 'ii'
CASE_PATH_GAMMA = 'iii'

T_PARALLEL = 'parallel'
T_PATH = 'path'
T_PATH_STAR = 'path_star'
T_SERIES = 'series_combo'


def _Deg(polynomial):
  return polynomial.Degree() or 0


def PolysOf(st_graph):
  return Polys(kirchhoff.KirchhoffPolynomial(st_graph.graph),
               kirchhoff.Breaker(st_graph), tuple(st_graph.EdgeIds()))


def PathPolys(edge_ids):
  return Polys(poly.Polynomial.One(), VarSum(edge_ids), tuple(edge_ids))


def JoinPolys(first, second, kind):
  psi, breaker = kirchhoff.JoinPolynomials(
      (first.psi, first.breaker), (second.psi, second.breaker), kind)
  return Polys(psi, breaker, first.edges + second.edges)


def FoldPolys(pieces, kind):
  result = pieces[0]
  for piece in pieces[1:]:
    result = JoinPolys(result, piece, kind)
  return result


def _Verified(graph, certificate, what):
  if not conditions.VerifyCertificate(graph, certificate):
    raise errors.CertificateError('%s certificate does not verify' % what)
  return certificate


def _RequireVerified(graph, certificate, what):
  if certificate is None:
    raise errors.HypothesisError('%s certificate is required' % what)
  if not conditions.VerifyCertificate(graph, certificate):
    raise errors.HypothesisError('%s certificate does not verify' % what)


# S(G, e): normalization and lifts.


def NormalizeS(st_graph, certificate, zero):
  """Rewrites an S certificate so that B (zero='B') or C (zero='C') is 0."""
  degree = _Deg(kirchhoff.KirchhoffPolynomial(st_graph.graph))
  return _NormalizeS(degree, certificate, zero)


def _NormalizeS(degree, certificate, zero):
  b, c = certificate.b, certificate.c
  if zero == 'B':
    if degree < 2:
      raise errors.HypothesisError('B = 0 needs deg Psi >= 2')
    coeffs = {j: a + b * Var(j) / (degree - 1)
              for j, a in certificate.coeffs.items()}
    return model.SCertificate(certificate.edge, coeffs,
                              poly.Polynomial.Zero(),
                              c - b * degree / (degree - 1))
  if zero == 'C':
    if degree < 1:
      raise errors.HypothesisError('C = 0 needs deg Psi >= 1')
    coeffs = {j: a + c * Var(j) / degree
              for j, a in certificate.coeffs.items()}
    return model.SCertificate(certificate.edge, coeffs,
                              b - c * (degree - 1) / degree,
                              poly.Polynomial.Zero())
  raise errors.Error('zero must be "B" or "C"')


def _SLiftPolys(first, second, edge_id, certificate, kind):
  """S(H, e) to S(H join H', e); both closed forms fold in a normalization."""
  n = _Deg(first.breaker)
  m = _Deg(second.breaker)
  if n + m - 2 == 0:
    raise errors.HypothesisError('Degenerate S-lift: n + m = 2')
  b, c = certificate.b, certificate.c
  if kind == spbuild.PARALLEL:
    alpha = (b - (b - c) * m) / (n + m - 2)
  else:
    alpha = (c * m - b * (m - 1)) / (n + m - 2)
  beta = alpha + b - c
  coeffs = {}
  for j in first.edges:
    if j != edge_id:
      coeffs[j] = certificate.Coefficient(j) + alpha * Var(j)
  for j in second.edges:
    coeffs[j] = beta * Var(j)
  if kind == spbuild.PARALLEL:
    new_b = poly.Polynomial.Zero()
    new_c = c - alpha * (n - 1) - beta * m
  else:
    new_b = b - alpha * (n - 2) - beta * (m - 1)
    new_c = poly.Polynomial.Zero()
  return model.SCertificate(edge_id, coeffs, new_b, new_c)


def SLift(first, second, edge_id, certificate, kind):
  """Lifts S(H, e) across a parallel or series join with any H'.

  Args:
    first: SourceTerminalGraph H containing edge_id.
    second: SourceTerminalGraph H' with fresh edge ids.
    edge_id: the distinguished edge.
    certificate: an SCertificate verifying S(H, e).
    kind: spbuild.PARALLEL or spbuild.SERIES.

  Returns:
    LiftResult(joined graph, SCertificate for it).
  """
  _RequireVerified(first, certificate, 'S(H, e)')
  joined = spbuild.Join(first, second, kind)
  lifted = _SLiftPolys(PolysOf(first), PolysOf(second), edge_id, certificate,
                       kind)
  return LiftResult(joined, _Verified(joined, lifted, 'Lifted S'))


# T(G): lifts.


def _TParallelPolys(first, certificate, second):
  n = _Deg(first.breaker)
  m = _Deg(second.breaker)
  c = certificate.c
  alpha = -c * m / (n + m - 1)
  beta = c * (n - 1) / (n + m - 1)
  coeffs = {j: certificate.Coefficient(j) + alpha * Var(j)
            for j in first.edges}
  coeffs.update({j: beta * Var(j) for j in second.edges})
  return model.TCertificate(coeffs, c * (n - 1) / (n + m - 1))


def _TPathPolys(first, certificate, edge_id):
  d = _Deg(first.psi)
  if d < 1:
    raise errors.HypothesisError('T-path-lift needs deg Psi_H >= 1')
  x_e = Var(edge_id)
  coeffs = {j: certificate.Coefficient(j) + x_e * Var(j) / d
            for j in first.edges}
  c = certificate.c + x_e + x_e * (d + 1) / d
  coeffs[edge_id] = x_e * (c - x_e)
  return model.TCertificate(coeffs, c)


def _PathStarPolys(first, path_ids):
  """T(H star P) for a path P = z1..zk and any H."""
  joined = JoinPolys(first, PathPolys(path_ids), spbuild.PARALLEL)
  degree = _Deg(joined.psi)
  if degree < 1:
    raise errors.HypothesisError('Path-to-T needs deg Psi >= 1')
  z = VarSum(path_ids)
  coeffs = {j: z * Var(j) / degree for j in first.edges}
  coeffs.update({j: z * Var(j) / degree - z * Var(j)
                 for j in path_ids})
  return model.TCertificate(coeffs, z / degree)


def _SeriesFirstIdentity(pieces):
  """Coefficients C_j with sum C_j dPsi/dj = breaker along a series chain.

  Args:
    pieces: list of (Polys, TCertificate or None); pieces without a
        certificate must be paths.

  Raises:
    HypothesisError: if a piece is neither certified nor a path, or the
        chain's Psi is constant while some path edge needs absorbing.
  """
  psi = poly.Product(piece.psi for piece, _ in pieces)
  degree = _Deg(psi)
  path_edges = []
  coeffs = {}
  for piece, certificate in pieces:
    if certificate is None:
      if piece.psi != 1:
        raise errors.HypothesisError('Chain piece without T is not a path')
      path_edges.extend(piece.edges)
    else:
      coeffs.update({j: certificate.Coefficient(j) for j in piece.edges})
  if path_edges:
    if degree < 1:
      raise errors.HypothesisError('A chain of paths has no T combination')
    z = VarSum(path_edges)
    for j in list(coeffs):
      coeffs[j] = coeffs[j] + z * Var(j) / degree
  return coeffs


def _CheckFirstIdentity(polys, coeffs):
  combination = poly.Sum(coeffs.get(j, 0) * polys.psi.Derivative(j)
                         for j in polys.edges)
  if combination != polys.breaker:
    raise errors.CertificateError('Series combination does not verify')


def TParallelLift(first, certificate, second):
  """T(H) gives T(H star H') for any H'."""
  _RequireVerified(first, certificate, 'T(H)')
  joined = spbuild.Join(first, second, spbuild.PARALLEL)
  lifted = _TParallelPolys(PolysOf(first), certificate, PolysOf(second))
  return LiftResult(joined, _Verified(joined, lifted, 'T-parallel-lift'))


def TPathLift(first, certificate, edge_id, before=False):
  """T(H) gives T(H series e), or T(e series H) when before is set."""
  _RequireVerified(first, certificate, 'T(H)')
  kind = spbuild.EDGE_SERIES if before else spbuild.SERIES_EDGE
  joined = spbuild.RestrictedJoin(first, edge_id, kind)
  lifted = _TPathPolys(PolysOf(first), certificate, edge_id)
  return LiftResult(joined, _Verified(joined, lifted, 'T-path-lift'))


def PathToT(first, path_ids):
  """T(H star P) for the path P with the given edge ids, for any H."""
  path = spbuild.PathTree(list(path_ids)).Realize()
  joined = spbuild.Join(first, path, spbuild.PARALLEL)
  lifted = _PathStarPolys(PolysOf(first), list(path_ids))
  return LiftResult(joined, _Verified(joined, lifted, 'Path-to-T'))


def TSeriesCombination(pieces):
  """First T identity for a series chain of certified pieces and paths.

  Args:
    pieces: list of (SourceTerminalGraph, TCertificate or None).

  Returns:
    LiftResult(chain graph, dict of coefficients B_j with
    sum B_j dPsi/dj = breaker of the chain).
  """
  for piece, certificate in pieces:
    if certificate is not None:
      _RequireVerified(piece, certificate, 'T(H_i)')
  chain = spbuild.JoinAll([piece for piece, _ in pieces], spbuild.SERIES)
  coeffs = _SeriesFirstIdentity(
      [(PolysOf(piece), certificate) for piece, certificate in pieces])
  _CheckFirstIdentity(PolysOf(chain), coeffs)
  return LiftResult(chain, coeffs)


def TLift(kind, *args, **kwargs):
  """Dispatches to one of the four T constructions by name."""
  builders = {
      T_PARALLEL: TParallelLift,
      T_PATH: TPathLift,
      T_PATH_STAR: PathToT,
      T_SERIES: TSeriesCombination,
  }
  if kind not in builders:
    raise errors.Error('Unknown T lift %r' % (kind,))
  return builders[kind](*args, **kwargs)


# Bridge, cycle and cyclepaths constructions.


def _Zero():
  return poly.Polynomial.Zero()


def _BridgePolys(chain, bridge, gamma, gamma_cert, case):
  """S(G, e1) and T(G) for G = (H_1 ... e1 ... H_r) star Gamma.

  Args:
    chain: list of (Polys, TCertificate or None) for the pieces H_i.
    bridge: the edge e1 placed in series with the pieces.
    gamma: Polys of Gamma.
    gamma_cert: T(Gamma), or None.
    case: CASE_PATH, CASE_T_PIECES or CASE_PATH_GAMMA.

  Returns:
    (SCertificate, TCertificate).
  """
  x = Var(bridge)
  chain_edges = [j for piece, _ in chain for j in piece.edges]
  outer = FoldPolys([piece for piece, _ in chain] + [PathPolys([bridge])],
                    spbuild.SERIES)
  if case == CASE_PATH:
    if any(piece.psi != 1 for piece, _ in chain):
      raise errors.HypothesisError('Case i needs every chain piece a path')
    if gamma_cert is None:
      raise errors.HypothesisError('Case i needs T(Gamma)')
    total = VarSum(chain_edges + [bridge])
    coeffs = {j: _Zero() for j in chain_edges}
    coeffs.update({j: gamma_cert.Coefficient(j) for j in gamma.edges})
    s_cert = model.SCertificate(bridge, coeffs, total, total - gamma_cert.c)
    return s_cert, _TParallelPolys(gamma, gamma_cert, outer)
  if case not in (CASE_T_PIECES, CASE_PATH_GAMMA):
    raise errors.Error('Unknown bridge lemma case %r' % (case,))
  first = _SeriesFirstIdentity(chain) if chain else {}
  coeffs = {j: first.get(j, _Zero()) for j in chain_edges}
  if case == CASE_T_PIECES:
    if gamma_cert is None:
      raise errors.HypothesisError('Case ii needs T(Gamma)')
    m = _Deg(gamma.psi)
    if m < 1:
      raise errors.HypothesisError('Case ii needs deg Psi_Gamma >= 1')
    coeffs.update({j: x * Var(j) / m + gamma_cert.Coefficient(j)
                   for j in gamma.edges})
    s_cert = model.SCertificate(bridge, coeffs, _Zero(),
                                -(gamma_cert.c + x / m))
    return s_cert, _TParallelPolys(gamma, gamma_cert, outer)
  if gamma.psi != 1:
    raise errors.HypothesisError('Case iii needs Gamma to be a path')
  coeffs.update({j: _Zero() for j in gamma.edges})
  s_cert = model.SCertificate(bridge, coeffs, VarSum(gamma.edges) + x, x)
  return s_cert, _PathStarPolys(outer, list(gamma.edges))


def BridgeLemmaCertificates(pieces, bridge, gamma, case, piece_certs=None,
                            gamma_cert=None, position=None):
  """S(G, e1) and T(G) for G = (H_1 series ... e1 ... series H_r) star Gamma.

  Case i: every H_i is a path and T(Gamma) is given.  Case ii: every
  non-path H_i and Gamma come with T certificates.  Case iii: as ii for the
  pieces, with Gamma a path.

  Args:
    pieces: list of SourceTerminalGraph H_i, possibly empty.
    bridge: edge id of e1.
    gamma: SourceTerminalGraph Gamma.
    case: CASE_PATH, CASE_T_PIECES or CASE_PATH_GAMMA.
    piece_certs: T certificates parallel to pieces; None marks a path.
    gamma_cert: T(Gamma) for cases i and ii.
    position: index of e1 within the chain, default after the last piece.

  Returns:
    CombinedResult(G, S(G, e1), T(G)).
  """
  pieces = list(pieces)
  piece_certs = list(piece_certs or [None] * len(pieces))
  if len(piece_certs) != len(pieces):
    raise errors.Error('Need one T certificate slot per chain piece')
  for piece, certificate in zip(pieces, piece_certs):
    if certificate is not None:
      _RequireVerified(piece, certificate, 'T(H_i)')
  if gamma_cert is not None:
    _RequireVerified(gamma, gamma_cert, 'T(Gamma)')
  position = len(pieces) if position is None else position
  chain = list(pieces)
  chain.insert(position, spbuild.SingleEdge(bridge))
  joined = spbuild.Join(spbuild.JoinAll(chain, spbuild.SERIES), gamma,
                        spbuild.PARALLEL)
  s_cert, t_cert = _BridgePolys(
      [(PolysOf(piece), certificate)
       for piece, certificate in zip(pieces, piece_certs)],
      bridge, PolysOf(gamma), gamma_cert, case)
  logger.info('Bridge lemma case %s for %s', case, bridge)
  return CombinedResult(joined, _Verified(joined, s_cert, 'Bridge lemma S'),
                        _Verified(joined, t_cert, 'Bridge lemma T'))


def _CycleSides(cycle):
  """The two source-terminal paths of a cycle, as lists of edge ids."""
  graph = cycle.graph
  if (not graph.IsConnected() or
      len(graph.EdgeIds()) != len(graph.Vertices()) or
      any(graph.Degree(v) != 2 for v in graph.Vertices())):
    raise errors.HypothesisError('Piece is not a cycle')
  sides = [[key for _, _, key in path] for path in nx.all_simple_edge_paths(
      graph.ToNetworkx(), cycle.source, cycle.terminal)]
  if len(sides) != 2:
    raise errors.HypothesisError('Cycle needs two source-terminal paths')
  return sides


def _Split(sides, edge_id):
  for k, side in enumerate(sides):
    if edge_id in side:
      return side, sides[1 - k]
  raise errors.UnknownEdgeError(edge_id)


def _CycleBaseS(own, edge_id, other):
  """S(C, e) on a cycle: A = 0, B = X + Y, C = X with e on the X side."""
  x_side = VarSum(list(own) + [edge_id])
  y_side = VarSum(other)
  coeffs = {j: _Zero() for j in list(own) + list(other)}
  return model.SCertificate(edge_id, coeffs, x_side + y_side, x_side)


def CycleLemmaCertificates(cycle, gamma, mode):
  """S(G, e) for every edge e of a cycle C, with G = C star Gamma or C Gamma.

  In parallel mode the other side of the cycle is merged into Gamma and the
  first bridge case applies; T(G) comes out as well.  In series mode Gamma
  must not be a path.

  Returns:
    CombinedResult(G, dict edge id -> SCertificate, TCertificate or None).
  """
  sides = _CycleSides(cycle)
  gamma_polys = PolysOf(gamma)
  certs = {}
  t_cert = None
  if mode == spbuild.PARALLEL:
    joined = spbuild.Join(cycle, gamma, spbuild.PARALLEL)
    for edge_id in cycle.EdgeIds():
      own, other = _Split(sides, edge_id)
      wider = JoinPolys(gamma_polys, PathPolys(other), spbuild.PARALLEL)
      wider_cert = _PathStarPolys(gamma_polys, other)
      chain = [(PathPolys([j]), None) for j in own if j != edge_id]
      certs[edge_id], t_cert = _BridgePolys(chain, edge_id, wider,
                                            wider_cert, CASE_PATH)
  elif mode == spbuild.SERIES:
    joined = spbuild.Join(cycle, gamma, spbuild.SERIES)
    k = _Deg(gamma_polys.psi)
    if k < 1:
      raise errors.HypothesisError('Series cycle lemma needs Gamma with a '
                                   'cycle')
    psi_h = VarSum(cycle.EdgeIds())
    for edge_id in cycle.EdgeIds():
      own, other = _Split(sides, edge_id)
      x_side, y_side = VarSum(own), VarSum(other)
      coeffs = {j: _Zero() for j in cycle.EdgeIds() if j != edge_id}
      coeffs.update({j: psi_h * Var(j) / k for j in gamma_polys.edges})
      coeffs[other[0]] = (x_side * y_side - y_side * psi_h +
                          y_side * psi_h / k)
      certs[edge_id] = model.SCertificate(edge_id, coeffs, _Zero(),
                                          -psi_h / k)
  else:
    raise errors.TreeError('Unknown join kind %r' % (mode,))
  certs = {edge_id: _Verified(joined, cert, 'Cycle lemma S(G, %s)' % edge_id)
           for edge_id, cert in certs.items()}
  if t_cert is not None:
    t_cert = _Verified(joined, t_cert, 'Cycle lemma T')
  return CombinedResult(joined, certs, t_cert)


def CyclepathsCertificate(cycle, path_ids, gamma, edge_id, gamma_cert=None):
  """S(G, e) for G = (C series P) star Gamma, e in the cycle or the path.

  An edge of the path needs T(Gamma) or Gamma a path.
  """
  sides = _CycleSides(cycle)
  path_ids = list(path_ids)
  middle = cycle
  if path_ids:
    middle = spbuild.Join(cycle, spbuild.PathTree(path_ids).Realize(),
                          spbuild.SERIES)
  joined = spbuild.Join(middle, gamma, spbuild.PARALLEL)
  gamma_polys = PolysOf(gamma)
  if gamma_cert is not None:
    _RequireVerified(gamma, gamma_cert, 'T(Gamma)')
  cycle_polys = PolysOf(cycle)
  if edge_id in cycle.EdgeIds():
    own, other = _Split(sides, edge_id)
    n = _Deg(gamma_polys.breaker)
    psi_h = cycle_polys.psi
    coeffs = {j: _Zero() for j in middle.EdgeIds() if j != edge_id}
    coeffs.update({j: Var(j) * psi_h for j in gamma_polys.edges})
    coeffs[other[0]] = PolysOf(middle).breaker
    s_cert = model.SCertificate(edge_id, coeffs, -(n - 1) * psi_h,
                                -n * psi_h)
  elif edge_id in path_ids:
    cycle_cert = _PathStarPolys(PathPolys(sides[0]), sides[1])
    chain = [(cycle_polys, cycle_cert)]
    chain.extend((PathPolys([j]), None) for j in path_ids if j != edge_id)
    if gamma_cert is not None:
      case = CASE_T_PIECES
    elif gamma_polys.psi == 1:
      case = CASE_PATH_GAMMA
    else:
      raise errors.HypothesisError('A path edge needs T(Gamma) or Gamma a '
                                   'path')
    s_cert, _ = _BridgePolys(chain, edge_id, gamma_polys, gamma_cert, case)
  else:
    raise errors.UnknownEdgeError(edge_id)
  return LiftResult(joined, _Verified(joined, s_cert, 'Cyclepaths S'))


# Co-Hamiltonian duals.


class _Node(object):
  """Polynomials and certificates gathered for one decomposition tree node."""

  def __init__(self, kind, polys, is_path, children=(), leaf=None):
    self.kind = kind
    self.polys = polys
    self.is_path = is_path
    self.children = list(children)
    self.leaf = leaf
    self.t_cert = None
    self.s_certs = {}


def _Others(nodes, index):
  return nodes[:index] + nodes[index + 1:]


def _ParallelT(nodes):
  for i, node in enumerate(nodes):
    if node.t_cert is not None:
      rest = FoldPolys([n.polys for n in _Others(nodes, i)], spbuild.PARALLEL)
      return _TParallelPolys(node.polys, node.t_cert, rest)
  for i, node in enumerate(nodes):
    if node.is_path:
      rest = FoldPolys([n.polys for n in _Others(nodes, i)], spbuild.PARALLEL)
      return _PathStarPolys(rest, list(node.polys.edges))
  return None


def _SeriesT(nodes):
  solid = [node for node in nodes if not node.is_path]
  if len(solid) != 1 or solid[0].t_cert is None:
    return None
  current, certificate = solid[0].polys, solid[0].t_cert
  try:
    for node in nodes:
      if node.is_path:
        for edge_id in node.polys.edges:
          certificate = _TPathPolys(current, certificate, edge_id)
          current = JoinPolys(current, PathPolys([edge_id]), spbuild.SERIES)
  except errors.HypothesisError as e:
    logger.debug('No series T: %s', e)
    return None
  return certificate


def _Group(nodes):
  """One node standing for the parallel join of several siblings."""
  if len(nodes) == 1:
    return nodes[0]
  group = _Node(spbuild.PARALLEL,
                FoldPolys([n.polys for n in nodes], spbuild.PARALLEL), False,
                children=nodes)
  group.t_cert = _ParallelT(nodes)
  return group


def _BridgesOf(node):
  """(edge id, chain siblings) for each edge that is a bridge of node."""
  if node.leaf is not None:
    yield node.leaf, []
  elif node.kind == spbuild.SERIES:
    for k, child in enumerate(node.children):
      if child.leaf is not None:
        yield child.leaf, _Others(node.children, k)


def _BridgeS(chain, edge_id, gamma):
  if all(node.is_path for node in chain):
    if gamma.t_cert is None:
      if not gamma.is_path:
        return None
      own = [j for node in chain for j in node.polys.edges]
      return _CycleBaseS(own, edge_id, list(gamma.polys.edges))
    case = CASE_PATH
  else:
    if any(not node.is_path and node.t_cert is None for node in chain):
      return None
    if gamma.t_cert is not None:
      case = CASE_T_PIECES
    elif gamma.is_path:
      case = CASE_PATH_GAMMA
    else:
      return None
  pieces = [(node.polys, None if node.is_path else node.t_cert)
            for node in chain]
  try:
    s_cert, _ = _BridgePolys(pieces, edge_id, gamma.polys, gamma.t_cert,
                             case)
  except errors.HypothesisError as e:
    logger.debug('Bridge lemma skipped for %s: %s', edge_id, e)
    return None
  return s_cert


def _CertifyTree(tree):
  """Bottom-up S and T certificates for a decomposition tree."""
  if tree.IsLeaf():
    return _Node(spbuild.LEAF, PathPolys([tree.edge]), True, leaf=tree.edge)
  children = [_CertifyTree(child) for child in tree.children]
  polys = FoldPolys([child.polys for child in children], tree.kind)
  if tree.kind == spbuild.SERIES:
    node = _Node(tree.kind, polys, all(c.is_path for c in children),
                 children=children)
    node.t_cert = _SeriesT(children)
  else:
    node = _Node(tree.kind, polys, False, children=children)
    node.t_cert = _ParallelT(children)
  for i, child in enumerate(children):
    others = _Others(children, i)
    if tree.kind == spbuild.SERIES:
      rest = FoldPolys([n.polys for n in others], spbuild.SERIES)
    else:
      group = _Group(others)
      rest = group.polys
    for edge_id, certificate in child.s_certs.items():
      try:
        node.s_certs[edge_id] = _SLiftPolys(child.polys, rest, edge_id,
                                            certificate, tree.kind)
      except errors.HypothesisError as e:
        logger.debug('S-lift skipped for %s: %s', edge_id, e)
    if tree.kind != spbuild.PARALLEL:
      continue
    for edge_id, chain in _BridgesOf(child):
      if edge_id not in node.s_certs:
        certificate = _BridgeS(chain, edge_id, group)
        if certificate is not None:
          node.s_certs[edge_id] = certificate
  return node


def CoHamiltonianCertificates(pieces):
  """S(G, e) for every edge of G whose dual is a series join of pieces.

  Args:
    pieces: list of at least two ArcDiagram, each a path or with an outer
        arc; edge ids must be distinct across pieces.

  Returns:
    CoHamiltonianResult with the dual tree, the tree of G, the realized G,
    a dict edge id -> SCertificate and T(G) when the recursion found one.

  Raises:
    HypothesisError: if the pieces do not describe a co-Hamiltonian dual.
    CertificateError: if some edge is left without a certificate.
  """
  pieces = list(pieces)
  if len(pieces) < 2:
    raise errors.HypothesisError('Need at least two series pieces')
  for piece in pieces:
    if not (piece.IsPath() or piece.HasOuterArc()):
      raise errors.HypothesisError(
          'Piece on spine %s has no outer arc' % (piece.spine,))
  vertex_count = sum(len(piece.spine) for piece in pieces) - len(pieces) + 1
  if vertex_count < 4:
    raise errors.HypothesisError('Dual needs at least 4 vertices, got %d' %
                                 vertex_count)
  dual_tree = spbuild.Flatten(spbuild.SERIES,
                              [piece.ToTree() for piece in pieces])
  tree = dual_tree.Dual()
  root = _CertifyTree(tree)
  missing = sorted(set(tree.Leaves()) - set(root.s_certs))
  if missing:
    raise errors.CertificateError('No S certificate for %s' % missing)
  realized = tree.Realize()
  s_certs = {edge_id: _Verified(realized, cert, 'S(G, %s)' % edge_id)
             for edge_id, cert in root.s_certs.items()}
  t_cert = None
  if root.t_cert is not None:
    t_cert = _Verified(realized, root.t_cert, 'T(G)')
  logger.info('Certified %d edges of %s', len(s_certs), tree)
  return CoHamiltonianResult(dual_tree, tree, realized, s_certs, t_cert)


def ReplacementCond1(graph, edge_id, piece):
  """Condition 1 for every new edge after replacing an edge by a piece.

  Args:
    graph: Multigraph G.
    edge_id: a non-loop edge of G.
    piece: a cycle as a SourceTerminalGraph, or a list of ArcDiagram
        describing the dual of a co-Hamiltonian piece.

  Returns:
    ReplacementResult(replaced graph, dict piece edge id -> Verdict).

  Raises:
    HypothesisError: if the edge is a self-loop, if a cycle piece replaces a
        bridge or goes into a forest, or if the result has loop number
        below 2.
  """
  edge = graph.GetEdge(edge_id)
  if edge.IsSelfLoop():
    raise errors.HypothesisError('Cannot replace self-loop %s' % edge_id)
  is_cycle = isinstance(piece, graph_lib.SourceTerminalGraph)
  if is_cycle and graph.LoopNumber() < 1:
    raise errors.HypothesisError('A cycle piece needs G to have a cycle')
  if is_cycle and graph.IsBridge(edge_id):
    raise errors.HypothesisError('A cycle cannot replace bridge %s' % edge_id)
  if is_cycle:
    sides = _CycleSides(piece)
    piece_graph = piece
    s_certs = {}
    for member in piece.EdgeIds():
      own, other = _Split(sides, member)
      s_certs[member] = _CycleBaseS([j for j in own if j != member], member,
                                    other)
  else:
    result = CoHamiltonianCertificates(piece)
    piece_graph, s_certs = result.graph, result.s_certificates
  low, high = edge.Ends()
  rest = graph_lib.SourceTerminalGraph(graph.DeleteEdge(edge_id), low, high)
  replaced = spbuild.ReplaceEdge(graph, edge_id, piece_graph)
  if replaced.LoopNumber() < 2:
    raise errors.HypothesisError('Replaced graph needs loop number >= 2')
  piece_polys, rest_polys = PolysOf(piece_graph), PolysOf(rest)
  verdicts = {}
  for member, certificate in sorted(s_certs.items()):
    lifted = _SLiftPolys(piece_polys, rest_polys, member, certificate,
                         spbuild.PARALLEL)
    cond1 = _Verified(replaced, conditions.Cond1FromS(replaced, lifted),
                      'cond1 for %s' % member)
    verdicts[member] = model.Verdict(
        model.Verdict.HOLDS, cond1,
        edge_class=replaced.ClassifyEdge(member))
  return ReplacementResult(replaced, verdicts)


# Condition 1 directly: spokes and parallel transport.


def FindSpokeConfiguration(graph, edge_id, center=None):
  """Finds a vertex c of degree 3 in G - e with edges to both ends of e.

  Returns:
    SpokeConfiguration with x the third edge at c and y, z the edges from c
    to the lower and higher endpoint of e.

  Raises:
    HypothesisError: if no such vertex exists.
  """
  edge = graph.GetEdge(edge_id)
  if edge.IsSelfLoop():
    raise errors.HypothesisError('Edge %s is a self-loop' % edge_id)
  low, high = edge.Ends()
  rest = graph.DeleteEdge(edge_id)
  candidates = [center] if center is not None else rest.Vertices()
  for vertex in candidates:
    if vertex in (low, high):
      continue
    incident = rest.IncidentEdges(vertex)
    if len(incident) != 3 or any(e.IsSelfLoop() for e in incident):
      continue
    far = {e.id: e.Other(vertex) for e in incident}
    to_low = [e.id for e in incident if far[e.id] == low]
    to_high = [e.id for e in incident if far[e.id] == high]
    third = [e.id for e in incident if far[e.id] not in (low, high)]
    if len(to_low) == 1 and len(to_high) == 1 and len(third) == 1:
      return SpokeConfiguration(graph, edge_id, vertex, third[0], to_low[0],
                                to_high[0], graph.LoopNumber())
  raise errors.HypothesisError('No spoke configuration for %s' % edge_id)


def LemmaSCertificate(configuration):
  """Closed-form condition 1 certificate at a degree-3 vertex.

  Returns:
    A full Cond1Certificate, verified.
  """
  graph = configuration.graph
  if not graph.IsConnected():
    raise errors.DisconnectedGraphError('Graph must be connected')
  loops = configuration.loop_number
  if loops < 2:
    raise errors.HypothesisError('Need loop number at least 2')
  x, y, z = (Var(configuration.x), Var(configuration.y),
             Var(configuration.z))
  yz = y + z
  special = (configuration.x, configuration.y, configuration.z)
  coeffs = {}
  for j in graph.DeleteEdge(configuration.edge).EdgeIds():
    if j not in special:
      coeffs[j] = yz * Var(j) / (loops - 1)
  coeffs[configuration.x] = y * z + x * yz / (loops - 1)
  coeffs[configuration.y] = -y * yz * (loops - 2) / (loops - 1)
  coeffs[configuration.z] = -z * yz * (loops - 2) / (loops - 1)
  contracted = model.Cond1Certificate(configuration.edge, coeffs,
                                      contracted=True)
  full = conditions.ContractedToFull(graph, contracted)
  return _Verified(graph, full, 'Spoke lemma')


def _Parallel(graph, first, second):
  a, b = graph.GetEdge(first), graph.GetEdge(second)
  return (first != second and not a.IsSelfLoop() and
          a.Ends() == b.Ends())


def TransportComponentsOf(certificate, x, y, others):
  """Symmetrizes a contracted certificate in x, y and splits it by degree."""
  p = {a: certificate.Coefficient(a) for a in others}
  q, r = certificate.Coefficient(x), certificate.Coefficient(y)
  p = {a: (c + c.SwapVariables(x, y)) / 2 for a, c in p.items()}
  q = (q + r.SwapVariables(x, y)) / 2

  def Part(value, i, j):
    return value.CoefficientOf({x: i, y: j})

  return TransportComponents(
      p0={a: Part(c, 0, 0) for a, c in p.items()},
      p1={a: Part(c, 1, 0) for a, c in p.items()},
      p2={a: Part(c, 2, 0) for a, c in p.items()},
      p11={a: Part(c, 1, 1) for a, c in p.items()},
      q0=Part(q, 0, 0), q10=Part(q, 1, 0), q01=Part(q, 0, 1),
      q20=Part(q, 2, 0), q02=Part(q, 0, 2), q11=Part(q, 1, 1))


def ParallelTransport(graph, edge_id, x, y, certificate, new_edge='z'):
  """Moves a condition 1 certificate along a pair of parallel edges x, y.

  From a certificate for (G, e) derives contracted certificates for G - y,
  for G plus a third parallel edge, and for (G - y) / x.

  Returns:
    TransportResult; deleted, added and contracted are LiftResult values.
  """
  if (not _Parallel(graph, x, y) or edge_id in (x, y) or
      _Parallel(graph, edge_id, x)):
    raise errors.HypothesisError('%s and %s must be parallel edges other '
                                 'than %s' % (x, y, edge_id))
  if graph.HasEdge(new_edge):
    raise errors.GraphError('Edge id %s already in use' % new_edge)
  _RequireVerified(graph, certificate, 'cond1(G, e)')
  contracted = conditions.FullToContracted(certificate)
  others = [a for a in graph.EdgeIds() if a not in (edge_id, x, y)]
  parts = TransportComponentsOf(contracted, x, y, others)
  if parts.q0:
    raise errors.CertificateError('Constant part of Q does not vanish')
  xv, yv, zv = Var(x), Var(y), Var(new_edge)
  mixed = parts.q11 - parts.q20 - parts.q02
  plus, minus = parts.q10 + parts.q01, parts.q10 - parts.q01

  deleted = graph.DeleteEdge(y)
  d_deleted = _Deg(kirchhoff.KirchhoffPolynomial(deleted.DeleteEdge(edge_id)))
  if d_deleted < 1:
    raise errors.HypothesisError('G - y - e has no cycle')
  scale = 2 * xv * mixed + plus
  coeffs = {a: parts.p0[a] + scale * Var(a) / d_deleted for a in others}
  coeffs[x] = 2 * xv * minus + scale * xv / d_deleted - scale * xv
  deleted_cert = model.Cond1Certificate(edge_id, coeffs, contracted=True)

  end_u, end_v = graph.GetEdge(x).Ends()
  added = graph.AddEdge(new_edge, end_u, end_v)
  d_added = _Deg(kirchhoff.KirchhoffPolynomial(added.DeleteEdge(edge_id)))
  scale = -4 * minus + 2 * mixed * xv + 3 * plus
  coeffs = {a: parts.p0[a] + scale * Var(a) / d_added for a in others}
  coeffs[x] = (2 * minus * xv - 2 * mixed * xv * xv - plus * xv +
               scale * xv / d_added)
  for member, var in ((y, yv), (new_edge, zv)):
    coeffs[member] = 2 * minus * var - plus * var + scale * var / d_added
  added_cert = model.Cond1Certificate(edge_id, coeffs, contracted=True)

  both = deleted.ContractEdge(x)
  d_both = _Deg(kirchhoff.KirchhoffPolynomial(both.DeleteEdge(edge_id)))
  if d_both < 1 and plus:
    raise errors.HypothesisError('(G - y) / x - e has no cycle')
  coeffs = {a: parts.p0[a] + (plus * Var(a) / d_both if d_both else 0)
            for a in others}
  both_cert = model.Cond1Certificate(edge_id, coeffs, contracted=True)

  return TransportResult(
      parts,
      LiftResult(deleted, _Verified(deleted, deleted_cert, 'G - y')),
      LiftResult(added, _Verified(added, added_cert, 'G + z')),
      LiftResult(both, _Verified(both, both_cert, '(G - y) / x')))


def BracketEquations(graph, edge_id, x, y, components):
  """The coefficient identities behind parallel transport.

  Args:
    graph: Multigraph G with x, y parallel and e elsewhere.
    edge_id: e.
    x, y: the parallel pair.
    components: TransportComponents from TransportComponentsOf.

  Returns:
    dict 'x<i>y<j>' -> (left, right) polynomial pair; every pair is equal
    when the original certificate is valid.
  """
  low, high = graph.GetEdge(edge_id).Ends()
  end_u, end_v = graph.GetEdge(x).Ends()
  base = graph.DeleteEdges([edge_id, x, y])
  both = {low, high, end_u, end_v}
  if len(both) == 4:
    merged = [{low, high}, {end_u, end_v}]
  else:
    merged = [both]
  psi_a = kirchhoff.KirchhoffPolynomial(base)
  psi_34 = kirchhoff.IdentifiedKirchhoff(base, [{end_u, end_v}])
  psi_12 = kirchhoff.IdentifiedKirchhoff(base, [{low, high}])
  psi_1234 = kirchhoff.IdentifiedKirchhoff(base, merged)
  c = components

  def Apply(coeffs, target):
    return poly.Sum(coeff * target.Derivative(a)
                    for a, coeff in coeffs.items())

  return {
      'x0y0': (_Zero(), 2 * c.q0 * psi_34),
      'x1y0': (psi_1234, Apply(c.p0, psi_34) + c.q0 * psi_a +
               (c.q10 + c.q01) * psi_34),
      'x1y1': (psi_12, Apply(c.p0, psi_a) + 2 * Apply(c.p1, psi_34) +
               2 * c.q10 * psi_a + 2 * c.q11 * psi_34),
      'x2y0': (_Zero(), Apply(c.p1, psi_34) + c.q01 * psi_a +
               (c.q20 + c.q02) * psi_34),
      'x3y0': (_Zero(), Apply(c.p2, psi_34) + c.q02 * psi_a),
      'x2y1': (_Zero(), Apply(c.p1, psi_a) + Apply(c.p2, psi_34) +
               Apply(c.p11, psi_34) + (c.q20 + c.q11) * psi_a),
      'x3y1': (_Zero(), Apply(c.p2, psi_a)),
      'x2y2': (_Zero(), Apply(c.p11, psi_a)),
  }
