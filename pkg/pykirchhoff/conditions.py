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

"""Deciders and verifiers for condition 1, S(G,e) and T(G).

Condition 1 for (G, e) asks whether Psi_G lies in the ideal generated by the
partial derivatives of Psi_{G-e}.  All polynomials involved are homogeneous,
so each question is a graded linear system (see linsolve) and a positive
answer comes with an explicit certificate that verify_certificate re-checks
by exact arithmetic.
"""

import collections
import logging

from pykirchhoff import errors
from pykirchhoff import graph as graph_lib
from pykirchhoff import kirchhoff
from pykirchhoff import linsolve
from pykirchhoff import model
from pykirchhoff import poly
from pykirchhoff import spbuild

logger = logging.getLogger('pykirchhoff.conditions')

EdgeClass = graph_lib.EdgeClass
Verdict = model.Verdict

PreprocessResult = collections.namedtuple('PreprocessResult',
                                          ['graph', 'edge', 'steps'])
StabilityWitness = collections.namedtuple(
    'StabilityWitness', ['witness', 'joined', 'verdict'])
Counterexample = collections.namedtuple('Counterexample',
                                        ['tree', 'graph', 'edge'])
DeltaYReport = collections.namedtuple(
    'DeltaYReport', ['delta_graph', 'y_graph', 'delta_verdict', 'y_verdict',
                     'agree'])

_A = 'A'


def _Graph(graph):
  if isinstance(graph, graph_lib.SourceTerminalGraph):
    return graph.graph
  return graph


def _Psi(graph):
  return kirchhoff.KirchhoffPolynomial(graph)


def _Degree(polynomial):
  return polynomial.Degree() or 0


def Cond1Problem(graph, edge_id, contracted=False):
  """Psi_G (or Psi_{G/e}) against the partials of Psi_{G-e}."""
  rest = graph.DeleteEdge(edge_id)
  psi_rest = _Psi(rest)
  target = _Psi(graph)
  if contracted:
    target = target.Substitute(edge_id, 0)
  summands = [linsolve.Summand(psi_rest.Derivative(j), j)
              for j in rest.EdgeIds()]
  return linsolve.GradedMembershipProblem(
      [linsolve.Identity(target, summands)],
      {j: 2 for j in rest.EdgeIds()})


def SProblem(st_graph, edge_id, fix=None):
  """The shared-slot system of S(G, e); fix='B' or 'C' pins that term to 0."""
  graph = st_graph.graph
  psi = _Psi(graph)
  breaker = kirchhoff.Breaker(st_graph)
  others = [j for j in graph.EdgeIds() if j != edge_id]
  identities = []
  for target, correction in ((psi, 'B'), (breaker, 'C')):
    first = target.Derivative(edge_id)
    summands = [linsolve.Summand(first.Derivative(j), (_A, j)) for j in others]
    if fix != correction:
      summands.append(linsolve.Summand(first, correction))
    identities.append(linsolve.Identity(target, summands))
  degrees = {(_A, j): 2 for j in others}
  degrees.update({'B': 1, 'C': 1})
  return linsolve.GradedMembershipProblem(identities, degrees)


def TProblem(st_graph):
  """Breaker = sum A_j dPsi/dj and sum A_j dBreaker/dj = C * Breaker."""
  graph = st_graph.graph
  psi = _Psi(graph)
  breaker = kirchhoff.Breaker(st_graph)
  edges = graph.EdgeIds()
  first = [linsolve.Summand(psi.Derivative(j), (_A, j)) for j in edges]
  second = [linsolve.Summand(breaker.Derivative(j), (_A, j)) for j in edges]
  second.append(linsolve.Summand(-breaker, 'C'))
  degrees = {(_A, j): 2 for j in edges}
  degrees['C'] = 1
  return linsolve.GradedMembershipProblem(
      [linsolve.Identity(breaker, first),
       linsolve.Identity(poly.Polynomial.Zero(), second)], degrees)


def _Slots(assignment, edges):
  return {j: assignment[(_A, j)] for j in edges}


def _CheckSound(graph, certificate):
  if not VerifyCertificate(graph, certificate):
    raise errors.CertificateError('Decider produced an invalid certificate')


def SelfLoopCertificate(graph, edge_id):
  """t_e x_j / deg Psi_{G-e}: Euler's identity applied to Psi_G = t_e Psi_{G-e}.

  When G-e is a tree the partials vanish and the loop-factor form is returned.
  """
  rest = graph.DeleteEdge(edge_id)
  degree = _Degree(_Psi(rest))
  if not degree:
    return model.Cond1Certificate.LoopFactor(edge_id)
  t_e = poly.Var(edge_id)
  coeffs = {j: t_e * poly.Var(j) / degree for j in rest.EdgeIds()}
  return model.Cond1Certificate(edge_id, coeffs)


def CheckCond1(graph, edge_id, preprocess=False):
  """Decides condition 1 for (G, e).

  Self-loops hold, bridges and tree complements fail without solving; a
  regular edge is decided by the graded membership system with degree-2
  cofactors.

  Args:
    graph: a connected Multigraph (or SourceTerminalGraph).
    edge_id: the distinguished edge.
    preprocess: reduce the graph first with Preprocess; the certificate then
        refers to the reduced graph, reported as the verdict's subject.

  Returns:
    A Verdict.

  Raises:
    DisconnectedGraphError: if the graph is disconnected.
    UnknownEdgeError: if the edge is not in the graph.
  """
  graph = _Graph(graph)
  edge_class = graph.ClassifyEdge(edge_id)
  if edge_class == EdgeClass.SELF_LOOP:
    logger.debug('%s is a self-loop: condition 1 holds', edge_id)
    return Verdict(Verdict.HOLDS, SelfLoopCertificate(graph, edge_id),
                   edge_class, reason='self-loop')
  if edge_class in (EdgeClass.BRIDGE, EdgeClass.TREE_COMPLEMENT):
    logger.debug('%s is a %s: condition 1 fails', edge_id, edge_class)
    return Verdict(Verdict.FAILS, edge_class=edge_class,
                   reason=edge_class.lower())

  subject = None
  if preprocess:
    reduced = Preprocess(graph, edge_id)
    if reduced.steps:
      subject = reduced.graph
      verdict = CheckCond1(reduced.graph, reduced.edge)
      return Verdict(verdict.status, verdict.certificate, edge_class,
                     reason=verdict.reason, subject=subject)

  result = linsolve.SolveProblem(Cond1Problem(graph, edge_id))
  if not result.feasible:
    return Verdict(Verdict.FAILS, edge_class=edge_class)
  certificate = model.Cond1Certificate(edge_id, result.assignment)
  _CheckSound(graph, certificate)
  return Verdict(Verdict.HOLDS, certificate, edge_class)


def CheckCond1ViaContraction(graph, edge_id):
  """Decides Psi_{G/e} in the ideal of partials of Psi_{G-e} for regular e.

  Raises:
    EdgeClassError: if e is not regular.
  """
  graph = _Graph(graph)
  edge_class = graph.ClassifyEdge(edge_id)
  if edge_class != EdgeClass.REGULAR:
    raise errors.EdgeClassError(edge_id, edge_class)
  result = linsolve.SolveProblem(Cond1Problem(graph, edge_id, contracted=True))
  if not result.feasible:
    return Verdict(Verdict.FAILS, edge_class=edge_class)
  certificate = model.Cond1Certificate(edge_id, result.assignment,
                                       contracted=True)
  _CheckSound(graph, certificate)
  return Verdict(Verdict.HOLDS, certificate, edge_class)


def CheckS(st_graph, edge_id, fix=None):
  """Decides S(G, e) by one shared-slot graded system.

  Args:
    st_graph: a connected SourceTerminalGraph.
    edge_id: the distinguished edge.
    fix: None, or 'B' / 'C' to require that correction term to vanish.
  """
  if fix not in (None, 'B', 'C'):
    raise errors.Error('fix must be None, "B" or "C"')
  edge_class = st_graph.graph.ClassifyEdge(edge_id)
  result = linsolve.SolveProblem(SProblem(st_graph, edge_id, fix=fix))
  if not result.feasible:
    return Verdict(Verdict.FAILS, edge_class=edge_class)
  others = [j for j in st_graph.EdgeIds() if j != edge_id]
  certificate = model.SCertificate(edge_id,
                                   _Slots(result.assignment, others),
                                   result.assignment['B'],
                                   result.assignment['C'])
  _CheckSound(st_graph, certificate)
  return Verdict(Verdict.HOLDS, certificate, edge_class)


def CheckT(st_graph):
  if not st_graph.graph.IsConnected():
    raise errors.DisconnectedGraphError('T(G) needs a connected graph')
  result = linsolve.SolveProblem(TProblem(st_graph))
  if not result.feasible:
    return Verdict(Verdict.FAILS)
  certificate = model.TCertificate(
      _Slots(result.assignment, st_graph.EdgeIds()), result.assignment['C'])
  _CheckSound(st_graph, certificate)
  return Verdict(Verdict.HOLDS, certificate)


def _CheckKeys(certificate, allowed):
  extra = set(certificate.coeffs) - set(allowed)
  if extra:
    raise errors.CertificateError('Certificate mentions edges outside the '
                                  'graph: %s' % sorted(extra))


def _Combination(certificate, generators):
  return poly.Sum(certificate.Coefficient(j) * g for j, g in generators)


def VerifyCertificate(graph, certificate):
  """Checks a certificate's defining identities by exact arithmetic.

  Args:
    graph: Multigraph for condition 1 certificates, SourceTerminalGraph for
        S and T certificates (a SourceTerminalGraph is accepted for all).
    certificate: a Cond1Certificate, SCertificate or TCertificate.

  Returns:
    True iff the identities hold.

  Raises:
    CertificateError: if the certificate does not match the graph's shape.
  """
  if isinstance(certificate, model.Cond1Certificate):
    plain = _Graph(graph)
    rest = plain.DeleteEdge(certificate.edge)
    _CheckKeys(certificate, rest.EdgeIds())
    psi_rest = _Psi(rest)
    target = _Psi(plain)
    if certificate.loop_factor:
      if not plain.GetEdge(certificate.edge).IsSelfLoop():
        return False
      return (psi_rest.IsConstant() and
              target == poly.Var(certificate.edge) * psi_rest)
    if certificate.contracted:
      target = target.Substitute(certificate.edge, 0)
    return target == _Combination(
        certificate, [(j, psi_rest.Derivative(j)) for j in rest.EdgeIds()])

  if not isinstance(graph, graph_lib.SourceTerminalGraph):
    raise errors.CertificateError('%s certificates need a source-terminal '
                                  'graph' % certificate.TYPE)
  psi = _Psi(graph.graph)
  breaker = kirchhoff.Breaker(graph)
  edges = graph.EdgeIds()

  if isinstance(certificate, model.SCertificate):
    edge_id = certificate.edge
    graph.graph.GetEdge(edge_id)
    _CheckKeys(certificate, [j for j in edges if j != edge_id])
    for target, correction in ((psi, certificate.b), (breaker, certificate.c)):
      first = target.Derivative(edge_id)
      combination = _Combination(
          certificate, [(j, first.Derivative(j)) for j in edges])
      if target != combination + correction * first:
        return False
    return True

  if isinstance(certificate, model.TCertificate):
    _CheckKeys(certificate, edges)
    if breaker != _Combination(certificate,
                               [(j, psi.Derivative(j)) for j in edges]):
      return False
    return (_Combination(certificate,
                         [(j, breaker.Derivative(j)) for j in edges]) ==
            certificate.c * breaker)

  raise errors.CertificateError('Unknown certificate %r' % (certificate,))


def Cond1FromS(graph, certificate):
  """Turns an S(G, e) certificate into a condition 1 certificate.

  Uses coeffs_j = A_j + B x_j / (l - 1) with l the degree of Psi_G.

  Raises:
    HypothesisError: if Psi_G has degree below 2.
  """
  plain = _Graph(graph)
  degree = _Degree(_Psi(plain))
  if degree < 2:
    raise errors.HypothesisError('Need loop number at least 2, got %d' %
                                 degree)
  coeffs = {}
  for j in plain.DeleteEdge(certificate.edge).EdgeIds():
    coeffs[j] = (certificate.Coefficient(j) +
                 certificate.b * poly.Var(j) / (degree - 1))
  return model.Cond1Certificate(certificate.edge, coeffs)


def ContractedToFull(graph, certificate):
  """Adds t_e x_j / (l - 1) to each coefficient of a contracted certificate."""
  if not certificate.contracted:
    return certificate
  plain = _Graph(graph)
  degree = _Degree(_Psi(plain))
  if degree < 2:
    raise errors.HypothesisError('Need loop number at least 2')
  t_e = poly.Var(certificate.edge)
  coeffs = {j: certificate.Coefficient(j) + t_e * poly.Var(j) / (degree - 1)
            for j in plain.DeleteEdge(certificate.edge).EdgeIds()}
  return model.Cond1Certificate(certificate.edge, coeffs)


def FullToContracted(certificate):
  if certificate.contracted or certificate.loop_factor:
    return certificate
  coeffs = {j: c.Substitute(certificate.edge, 0)
            for j, c in certificate.coeffs.items()}
  return model.Cond1Certificate(certificate.edge, coeffs, contracted=True)


def _EdgeBlock(graph, edge_id):
  for block in graph.BiconnectedComponents():
    if edge_id in block:
      return block
  raise errors.UnknownEdgeError(edge_id)


def _PreprocessSteps(graph, edge_id):
  """Candidate reductions that preserve the condition 1 verdict, in order."""
  block = _EdgeBlock(graph, edge_id)
  if len(block) < len(graph.Edges()):
    piece = graph.EdgeSubgraph(sorted(block))
    if piece.ClassifyEdge(edge_id) == EdgeClass.REGULAR:
      yield piece, 'restrict to the block of %s' % edge_id

  for ids in graph.ParallelClasses():
    if len(ids) >= 3:
      drop = [j for j in ids if j != edge_id][-1]
      yield graph.DeleteEdge(drop), 'drop %s from a parallel class' % drop

  for first, second in graph.TwoEdgeCuts():
    contract = first if first != edge_id else second
    yield (graph.ContractEdge(contract),
           'contract %s of the cut {%s, %s}' % (contract, first, second))


def Preprocess(graph, edge_id):
  """Applies verdict-preserving reductions until none applies.

  Reductions: restrict to the block of e (when e stays regular there), trim
  parallel classes to two edges keeping e, and contract one edge other than
  e of every two-edge cut.  A reduction that would leave e non-regular is
  skipped.

  Raises:
    EdgeClassError: if e is not regular.
  """
  graph = _Graph(graph)
  edge_class = graph.ClassifyEdge(edge_id)
  if edge_class != EdgeClass.REGULAR:
    raise errors.EdgeClassError(edge_id, edge_class)
  steps = []
  while True:
    for candidate, description in _PreprocessSteps(graph, edge_id):
      if candidate.ClassifyEdge(edge_id) == EdgeClass.REGULAR:
        break
      logger.debug('preprocess: skipping %s', description)
    else:
      break
    logger.debug('preprocess: %s', description)
    graph = candidate
    steps.append(description)
  return PreprocessResult(graph, edge_id, steps)


def _PathTo(tree, edge_id):
  """Nodes from the root down to the leaf of edge_id."""
  if tree.IsLeaf():
    return [tree] if tree.edge == edge_id else None
  for child in tree.children:
    below = _PathTo(child, edge_id)
    if below is not None:
      return [tree] + below
  return None


def _FreshTree(tree, taken, suffix='_h'):
  if tree.IsLeaf():
    name = tree.edge + suffix
    while name in taken:
      name += suffix
    taken.add(name)
    return spbuild.SPTree.Leaf(name)
  return spbuild.SPTree(tree.kind,
                        children=[_FreshTree(c, taken, suffix)
                                  for c in tree.children])


def _ParallelComplements(tree, edge_id):
  """Siblings of e's branch at each parallel ancestor, lowest node first."""
  path = _PathTo(tree, edge_id)
  complements = []
  for depth in range(len(path) - 2, -1, -1):
    node = path[depth]
    if node.kind != spbuild.PARALLEL:
      continue
    rest = [c for c in node.children if c is not path[depth + 1]]
    complements.append(
        rest[0] if len(rest) == 1 else spbuild.SPTree.Parallel(*rest))
  return complements


def FindStabilityWitness(tree, edge_id):
  """Finds H such that condition 1 for e fails in G star H.

  H is a fresh copy of the parallel complement B of e at one of its parallel
  ancestors, tried from the lowest ancestor up; it is always joined in
  parallel with the whole of G.

  Args:
    tree: SPTree of G.
    edge_id: an edge with 1(G, e) holding and S(G, e) failing.

  Returns:
    StabilityWitness(witness=H, joined=G star H, verdict).

  Raises:
    StabilityError: if the preconditions do not hold or no candidate makes
        condition 1 fail.
  """
  st_graph = tree.Realize()
  if not CheckCond1(st_graph.graph, edge_id).Holds():
    raise errors.StabilityError('Condition 1 does not hold for %s' % edge_id)
  if CheckS(st_graph, edge_id).Holds():
    raise errors.StabilityError('S holds for %s; no witness exists' % edge_id)
  complements = _ParallelComplements(tree, edge_id)
  if not complements:
    raise errors.StabilityError('%s has no parallel ancestor' % edge_id)
  for complement in complements:
    copy = _FreshTree(complement, set(tree.Leaves()))
    witness = copy.Realize()
    joined = spbuild.Join(st_graph, witness, spbuild.PARALLEL)
    verdict = CheckCond1(joined.graph, edge_id)
    if verdict.Fails():
      logger.debug('Stability witness for %s: %s', edge_id, copy)
      return StabilityWitness(witness, joined, verdict)
    logger.debug('Joining %s keeps condition 1 for %s', copy, edge_id)
  raise errors.StabilityError('No parallel complement breaks condition 1 '
                              'for %s' % edge_id)


def _Representatives(st_graph):
  """Edge ids up to transpositions that fix both Psi and the breaker."""
  psi = _Psi(st_graph.graph)
  breaker = kirchhoff.Breaker(st_graph)
  chosen = []
  for edge_id in st_graph.EdgeIds():
    if not any(psi.SwapVariables(edge_id, other) == psi and
               breaker.SwapVariables(edge_id, other) == breaker
               for other in chosen):
      chosen.append(edge_id)
  return chosen


def CounterexampleSearch(max_edges):
  """Series-parallel (G, e) with condition 1 holding and S(G, e) failing.

  Networks are enumerated up to reordering of children; within one network,
  edges exchanged by a symmetry of Psi and the breaker are checked once.

  Raises:
    HypothesisError: if max_edges exceeds 10.
  """
  if max_edges > 10:
    raise errors.HypothesisError('Search is limited to 10 edges')
  found = []
  for size in range(1, max_edges + 1):
    for tree in spbuild.EnumerateTrees(size):
      st_graph = tree.Realize()
      for edge_id in _Representatives(st_graph):
        if (st_graph.graph.ClassifyEdge(edge_id) != EdgeClass.REGULAR or
            not CheckCond1(st_graph.graph, edge_id).Holds()):
          continue
        if CheckS(st_graph, edge_id).Fails():
          logger.debug('Candidate %s with edge %s', tree, edge_id)
          found.append(Counterexample(tree, st_graph, edge_id))
  return found


def DeltaYExperiment(graph, triangle, edge_id):
  """Reports condition 1 for e before and after a Delta-Y transform.

  No claim is made about agreement; the report simply records it.
  """
  graph = _Graph(graph)
  if edge_id in triangle:
    raise errors.GraphError('The marked triangle must not contain %s' %
                            edge_id)
  transformed = spbuild.DeltaToY(graph, triangle)
  before = CheckCond1(graph, edge_id)
  after = CheckCond1(transformed, edge_id)
  return DeltaYReport(graph, transformed, before, after,
                      before.status == after.status)
