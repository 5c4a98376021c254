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

"""Command-line interface: kirkcheck.

Exit codes: 0 Holds (or success), 1 Fails, 2 NotApplicable, 3 error.

Environment:
  PYKIRCHHOFF_WORKERS    survey worker pool size (default 1, inline)
  PYKIRCHHOFF_SEED       seed for random builds (default 20240501)
  PYKIRCHHOFF_LOG_LEVEL  logging level name (default WARNING)
"""

import argparse
import logging
import os
import random
import sys

from pykirchhoff import certbuild
from pykirchhoff import conditions
from pykirchhoff import document
from pykirchhoff import errors
from pykirchhoff import kirchhoff
from pykirchhoff import model
from pykirchhoff import spbuild
from pykirchhoff import survey
from pykirchhoff.survey import runner

logger = logging.getLogger('pykirchhoff.cli')

SEED_ENV_VAR = 'PYKIRCHHOFF_SEED'
LOG_LEVEL_ENV_VAR = 'PYKIRCHHOFF_LOG_LEVEL'
DEFAULT_SEED = 20240501

EXIT_ERROR = 3


def ConfiguredSeed():
  value = os.environ.get(SEED_ENV_VAR)
  if value is None:
    return DEFAULT_SEED
  try:
    return int(value)
  except ValueError:
    raise errors.Error('%s must be an integer, got %r' % (SEED_ENV_VAR, value))


def _Emit(text, out_path=None):
  if out_path:
    with open(out_path, 'w') as f:
      f.write(text)
  else:
    sys.stdout.write(text)


def _ReadText(path):
  with open(path) as f:
    return f.read()


def CmdKirkpoly(args):
  doc = document.ReadDocument(args.file)
  print(kirchhoff.KirchhoffPolynomial(doc.graph))
  if doc.HasSourceTerminal():
    print(kirchhoff.Breaker(doc.SourceTerminal()))
  return 0


def _PrintVerdict(verdict, with_certificate):
  text = verdict.status
  if verdict.reason:
    text += ' (%s)' % verdict.reason
  print(text)
  if verdict.subject is not None:
    print('certificate refers to the preprocessed graph:')
    print(document.GraphDocument(verdict.subject).ToJson().rstrip())
  if with_certificate and verdict.certificate is not None:
    print(verdict.certificate.GetJson())


def CmdCheck(args):
  doc = document.ReadDocument(args.file)
  if args.which != 't' and not args.edge:
    raise errors.Error('--edge is required for --which %s' % args.which)
  if args.which == 'cond1':
    verdict = conditions.CheckCond1(doc.graph, args.edge,
                                    preprocess=args.preprocess)
  elif not doc.HasSourceTerminal():
    verdict = model.Verdict(model.Verdict.NOT_APPLICABLE,
                            reason='no source and terminal')
  elif args.which == 's':
    verdict = conditions.CheckS(doc.SourceTerminal(), args.edge)
  else:
    verdict = conditions.CheckT(doc.SourceTerminal())
  _PrintVerdict(verdict, args.certificate)
  return verdict.ExitCode()


def _IntParam(params, index, name):
  if len(params) <= index:
    raise errors.Error('Missing parameter %s' % name)
  try:
    return int(params[index])
  except ValueError:
    raise errors.Error('%s must be an integer, got %r' % (name, params[index]))


def BuildDocument(kind, params, seed=DEFAULT_SEED):
  """The GraphDocument for a build command."""
  if kind == 'wheel':
    return document.GraphDocument(spbuild.Wheel(_IntParam(params, 0, 'n')))
  if kind == 'path':
    return document.GraphDocument.FromSourceTerminal(
        spbuild.Path(_IntParam(params, 0, 'n')))
  if kind == 'cycle':
    return document.GraphDocument.FromSourceTerminal(
        spbuild.Cycle(_IntParam(params, 0, 'n'), _IntParam(params, 1, 'm')))
  if kind in ('sp', 'dual'):
    if len(params) != 1:
      raise errors.Error('%s takes one expression' % kind)
    tree = document.ParseTree(params[0])
    if kind == 'dual':
      tree = tree.Dual()
    return document.GraphDocument.FromSourceTerminal(tree.Realize())
  if kind == 'replace':
    if len(params) != 3:
      raise errors.Error('replace takes BASE.json EDGE PIECE.json')
    base = document.ReadDocument(params[0])
    piece = document.ReadDocument(params[2]).SourceTerminal()
    replaced = spbuild.ReplaceEdge(base.graph, params[1], piece)
    return document.GraphDocument(replaced, base.source, base.terminal)
  if kind == 'random':
    rng = random.Random(seed)
    return document.GraphDocument(spbuild.RandomMultigraph(
        _IntParam(params, 0, 'vertices'), _IntParam(params, 1, 'edges'), rng))
  raise errors.Error('Unknown build kind %r' % (kind,))


def CmdBuild(args):
  doc = BuildDocument(args.kind, args.params, seed=args.seed)
  _Emit(doc.ToJson(), args.out)
  return 0


def CmdSurvey(args):
  family = survey.CreateFamily(args.family, *args.params)
  if args.out:
    with open(args.out, 'w', newline='') as f:
      runner.RunSurvey(family, f, workers=args.workers)
  else:
    runner.RunSurvey(family, sys.stdout, workers=args.workers)
  return 0


def CmdExportDot(args):
  doc = document.ReadDocument(args.file)
  _Emit(document.ToDot(doc.graph), args.out)
  return 0


def CmdVerify(args):
  doc = document.ReadDocument(args.file)
  certificate = model.CertificateFromJson(_ReadText(args.certificate))
  subject = doc.graph
  if not isinstance(certificate, model.Cond1Certificate):
    subject = doc.SourceTerminal()
  if conditions.VerifyCertificate(subject, certificate):
    print('verified')
    return 0
  print('does not verify')
  return 1


def CmdSearch(args):
  found = 0
  for example in conditions.CounterexampleSearch(args.max_edges):
    found += 1
    line = '%s %s' % (example.tree, example.edge)
    try:
      witness = conditions.FindStabilityWitness(example.tree, example.edge)
      line += ' witness %s' % witness.witness
    except errors.StabilityError as e:
      line += ' no witness (%s)' % e
    print(line)
  logger.info('%d pair(s) with condition 1 but not S', found)
  return 0


def CmdCohamiltonian(args):
  pieces = [document.ParseArcDiagram(text) for text in args.pieces]
  result = certbuild.CoHamiltonianCertificates(pieces)
  print(result.tree)
  for edge_id in sorted(result.s_certificates):
    print(result.s_certificates[edge_id].GetJson())
  return 0


class _ArgumentParser(argparse.ArgumentParser):
  """Usage errors exit with EXIT_ERROR; 2 already means NotApplicable."""

  def error(self, message):
    self.print_usage(sys.stderr)
    self.exit(EXIT_ERROR, 'error: %s\n' % message)


def _Parser():
  parser = _ArgumentParser(
      prog='kirkcheck',
      description='Kirchhoff polynomial ideal-membership checks.')
  parser.add_argument('--seed', type=int, default=None,
                      help='seed for random builds (env %s)' % SEED_ENV_VAR)
  parser.add_argument('--workers', type=int, default=None,
                      help='survey worker count (env %s)' %
                      runner.WORKERS_ENV_VAR)
  parser.add_argument('-v', '--verbose', action='count', default=0,
                      help='log more; repeat for debug output')
  commands = parser.add_subparsers(dest='command')
  commands.required = True

  sub = commands.add_parser('kirkpoly', help='print Psi and the breaker')
  sub.add_argument('file')
  sub.set_defaults(func=CmdKirkpoly)

  sub = commands.add_parser('check', help='decide cond1, S or T')
  sub.add_argument('file')
  sub.add_argument('--edge')
  sub.add_argument('--which', choices=['cond1', 's', 't'], default='cond1')
  sub.add_argument('--certificate', action='store_true',
                   help='print the certificate as JSON')
  sub.add_argument('--preprocess', action='store_true',
                   help='reduce the graph before deciding condition 1')
  sub.set_defaults(func=CmdCheck)

  sub = commands.add_parser('build', help='write a graph document')
  sub.add_argument('kind', choices=['wheel', 'path', 'cycle', 'sp', 'dual',
                                    'replace', 'random'])
  sub.add_argument('params', nargs='*')
  sub.add_argument('--out')
  sub.set_defaults(func=CmdBuild)

  sub = commands.add_parser('survey', help='CSV of verdicts over a family')
  sub.add_argument('family', choices=['wheels', 'sp', 'files'])
  sub.add_argument('params', nargs='*')
  sub.add_argument('--out')
  sub.set_defaults(func=CmdSurvey)

  sub = commands.add_parser('export-dot', help='DOT rendering of a document')
  sub.add_argument('file')
  sub.add_argument('--out')
  sub.set_defaults(func=CmdExportDot)

  sub = commands.add_parser('verify', help='re-check a certificate')
  sub.add_argument('file')
  sub.add_argument('certificate')
  sub.set_defaults(func=CmdVerify)

  sub = commands.add_parser('search',
                            help='pairs with condition 1 but not S')
  sub.add_argument('--max-edges', type=int, default=6)
  sub.set_defaults(func=CmdSearch)

  sub = commands.add_parser('cohamiltonian',
                            help='S certificates for a co-Hamiltonian dual')
  sub.add_argument('pieces', nargs='+',
                   help='arc diagrams such as "p1 p2 | z:0-2"')
  sub.set_defaults(func=CmdCohamiltonian)
  return parser


def _ConfigureLogging(verbose):
  if verbose >= 2:
    level = logging.DEBUG
  elif verbose == 1:
    level = logging.INFO
  else:
    name = os.environ.get(LOG_LEVEL_ENV_VAR, 'WARNING').upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
      level = logging.WARNING
  logging.basicConfig(level=level,
                      format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
  args = _Parser().parse_args(argv)
  _ConfigureLogging(args.verbose)
  try:
    if args.seed is None:
      args.seed = ConfiguredSeed()
    return args.func(args)
  except (errors.Error, IOError, OSError) as e:
    print('error: %s' % e, file=sys.stderr)
    return EXIT_ERROR


if __name__ == '__main__':
  sys.exit(main())
