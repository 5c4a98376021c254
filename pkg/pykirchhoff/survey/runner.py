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

"""Runs the deciders over a family and writes one CSV row per edge.

Graphs are evaluated independently, inline or on a process pool whose size
comes from PYKIRCHHOFF_WORKERS; rows are written in family order whatever
the completion order.
"""

import collections
import csv
import logging
import os
import time

from concurrent import futures

from pykirchhoff import conditions
from pykirchhoff import errors
from pykirchhoff import model

logger = logging.getLogger('pykirchhoff.survey.runner')

WORKERS_ENV_VAR = 'PYKIRCHHOFF_WORKERS'

ROW_FIELDS = ['graph_id', 'edge_id', 'edge_class', 'cond1', 's',
              't_of_graph', 'wall_millis']

NOT_APPLICABLE = 'n/a'
ERROR = 'error'

SurveyRow = collections.namedtuple('SurveyRow', ROW_FIELDS)


def ConfiguredWorkers():
  value = os.environ.get(WORKERS_ENV_VAR, '1')
  try:
    workers = int(value)
  except ValueError:
    raise errors.Error('%s must be an integer, got %r' %
                       (WORKERS_ENV_VAR, value))
  return max(workers, 1)


def _Cell(graph, verdict):
  """Renders a verdict, re-checking any certificate it carries."""
  if verdict.status == model.Verdict.NOT_APPLICABLE:
    return NOT_APPLICABLE
  if verdict.certificate is not None:
    subject = verdict.subject if verdict.subject is not None else graph
    if not conditions.VerifyCertificate(subject, verdict.certificate):
      logger.error('Certificate did not re-verify: %r', verdict)
      return ERROR
  return 'holds' if verdict.Holds() else 'fails'


def _Guarded(function, *args):
  try:
    return function(*args)
  except errors.Error as e:
    logger.warning('%s failed: %s', function.__name__, e)
    return ERROR


def _TColumn(st_graph):
  return _Cell(st_graph, conditions.CheckT(st_graph))


def _SColumn(st_graph, edge_id):
  return _Cell(st_graph, conditions.CheckS(st_graph, edge_id))


def _EdgeCells(graph, st_graph, edge_id):
  cond1 = _Cell(graph, conditions.CheckCond1(graph, edge_id))
  s = NOT_APPLICABLE
  if st_graph is not None:
    s = _Guarded(_SColumn, st_graph, edge_id)
  return cond1, s


def EvaluateGraph(member):
  """All rows of one family member.

  Args:
    member: (graph_id, Multigraph, SourceTerminalGraph or None).

  Returns:
    List of SurveyRow, one per edge in graph order.  Failures are recorded
    in the row instead of raised.
  """
  graph_id, graph, st_graph = member
  t_of_graph = NOT_APPLICABLE
  if st_graph is not None:
    t_of_graph = _Guarded(_TColumn, st_graph)
  rows = []
  for edge_id in graph.EdgeIds():
    start = time.time()
    try:
      edge_class = graph.ClassifyEdge(edge_id)
      cond1, s = _EdgeCells(graph, st_graph, edge_id)
    except errors.Error as e:
      logger.warning('%s/%s: %s', graph_id, edge_id, e)
      edge_class, cond1, s = ERROR, ERROR, ERROR
    millis = int(round((time.time() - start) * 1000))
    rows.append(SurveyRow(graph_id, edge_id, edge_class, cond1, s,
                          t_of_graph, millis))
  logger.debug('Evaluated %s: %d rows', graph_id, len(rows))
  return rows


def _Map(members, workers):
  if workers <= 1:
    return map(EvaluateGraph, members)
  executor = futures.ProcessPoolExecutor(max_workers=workers)
  try:
    return list(executor.map(EvaluateGraph, members))
  finally:
    executor.shutdown()


def RunSurvey(family, out, workers=None):
  """Writes the CSV for a family to the text stream out.

  Args:
    family: a BaseFamily.
    out: a writable text stream.
    workers: pool size; defaults to PYKIRCHHOFF_WORKERS, 1 runs inline.

  Returns:
    The list of SurveyRow written.
  """
  if workers is None:
    workers = ConfiguredWorkers()
  logger.info('Surveying %s with %d worker(s)', family.Describe(), workers)
  writer = csv.writer(out, lineterminator='\n')
  writer.writerow(ROW_FIELDS)
  written = []
  for rows in _Map(list(family.Members()), workers):
    for row in rows:
      writer.writerow(row)
      written.append(row)
  return written
