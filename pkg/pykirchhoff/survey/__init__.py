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

"""Batch surveys of the conditions over families of graphs."""

import re

from pykirchhoff import errors
from pykirchhoff.survey import filefamily
from pykirchhoff.survey import spfamily
from pykirchhoff.survey import wheelfamily

_RANGE_RE = re.compile(r'^(\d+)\.\.(\d+)$')


def _Int(text):
  try:
    return int(text)
  except ValueError:
    raise errors.Error('Expected an integer, got %r' % (text,))


def CreateFamily(kind, *params):
  """Builds a family from its command-line description.

  Accepted forms: ('wheels', '3..5'), ('wheels', '3', '5'), ('sp', '4'),
  ('files', 'graphs/*.json').
  """
  if kind == 'wheels':
    if len(params) == 1 and _RANGE_RE.match(params[0]):
      low, high = _RANGE_RE.match(params[0]).groups()
    elif len(params) == 2:
      low, high = params
    else:
      raise errors.Error('wheels takes LOW..HIGH or LOW HIGH')
    return wheelfamily.WheelFamily(_Int(low), _Int(high))
  if kind == 'sp':
    if len(params) != 1:
      raise errors.Error('sp takes one edge bound')
    return spfamily.SeriesParallelFamily(_Int(params[0]))
  if kind == 'files':
    if len(params) != 1:
      raise errors.Error('files takes one glob pattern')
    return filefamily.FileFamily(params[0])
  raise errors.Error('Unknown family %r' % (kind,))
