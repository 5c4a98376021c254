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

"""Graph documents matched by a glob pattern."""

import glob
import os

from pykirchhoff import document
from pykirchhoff.survey import basefamily


class FileFamily(basefamily.BaseFamily):
  """Documents in sorted path order; the graph id is the file's base name."""

  def __init__(self, pattern):
    self.pattern = pattern

  def Paths(self):
    return sorted(glob.glob(self.pattern))

  def Members(self):
    for path in self.Paths():
      doc = document.ReadDocument(path)
      st_graph = doc.SourceTerminal() if doc.HasSourceTerminal() else None
      yield os.path.basename(path), doc.graph, st_graph

  def Describe(self):
    return 'files matching %s' % self.pattern
