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

"""All series-parallel networks up to an edge bound."""

from pykirchhoff import errors
from pykirchhoff import spbuild
from pykirchhoff.survey import basefamily


class SeriesParallelFamily(basefamily.BaseFamily):
  """Every decomposition tree with 1..max_edges leaves, realized with s, t.

  The graph id is the tree's SP expression.
  """

  def __init__(self, max_edges):
    if max_edges < 0:
      raise errors.TreeError('Edge bound must be non-negative')
    self.max_edges = max_edges

  def Members(self):
    for n in range(1, self.max_edges + 1):
      for tree in spbuild.EnumerateTrees(n):
        st_graph = tree.Realize()
        yield str(tree), st_graph.graph, st_graph

  def Describe(self):
    return 'series-parallel networks with at most %d edges' % self.max_edges
