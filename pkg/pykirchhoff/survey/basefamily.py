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

"""Interface for the graph families a survey runs over."""


class BaseFamily(object):
  """A finite, ordered family of graphs."""

  def Members(self):
    """Yields the family's graphs in a fixed order.

    Yields:
      (graph_id, Multigraph, SourceTerminalGraph or None) triples.  When the
      third item is None the S and T columns are not applicable.
    """
    raise NotImplementedError

  def Describe(self):
    """One-line human-readable description of the family."""
    raise NotImplementedError
