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

"""Exceptions that can be raised by the pykirchhoff library.

Every exception derives from Error so callers (the CLI in particular) can
catch the whole family at once.  Graph and polynomial errors are raised on
malformed input; CertificateError and HypothesisError come out of the
deciders and the constructive builders.
"""


class Error(Exception):
  pass


class GraphError(Error):
  """Invalid multigraph or an illegal operation on one."""
  pass


class UnknownEdgeError(GraphError):

  def __init__(self, edge):
    self.edge = edge
    super(UnknownEdgeError, self).__init__('Unknown edge: %r' % (edge,))


class DisconnectedGraphError(GraphError):
  pass


class PolynomialError(Error):

  def __init__(self, message, position=None):
    self.position = position
    if position is not None:
      message = '%s (at position %d)' % (message, position)
    super(PolynomialError, self).__init__(message)


class NotHomogeneousError(PolynomialError):
  pass


class DegreeMismatchError(Error):
  """A graded membership problem mixes degrees inside one identity."""
  pass


class EdgeClassError(Error):

  def __init__(self, edge, edge_class):
    self.edge = edge
    self.edge_class = edge_class
    super(EdgeClassError, self).__init__(
        'Edge %r is %s, expected Regular' % (edge, edge_class))


class CertificateError(Error):
  """A certificate does not verify or does not match its graph."""
  pass


class HypothesisError(Error):
  """A construction's hypothesis or closed-form denominator is not met."""
  pass


class StabilityError(Error):
  pass


class TreeError(Error):
  """Malformed decomposition tree or arc diagram."""
  pass


class DocumentError(Error):

  def __init__(self, message, line=None, position=None):
    self.line = line
    self.position = position
    if line is not None:
      message = 'line %d: %s' % (line, message)
    elif position is not None:
      message = '%s (at position %d)' % (message, position)
    super(DocumentError, self).__init__(message)
