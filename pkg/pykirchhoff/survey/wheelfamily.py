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

"""Wheels W_lo .. W_hi."""

from pykirchhoff import errors
from pykirchhoff import spbuild
from pykirchhoff.survey import basefamily


class WheelFamily(basefamily.BaseFamily):
  """Wheels with low..high spokes; wheels carry no source and terminal."""

  def __init__(self, low, high):
    if low < 3 or high < low:
      raise errors.GraphError('Wheel range %d..%d is empty or below 3' %
                              (low, high))
    self.low = low
    self.high = high

  def Members(self):
    for n in range(self.low, self.high + 1):
      yield 'W%d' % n, spbuild.Wheel(n), None

  def Describe(self):
    return 'wheels %d..%d' % (self.low, self.high)
