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

"""Tests for pykirchhoff.model."""

import json
import unittest

from pykirchhoff import errors
from pykirchhoff import model
from pykirchhoff import poly
from pykirchhoff.tests.lib import util

P = poly.Polynomial.FromString


class CertificateTest(unittest.TestCase):

  def testSCertificateJson(self):
    cert = util.ExampleHCertificate()
    obj = json.loads(cert.GetJson())
    self.assertEqual(sorted(obj.keys()), ['B', 'C', 'coeffs', 'edge', 'type'])
    self.assertEqual(obj['type'], 'S')
    self.assertEqual(obj['edge'], 'eta')
    self.assertEqual(obj['B'], '0')
    self.assertEqual(obj['C'], 'y')
    self.assertEqual(model.CertificateFromJson(cert.GetJson()), cert)

  def testTCertificateHasNoEdgeOrB(self):
    cert = model.TCertificate({'x': P('y')}, P('x + y'))
    obj = cert.ToDict()
    self.assertIsNone(obj['edge'])
    self.assertIsNone(obj['B'])
    self.assertEqual(obj['coeffs'], {'x': 'y'})
    self.assertEqual(model.CertificateFromDict(obj), cert)

  def testCond1ContractedType(self):
    cert = model.Cond1Certificate('e', {'a': P('b')}, contracted=True)
    self.assertEqual(cert.ToDict()['type'], 'cond1_contracted')
    parsed = model.CertificateFromJson(cert.GetJson())
    self.assertTrue(parsed.contracted)
    self.assertEqual(parsed.Coefficient('a'), P('b'))
    self.assertTrue(parsed.Coefficient('missing').IsZero())

  def testMalformed(self):
    bad = ['not json', '[]', '{"type": "S"}',
           '{"type": "S", "coeffs": {}, "C": "1"}',
           '{"type": "T", "coeffs": {}}',
           '{"type": "U", "coeffs": {}}',
           '{"type": "T", "coeffs": {"a": "b +"}, "C": "0"}']
    for text in bad:
      self.assertRaises(errors.CertificateError, model.CertificateFromJson,
                        text)

  def testLoopFactorJson(self):
    cert = model.Cond1Certificate.LoopFactor('l')
    self.assertEqual(cert.ToDict()['type'], 'cond1_loop')
    parsed = model.CertificateFromJson(cert.GetJson())
    self.assertTrue(parsed.loop_factor)
    self.assertFalse(parsed.contracted)
    self.assertEqual(parsed, cert)
    self.assertRaises(errors.CertificateError, model.CertificateFromJson,
                      '{"type": "cond1_loop", "coeffs": {"a": "b"}}')
    self.assertRaises(errors.CertificateError, model.Cond1Certificate, 'l',
                      {}, contracted=True, loop_factor=True)

  def testEqualityAcrossTypes(self):
    s_cert = model.SCertificate('e', {}, P('0'), P('0'))
    cond1 = model.Cond1Certificate('e', {})
    self.assertNotEqual(s_cert, cond1)
    self.assertNotEqual(s_cert, 'S')


class VerdictTest(unittest.TestCase):

  def testExitCodes(self):
    loop = model.Cond1Certificate.LoopFactor('l')
    self.assertEqual(model.Verdict(model.Verdict.HOLDS, loop).ExitCode(), 0)
    self.assertEqual(model.Verdict(model.Verdict.FAILS).ExitCode(), 1)
    self.assertEqual(model.Verdict(model.Verdict.NOT_APPLICABLE).ExitCode(), 2)

  def testPredicates(self):
    verdict = model.Verdict(model.Verdict.HOLDS,
                            model.Cond1Certificate.LoopFactor('l'),
                            reason='self-loop')
    self.assertTrue(verdict.Holds())
    self.assertFalse(verdict.Fails())
    self.assertIn('self-loop', repr(verdict))

  def testUnknownStatus(self):
    self.assertRaises(errors.Error, model.Verdict, 'Maybe')

  def testHoldsNeedsCertificate(self):
    self.assertRaises(errors.CertificateError, model.Verdict,
                      model.Verdict.HOLDS)


if __name__ == '__main__':
  unittest.main()
