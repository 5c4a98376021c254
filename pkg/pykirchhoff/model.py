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

"""Implements the data model for certificates and verdicts.

Certificates hold explicit coefficient polynomials witnessing one of the
defining identities; they serialize to a JSON object
{type, edge, coeffs, B, C} with polynomials in canonical text form.
"""

import json

from pykirchhoff import errors
from pykirchhoff import poly


def _PolyText(value):
  return None if value is None else value.ToString()


def _ParsePoly(text, field):
  if text is None:
    return None
  try:
    return poly.Polynomial.FromString(text)
  except errors.PolynomialError as e:
    raise errors.CertificateError('Bad polynomial in %s: %s' % (field, e))


class Certificate(object):
  """Base class: coefficient polynomials keyed by edge id."""
  TYPE = None

  def __init__(self, edge, coeffs):
    self.edge = edge
    self.coeffs = dict(coeffs)

  def Coefficient(self, edge_id):
    return self.coeffs.get(edge_id, poly.Polynomial.Zero())

  def ToDict(self):
    return {
        'type': self.TYPE,
        'edge': self.edge,
        'coeffs': {k: _PolyText(v) for k, v in sorted(self.coeffs.items())},
        'B': _PolyText(getattr(self, 'b', None)),
        'C': _PolyText(getattr(self, 'c', None)),
    }

  def GetJson(self):
    return json.dumps(self.ToDict(), sort_keys=True, indent=2)

  def __eq__(self, other):
    if not isinstance(other, Certificate):
      return NotImplemented
    return self.ToDict() == other.ToDict()

  def __repr__(self):
    return '%s(%s)' % (self.__class__.__name__, self.GetJson())


class Cond1Certificate(Certificate):
  """Coefficients of Psi_G (or Psi_{G/e}) over the partials of Psi_{G-e}.

  In full form Psi_G = sum coeffs[a] dPsi_{G-e}/da; in contracted form the
  left-hand side is Psi_{G/e} = Psi_G at t_e = 0.

  A loop-factor certificate has no coefficients.  It witnesses a self-loop e
  with Psi_G = t_e Psi_{G-e} where G-e is a tree, so the partials vanish.
  """
  TYPE = 'cond1'
  CONTRACTED_TYPE = 'cond1_contracted'
  LOOP_TYPE = 'cond1_loop'

  def __init__(self, edge, coeffs, contracted=False, loop_factor=False):
    super(Cond1Certificate, self).__init__(edge, coeffs)
    if contracted and loop_factor:
      raise errors.CertificateError('A loop-factor certificate has no '
                                    'contracted form')
    self.contracted = contracted
    self.loop_factor = loop_factor

  @classmethod
  def LoopFactor(cls, edge):
    return cls(edge, {}, loop_factor=True)

  def ToDict(self):
    result = super(Cond1Certificate, self).ToDict()
    if self.contracted:
      result['type'] = self.CONTRACTED_TYPE
    elif self.loop_factor:
      result['type'] = self.LOOP_TYPE
    return result


class SCertificate(Certificate):
  """Shared A_j with corrections B (Psi identity) and C (breaker identity)."""
  TYPE = 'S'

  def __init__(self, edge, coeffs, b, c):
    super(SCertificate, self).__init__(edge, coeffs)
    self.b = b
    self.c = c


class TCertificate(Certificate):
  TYPE = 'T'

  def __init__(self, coeffs, c):
    super(TCertificate, self).__init__(None, coeffs)
    self.c = c


def CertificateFromDict(data):
  """Parses the JSON object form of any certificate.

  Raises:
    CertificateError: on a malformed object.
  """
  if not isinstance(data, dict) or not isinstance(data.get('coeffs'), dict):
    raise errors.CertificateError('Certificate must be an object with coeffs')
  kind = data.get('type')
  coeffs = {k: _ParsePoly(v, k) for k, v in data['coeffs'].items()}
  b = _ParsePoly(data.get('B'), 'B')
  c = _ParsePoly(data.get('C'), 'C')
  if kind == Cond1Certificate.LOOP_TYPE:
    if coeffs:
      raise errors.CertificateError('A loop-factor certificate has no coeffs')
    return Cond1Certificate.LoopFactor(data.get('edge'))
  if kind in (Cond1Certificate.TYPE, Cond1Certificate.CONTRACTED_TYPE):
    return Cond1Certificate(data.get('edge'), coeffs,
                            contracted=kind == Cond1Certificate.CONTRACTED_TYPE)
  if kind == SCertificate.TYPE:
    if b is None or c is None:
      raise errors.CertificateError('S certificate needs B and C')
    return SCertificate(data.get('edge'), coeffs, b, c)
  if kind == TCertificate.TYPE:
    if c is None:
      raise errors.CertificateError('T certificate needs C')
    return TCertificate(coeffs, c)
  raise errors.CertificateError('Unknown certificate type %r' % (kind,))


def CertificateFromJson(text):
  try:
    data = json.loads(text)
  except ValueError as e:
    raise errors.CertificateError('Certificate is not JSON: %s' % e)
  return CertificateFromDict(data)


class Verdict(object):
  """Outcome of a decider.

  Attributes:
    status: HOLDS, FAILS or NOT_APPLICABLE.
    certificate: the witnessing certificate when status is HOLDS.
    edge_class: EdgeClass of the distinguished edge, None for T(G).
    reason: short free text (why a trivial case applied, NotApplicable).
    subject: the graph the certificate refers to, when it differs from the
        graph the caller asked about (after preprocessing).
  """
  HOLDS = 'Holds'
  FAILS = 'Fails'
  NOT_APPLICABLE = 'NotApplicable'

  _EXIT_CODES = {HOLDS: 0, FAILS: 1, NOT_APPLICABLE: 2}

  def __init__(self, status, certificate=None, edge_class=None, reason=None,
               subject=None):
    if status not in self._EXIT_CODES:
      raise errors.Error('Unknown verdict status %r' % (status,))
    if status == self.HOLDS and certificate is None:
      raise errors.CertificateError('A Holds verdict needs a certificate')
    self.status = status
    self.certificate = certificate
    self.edge_class = edge_class
    self.reason = reason
    self.subject = subject

  def Holds(self):
    return self.status == Verdict.HOLDS

  def Fails(self):
    return self.status == Verdict.FAILS

  def ExitCode(self):
    return self._EXIT_CODES[self.status]

  def __repr__(self):
    return 'Verdict(%s, edge_class=%s, reason=%r)' % (
        self.status, self.edge_class, self.reason)
