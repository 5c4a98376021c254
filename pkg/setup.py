#!/usr/bin/env python
#
# Copyright 2013 Google Inc. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Setup configuration."""

import setuptools


setuptools.setup(
    name='pykirchhoff',
    version='0.1.0',
    description='Kirchhoff polynomials and certified Jacobian-ideal '
                'conditions for multigraphs.',
    long_description='pykirchhoff computes Kirchhoff (first Symanzik) '
                     'polynomials of multigraphs, decides condition 1 and '
                     'the simultaneous combination conditions S and T with '
                     'exact, independently verifiable certificates, and '
                     'ships a series-parallel construction toolkit.',
    url='https://github.com/pykirchhoff/pykirchhoff/',
    author='The pykirchhoff Authors',
    # Contained modules and scripts.
    packages=setuptools.find_packages(
        exclude=['pykirchhoff.tests', 'pykirchhoff.tests.*']),
    install_requires=[
        'networkx>=2.6',
        'sympy>=1.9',
    ],
    tests_require=[
        'pytest',
        'pyfakefs>=2.4',
        'mock>=1.0.1',
        'hypothesis>=6.0',
    ],
    entry_points={
        'console_scripts': [
            'kirkcheck = pykirchhoff.cli:main',
        ],
    },
    include_package_data=True,
    # PyPI package information.
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    license='Apache 2.0',
    zip_safe=True,
)
