#!/usr/bin/env python3
# Copyright 2022 CodeNotary, Inc. All rights reserved.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#       http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(name='kasami-py',
      version='0.1.0',
      license="Apache License Version 2.0",
      description='Exact spectra and identities for generalized Kasami codes over GF(2^m)',
      long_description=long_description,
      long_description_content_type="text/markdown",
      author='Codenotary',
      packages=['kasami', 'kasami.algebra', 'kasami.code', 'kasami.handler'],
      keywords=['kasami', 'cyclic codes', 'finite fields', 'gaussian binomial'],
      install_requires=[
          'numpy>=1.20',
          'sympy>=1.9',
      ],
      entry_points={
          'console_scripts': ['kasami=kasami.cli:main'],
      },
      classifiers=[
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Mathematics',
          "License :: OSI Approved :: Apache Software License",
          "Operating System :: OS Independent",
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
      ],
      python_requires='>=3.8',
      )
