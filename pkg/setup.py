# -*- coding: utf-8 -*-
#
# Copyright 2023 The hookpairs authors
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
"""hookpairs - hook pair identities of skew diagrams."""
import os
import pathlib
import re

from setuptools import find_packages, setup


def get_version():
    """Return package version as listed in `__version__` in `init.py`."""
    init_path = \
        str(pathlib.Path(pathlib.Path(__file__).parent.absolute(),
                         'hookpairs/__init__.py'))
    with open(init_path) as init_file:
        init_py = init_file.read()
    return re.search("__version__ = ['\"]([^'\"]+)['\"]", init_py).group(1)


version = get_version()


def read(fname):
    """Read description from local file."""
    with open(os.path.join(os.path.dirname(__file__), fname)) as f:
        return f.read()


setup(
    name="hookpairs",
    version=version,
    description="`hookpairs` constructs skew diagrams built from rectangles "
    "and partitions, computes their hook pair multisets and verifies the "
    "hook pair identities between them through a staircase bijection.",
    long_description=read('README.rst'),
    license='Apache 2.0',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    python_requires='>=3.8',
    install_requires=['typing-extensions'],
    tests_require=['pytest', 'hypothesis>=6.60', 'tox'],
    entry_points={
        'console_scripts': ['hookpairs=hookpairs.cli:main'],
    })
