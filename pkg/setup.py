#!/usr/bin/env python
#
# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

from setuptools import setup

version = '0.1.0'

kwargs = {
    'name' : 'lqmatch',
    'version' : version,
    'description' : 'Matchings with lower quotas',
    'long_description' : \
    """lqmatch computes and checks matchings in two-sided markets where
resources carry lower and upper quotas.

It provides stability, envy-freeness and relaxed stability checkers,
polynomial kernels and fixed-parameter algorithms for maximum envy-free
and maximum relaxed stable matchings, exhaustive oracles for small
instances, and instance generators including the reduction from
independent set.""",
    'license' : 'ISC',
    'packages' : ['lqmatch'],
    'classifiers' : [
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: ISC License (ISCL)",
        "Operating System :: POSIX",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        ],
    'python_requires': '>=3.8',
    'install_requires': ['networkx>=2.5'],
    'entry_points': {
        'console_scripts': ['lqmatch = lqmatch.cli:main'],
        },
    'test_suite': 'tests',
    'provides': ['lqmatch'],
    }

setup(**kwargs)
