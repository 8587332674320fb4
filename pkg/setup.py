#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of mil

from setuptools import setup

with open('mil/__init__.py') as i:
    version = next(r for r in i.readlines() if '__version__' in r).split('=')[1].strip('"\' \n')

setup(
    name='mil',
    version=version,
    description='invariant rings of finite matrix groups and their top local cohomology',
    long_description='''Exact computations over finite fields: group closure and classification,
invariant rings, Groebner bases, and graded strands of top local cohomology.''',
    keywords='invariant theory, local cohomology, finite fields, groebner bases',
    packages=['mil'],
    license='GPL-3.0',
    include_package_data=True,
    package_data={'mil': ['problems/*.json']},
    python_requires='>=3.10',
    install_requires=[
        'sympy>=1.12',
        'python-dotenv>=0.21.0',
    ],
    entry_points={
        'console_scripts': [
            'mil=mil.cli:main',
        ],
    },
)
