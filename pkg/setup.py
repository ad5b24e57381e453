#!/usr/bin/env python

from setuptools import setup

setup(
    name = "pyGentle",
    version = "0.1.0",
    package_dir={'pyGentle': 'src'},
    packages = ['pyGentle', 'pyGentle.results'],
    install_requires = ['numpy', 'sympy', 'networkx'],
    entry_points = {'console_scripts': ['pygentle = pyGentle.cli:main']},
    author = "The pyGentle developers",
    description = "Morphism spaces between complexes over gentle algebras, from string combinatorics",
    long_description = """pyGentle computes canonical bases and dimensions of Hom spaces between
indecomposable objects (string and band complexes) in the bounded derived category of a gentle
algebra, together with irreducible maps starting at string complexes.

Every combinatorial answer can be checked against an independent exact linear algebra oracle that
works on the explicit complexes of projective modules, over GF(p) or over the rationals.""",
    license = "CeCILL http://www.cecill.info",
    keywords = "gentle algebra derived category homotopy string band representation theory",
    classifiers = ['Development Status :: 4 - Beta',
                   'Environment :: Console',
                   'Intended Audience :: Science/Research',
                   'Natural Language :: English',
                   'Operating System :: OS Independent',
                   'Programming Language :: Python',
                   'Topic :: Scientific/Engineering :: Mathematics'],
)
