# encoding: utf-8
"""
pyGentle computes canonical bases and dimensions of morphism spaces between
indecomposable objects of the bounded derived category of a gentle algebra,
working purely with homotopy strings and bands, and checks every answer
against exact linear algebra on explicit complexes of projective modules.

Modules:
    quivers     - bound quivers, gentle algebras, paths and the Λ(r,n,m) family
    words       - homotopy letters, strings, bands and infinite strings
    complexes   - complexes of projectives, unfolded diagrams, graded maps
    morphisms   - graph maps, quasi-graph maps, single and double maps
    bands       - dimensions for r-dimensional band complexes
    arquiver    - irreducible maps (Auslander-Reiten arrows) out of strings
    oracle      - chain maps modulo homotopy by elimination over a field
    fields      - GF(p) and the rationals, and the active field
    cli         - the `pygentle` command line tool

Other modules:
    results     - TSV, JSON and DOT output
    multisweep  - process-parallel sweeps over word pairs
    utility
    random

A short session:

    >>> from pyGentle import quivers, words, morphisms
    >>> A = quivers.discrete_algebra(1, 2, 1)
    >>> w = words.parse_word("(1_0,0,0)", A)
    >>> morphisms.hom_dim(w, w)
    2

$Id$
"""

__version__ = '0.1.0'
__all__ = ["common", "fields", "quivers", "words", "complexes", "morphisms", "bands", "arquiver",
           "oracle", "results", "multisweep", "utility", "random", "cli"]
