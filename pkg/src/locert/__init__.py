"""locert: exact left-orderability certificates for graph-manifold
fundamental groups.

Subpackages by subject:

* ``braid``     - B3 word problem, handle reduction, the Dubrovina-
                  Dubrovin ordering and its conjugates, and the
                  peripheral subgroup of the trefoil exterior
* ``klein``     - the Klein-bottle group, its two distinguished
                  orderings, and fillings of the twisted I-bundle
* ``slopes``    - slope calculus on torus boundaries
* ``fpgroup``   - presentations, Smith-normal-form abelianization,
                  Dehn-filling relators, amalgams, Todd-Coxeter
* ``seifert``   - Brieskorn recognition, Moser surgery, left-orderable-
                  slope verdict rules, splice-tree certificates, and the
                  Heegaard Floer surgery-rank calculator
* ``alexander`` - branched-cover homology orders by exact resultants
* ``compat``    - the mechanized orderings-compatibility check for the
                  trefoil / Klein-bottle gluing
* ``cli``       - the ``locert`` command-line frontend

All arithmetic is exact (Python integers); no floating point is used
anywhere in a verdict.
"""

__version__ = "0.1.0"
