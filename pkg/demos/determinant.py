"""The confluent exponential determinant, formula against elimination.

Run with ``python3 demos/determinant.py``.
"""

from fractions import Fraction

from w22.determinant import BlockSpec, build_matrix, det_bruteforce, det_formula

spec = BlockSpec(((Fraction(2), 2), (Fraction(-1, 3), 1), (Fraction(5, 4), 2)), r=1)
for row in build_matrix(spec):
    print("  ".join("%8s" % x for x in row))
print("elimination:", det_bruteforce(build_matrix(spec)))
print("formula:    ", det_formula(spec))

# repeated lambda with single-column blocks: equal columns, determinant 0
bad = BlockSpec(((Fraction(3), 1), (Fraction(3), 1)))
print("repeated lambda:", det_bruteforce(build_matrix(bad)), "formula:", det_formula(bad))
