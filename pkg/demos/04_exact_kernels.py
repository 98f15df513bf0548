#!/usr/bin/env python3
#
# Why exact arithmetic.
#
# The sign of each kernel coefficient decides which side of the split an
# index lands on.  Floating point can turn an exact zero into 1e-17 and move
# an index to the wrong side.  Fractions never round.
#
from fractions import Fraction

import numpy as np

from balfam.linalg import RationalMatrix, kernel_dimension, kernel_vector, rank

rows = [[1, 0, 1], [0, 1, 1], [1, 1, 2]]
m = RationalMatrix(rows)
print("rank:", rank(m), " kernel dimension:", kernel_dimension(m))
x = kernel_vector(m)
print("kernel vector:", [str(v) for v in x], " M x =", [str(v) for v in m.dot(x)])

#
# A matrix with awkward fractions: the kernel is still exact.
#
m = RationalMatrix([[Fraction(1, 3), Fraction(1, 7), 1], [Fraction(2, 9), 5, Fraction(-1, 11)]])
x = kernel_vector(m)
print("kernel vector:", [str(v) for v in x])
print("exact residual:", m.dot(x))

#
# Floating point on the same problem leaves a residue.
#
a = np.array([[1 / 3, 1 / 7, 1.0], [2 / 9, 5.0, -1 / 11]])
_, _, vt = np.linalg.svd(a)
print("float residual:", a @ vt[-1])
