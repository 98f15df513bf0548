#!/usr/bin/env python3
#
# Balancing a uniform family by exact linear algebra.
#
# Five 2-element subsets of {1,2,3,4}.  Five is one more than the ground-set
# size, which is exactly what the uniform finder needs.
#
from balfam import SetFamily, build_T, extended_incidence, find_balanced_uniform, verify_certificate
from balfam.family import elements
from balfam.linalg import RationalMatrix, kernel_vector, rank

fam = SetFamily.from_sets(4, [[1, 2], [3, 4], [1, 3], [2, 4], [1, 4]])
print("family:", fam)

#
# Each set becomes a 0/1 vector of length 2n that interleaves the set's
# indicator with its complement's.  {1,2} on [4] becomes (1,0, 1,0, 0,1, 0,1).
#
for s in fam.sets():
    print(f"  {s!s:8} ->", extended_incidence(sum(1 << (e - 1) for e in s), fam.n))

#
# All of these vectors satisfy T v = 0 for the n x 2n constraint matrix T(n, k),
# whose rank is n.  So they live in an n-dimensional space and any n+1 of
# them are linearly dependent.
#
T = build_T(4, 2)
print("rank T(4,2) =", rank(T))

#
# The dependency itself: an exact rational kernel vector of the 8 x 5 matrix
# whose columns are the extended incidence vectors.
#
cols = [extended_incidence(a, fam.n) for a in fam.members]
coeffs = kernel_vector(RationalMatrix.from_columns(cols))
print("kernel coefficients:", [str(c) for c in coeffs])

#
# Positive coefficients go to I1, negative ones to I2.  Equal positive
# combinations have equal supports, which gives equal unions from the x-part
# and equal intersections (via complements) from the y-part.
#
cert = find_balanced_uniform(fam)
print("I1 =", cert.i1, " I2 =", cert.i2)
print("union        =", elements(cert.union))
print("intersection =", elements(cert.intersection))
print("verified:", verify_certificate(fam, cert))
