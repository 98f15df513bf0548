#!/usr/bin/env python3
#
# The size thresholds cannot be lowered.
#
# Two witness families sit exactly one member below what the finders need,
# and the brute-force oracle confirms that neither is balanced.
#
from balfam import brute_force_find, find_union_balanced, gen_nonuniform_sharp, gen_uniform_sharp

#
# Uniform case: {2,3} plus {1,i} for i = 2..n.  That is n members, all of
# size 2, and no balanced split exists.
#
for n in range(3, 9):
    fam = gen_uniform_sharp(n)
    res = brute_force_find(fam, "balanced")
    print(f"uniform-sharp n={n}: {len(fam)} members, balanced split: {res.found}, "
          f"pairs examined: {res.pairs_examined}")

#
# General case: all singletons plus the whole ground set.  That is n+1
# members.  Unions can be matched ({1..n} against all the singletons), but
# intersections cannot.
#
for n in range(2, 9):
    fam = gen_nonuniform_sharp(n)
    balanced = brute_force_find(fam, "balanced").found
    union_cert = find_union_balanced(fam)
    print(f"nonuniform-sharp n={n}: balanced={balanced is not None}, "
          f"union split I1={union_cert.i1} I2={union_cert.i2}")

#
# Adding one more member anywhere tips both families over the threshold.
#
from balfam import SetFamily, find_balanced_general, find_balanced_uniform

fam = gen_uniform_sharp(5)
bigger = SetFamily(5, fam.members + (0b11000,))  # {4,5}
print("uniform-sharp(5) + {4,5}:", find_balanced_uniform(bigger))

fam = gen_nonuniform_sharp(5)
bigger = SetFamily(5, fam.members + (0,))  # the empty set
print("nonuniform-sharp(5) + {}:", find_balanced_general(bigger))
