"""
Telling two algebras apart with HH^2
====================================

The standard and non-standard D4 algebras have the same dimension and the
same Cartan data.  Hochschild cohomology is invariant under derived
equivalence, so a difference in dim HH^2 separates them.  Over a field of
odd characteristic the two presentations give isomorphic algebras, and the
numbers agree.
"""

from qhh import GF, QQ, corpus, build_resolution
from qhh.cohomology import Cochains

for field in (GF(2), GF(3), QQ):
    print(f"-- over {field.name}")
    values = []
    for name in ("preproj-D4", "nonstd-D4"):
        rep = Cochains(build_resolution(corpus.load(name, field))).report()
        values.append(rep.hh[2])
        print(f"   {name:11s} dim Hom(Q^n,A) {rep.hom_dims}  rank d {rep.ranks}  HH^0..2 {rep.hh}")
    print("   HH^2 distinguishes:", "yes" if values[0] != values[1] else "no")
