"""
The start of a minimal bimodule resolution
==========================================

Build the generating sets f^0..f^3 and the maps between the projective
bimodules for the non-standard D4 algebra, then confirm that consecutive
maps compose to zero.
"""

from qhh import GF, corpus, build_resolution, verify_f3

res = build_resolution(corpus.load("nonstd-D4", GF(2)))
q = res.presentation.quiver

for n, fn in enumerate(res.f):
    print(f"f^{n}: {len(fn)} elements")

print()
print("f^2 (minimal relations):")
for x in res.f[2].elements:
    print("  ", x.format(q))

print()
print("f^3, each written as  sum f2_i p_i :")
for y, left in zip(res.f[3].elements, res.f[3].left_decomp):
    parts = " + ".join(f"f2_{i+1}({p.format(q)})" for i, p in left.items())
    print(f"   {parts}")
    print(f"      = {y.format(q)}")

# every stored decomposition is multiplied back out
print()
print("f^3 decompositions verify:", bool(verify_f3(res.f[3], res.f[2])))
print("complex checks:", res.complex_checks())
