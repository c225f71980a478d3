"""
A first look at a quiver algebra
================================

Load the preprojective algebra of type D4 from the bundled corpus, compute a
Groebner basis for its relations and list the nontip paths, which form a
basis of the quotient algebra.
"""

from qhh import GF, corpus, complete, AlgebraBasis

pres = corpus.load("preproj-D4", GF(2))
q = pres.quiver
print("vertices:", q.vertices)
print("arrows:  ", [f"{a}:{o}->{t}" for a, o, t in q.arrows])
for r in pres.relations:
    print("  rel", r.format(q))

# completion adds whatever rules the overlaps force
G = complete(pres.relations, q, pres.field)
print()
print(G.format())

alg = AlgebraBasis(G)
print()
print("dimension", alg.dim, " Loewy length", alg.loewy_length())

# dimensions of the pieces e_v A e_w
for (o, t), d in alg.slice_table().items():
    print(f"  e{q.vertices[o]} A e{q.vertices[t]}: {d}")

# the longest nontips span the socle
top = max(p.length for p in alg.nontips)
print("longest paths:", [q.format_path(p) for p in alg.nontips if p.length == top])
