"""
Trimming a redundant presentation
=================================

The non-standard D4 algebra is usually written with six relations, two of
which follow from the others.  minimize_generators finds the redundant ones
and ideal_membership produces an explicit certificate for each.
"""

from qhh import GF, FreeElement, corpus, complete, minimize_generators

F = GF(2)
pres = corpus.load("nonstd-D4-six", F)
q = pres.quiver
rels = pres.relations

kept = minimize_generators(rels, q, F)
print("retained:", [rels[i].format(q) for i in kept])

G = complete([rels[i] for i in kept], q, F)
for i, r in enumerate(rels):
    if i in kept:
        continue
    ok, cert = G.ideal_membership(r)
    print()
    print(f"{r.format(q)} in ideal: {ok}  ({len(cert)} terms)")
    for left, j, right in cert[:4]:
        print(f"   ({left.format(q)}) * g{j} * ({right.format(q)})")
    if len(cert) > 4:
        print("   ...")
    # multiply it back out to be sure
    back = sum((l * G.generators[j] * rr for l, j, rr in cert), FreeElement.zero(F))
    print("   re-expands exactly:", back == r)

# normal forms in the quotient
x = pres.quiver.path("a d g b")
print()
print("a d g b reduces to", G.normal_form(FreeElement.monomial(F, x)).format(q))
