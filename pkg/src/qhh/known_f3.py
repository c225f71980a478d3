"""Hand-derived f^3 sets for the two D4 corpus algebras (characteristic 2).

Each element is given by its left decomposition ``{i: p_i}`` (so that
``y = Σ f2_i p_i``) and its two-sided decomposition ``{i: [(q, r), ...]}``
(``y = Σ q f2_i r``).  Indices are 0-based positions in the minimized
relation list; ``@v`` is the trivial path at ``v``.
"""

from __future__ import annotations

from .parser import parse_element
from .resolution import GeneratorSet, f3_from_decompositions

# relation order: 0 = a b, 1 = x e, 2 = g d, 3 = b a + d g + e x
PREPROJ_D4 = [
    ({0: "a e x b"},
     {3: [("a", "e x b"), ("a d g", "b")], 0: [("a d g b", "@1")],
      2: [("a d", "g b")], 1: [("a e", "x b")]}),
    ({1: "x d g e"},
     {3: [("x", "d g e"), ("x b a", "e")], 0: [("x b", "a e")],
      1: [("x b a e", "@2")], 2: [("x d", "g e")]}),
    ({2: "g e x d"},
     {3: [("g", "e x d"), ("g b a", "d")], 0: [("g b", "a d")],
      2: [("g b a d", "@3")], 1: [("g e", "x d")]}),
    ({3: "b a d g"},
     {0: [("b", "a d g"), ("d g b", "a")], 2: [("d", "g e x"), ("e x d", "g")],
      1: [("e", "x d g"), ("d g e", "x")],
      3: [("d g", "e x"), ("e x", "d g"), ("d g b a", "@4")]}),
]

# relation order: 0 = a b - a d g b, 1 = x e, 2 = g d, 3 = b a + d g + e x
NONSTD_D4 = [
    ({0: "a d g b + a b"},
     {0: [("a d g b", "@1"), ("a b", "@1")]}),
    ({1: "x d g e + x b a e"},
     {3: [("x", "b a e"), ("x", "d g e"), ("x d g", "e"), ("x b a", "e")],
      1: [("x d g e", "@2"), ("x b a e", "@2")]}),
    ({2: "g b a d + g e x d"},
     {3: [("g", "e x d"), ("g", "b a d"), ("g b a", "d"), ("g e x", "d")],
      2: [("g b a d", "@3"), ("g e x d", "@3")]}),
    ({3: "b a d g + e x d g"},
     {1: [("e", "x d g")], 2: [("d", "g b a"), ("d", "g e x"), ("b a d", "g")],
      3: [("d g", "b a"), ("d g", "e x"), ("b a", "d g"), ("d g e x", "@4"), ("d g b a", "@4")]}),
]

KNOWN = {"preproj-D4": PREPROJ_D4, "nonstd-D4": NONSTD_D4, "nonstd-D4-six": NONSTD_D4}


def load_f3(table, f2: GeneratorSet, quiver, field) -> GeneratorSet:
    def el(text):
        return parse_element(text, quiver, field)
    lefts, twos = [], []
    for left, two in table:
        lefts.append({i: el(p) for i, p in left.items()})
        twos.append({i: [(el(q), el(r)) for q, r in pairs] for i, pairs in two.items()})
    return f3_from_decompositions(f2, lefts, twos)


def known_f3(name):
    """Supplier for :func:`qhh.resolution.build_resolution`'s ``f3`` hook."""
    table = KNOWN[name]

    def supply(f2, G, alg):
        return load_f3(table, f2, alg.quiver, alg.field)
    return supply
