"""First terms of the minimal projective bimodule resolution

    Q^3 --A3--> Q^2 --A2--> Q^1 --A1--> Q^0 --g--> Λ --> 0

with ``Q^n = ⊕_{y in f^n} Λ o(y) ⊗ t(y) Λ``.

A bimodule map is stored by the images of the summand generators
``o(y) ⊗ t(y)``: a list of ``(target summand, λ, λ')`` triples standing for
``λ ⊗ λ'`` in that summand, with λ, λ' coordinate vectors of Λ.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import AlgebraBasis
from .free import FreeElement
from .groebner import DEFAULT_DEGREE_BOUND, GroebnerBasis, complete, minimize_generators
from .linalg import RowSpace, SparseMatrix, ShapeError, rank_and_kernel
from .quiver import Path, order_key


class ConsistencyError(RuntimeError):
    pass


@dataclass
class GeneratorSet:
    level: int
    elements: list
    endpoints: list
    left_decomp: list = None
    two_sided: list = None

    def __len__(self):
        return len(self.elements)

    @classmethod
    def from_elements(cls, level, elements, left_decomp=None, two_sided=None):
        eps = []
        for y in elements:
            if not y.is_uniform():
                raise ValueError(f"level {level} element is not uniform")
            eps.append((y.origin, y.terminus))
        return cls(level, list(elements), eps, left_decomp, two_sided)


@dataclass
class BimoduleMap:
    source_level: int
    target_level: int
    images: list
    name: str = ""

    def __len__(self):
        return len(self.images)


def build_f0(quiver, field) -> GeneratorSet:
    els = [FreeElement.monomial(field, quiver.trivial(v)) for v in range(quiver.num_vertices)]
    return GeneratorSet.from_elements(0, els)


def build_f1(quiver, field) -> GeneratorSet:
    els = [FreeElement.monomial(field, quiver.arrow(a)) for a in range(quiver.num_arrows)]
    return GeneratorSet.from_elements(1, els)


def build_f2(generators) -> GeneratorSet:
    return GeneratorSet.from_elements(2, generators)


# -- maps ---------------------------------------------------------------

def map_g(alg: AlgebraBasis) -> BimoduleMap:
    imgs = [[(-1, alg.vertex_vec(v), alg.vertex_vec(v))] for v in range(alg.quiver.num_vertices)]
    return BimoduleMap(0, -1, imgs, "g")


def map_A1(alg: AlgebraBasis) -> BimoduleMap:
    q = alg.quiver
    f = alg.field
    imgs = []
    for a in range(q.num_arrows):
        o, t = q.arrow_origin[a], q.arrow_terminus[a]
        av = alg.path_vec(q.arrow(a))
        neg = {k: f.reduce(-v) for k, v in av.items()}
        imgs.append([(o, alg.vertex_vec(o), av), (t, neg, alg.vertex_vec(t))])
    return BimoduleMap(1, 0, imgs, "A1")


def _scaled(vec, c, field):
    out = {}
    for k, v in vec.items():
        w = field.reduce(c * v)
        if w != 0:
            out[k] = w
    return out


def fox_terms(x: FreeElement, quiver):
    """``[(arrow, left path, right path, coeff)]``: one term per arrow occurrence."""
    out = []
    for p, c in x.terms:
        for k, a in enumerate(p.word):
            out.append((a, quiver.subpath(p, 0, k), quiver.subpath(p, k + 1, p.length), c))
    return out


def map_A2(f2: GeneratorSet, alg: AlgebraBasis) -> BimoduleMap:
    imgs = []
    for x in f2.elements:
        terms = []
        for a, L, R, c in fox_terms(x, alg.quiver):
            lv = _scaled(alg.path_vec(L), c, alg.field)
            rv = alg.path_vec(R)
            if lv and rv:
                terms.append((a, lv, rv))
        imgs.append(terms)
    return BimoduleMap(2, 1, imgs, "A2")


def map_A3(f3: GeneratorSet, alg: AlgebraBasis) -> BimoduleMap:
    f = alg.field
    imgs = []
    for y, (o, _), left, two in zip(f3.elements, f3.endpoints, f3.left_decomp, f3.two_sided):
        terms = []
        for i in sorted(set(left) | set(two)):
            p = left.get(i)
            if p is not None:
                pv = alg.vec(p)
                if pv:
                    terms.append((i, alg.vertex_vec(o), pv))
            for qq, r in two.get(i, []):
                qv = _scaled(alg.vec(qq), -f.one, f)
                rv = alg.vec(r)
                if qv and rv:
                    terms.append((i, qv, rv))
        imgs.append(terms)
    return BimoduleMap(3, 2, imgs, "A3")


# -- composites ---------------------------------------------------------

def _tensor_add(acc, summand, lv, rv, field):
    for i, a in lv.items():
        for j, b in rv.items():
            key = (summand, i, j)
            acc[key] = field.reduce(acc.get(key, field.zero) + a * b)


def image_of(m: BimoduleMap, gen: int, alg: AlgebraBasis) -> dict:
    """Image of a generator as a tensor dict ``{(summand, i, j): c}``."""
    acc = {}
    for t, lv, rv in m.images[gen]:
        _tensor_add(acc, t, lv, rv, alg.field)
    return {k: v for k, v in acc.items() if v != 0}


def composite_images(outer: BimoduleMap, inner: BimoduleMap, alg: AlgebraBasis):
    """Images of ``outer ∘ inner`` on the generators of inner's source."""
    if inner.target_level != outer.source_level:
        raise ShapeError(f"cannot compose {outer.name} after {inner.name}")
    f = alg.field
    out = []
    for s, terms in enumerate(inner.images):
        acc = {}
        for t, lv, rv in terms:
            if t >= len(outer.images):
                raise ShapeError(f"{inner.name} targets summand {t} missing from {outer.name}")
            for u, mu, mu2 in outer.images[t]:
                left = alg.mul(lv, mu)
                right = alg.mul(mu2, rv)
                if outer.target_level == -1:
                    for k, c in alg.mul(left, right).items():
                        acc[k] = f.reduce(acc.get(k, f.zero) + c)
                else:
                    _tensor_add(acc, u, left, right, f)
        out.append({k: v for k, v in acc.items() if v != 0})
    return out


def compose_check(outer: BimoduleMap, inner: BimoduleMap, alg: AlgebraBasis) -> bool:
    return all(not img for img in composite_images(outer, inner, alg))


# -- f^3 ----------------------------------------------------------------

def split_leading(x: FreeElement, quiver):
    """``{arrow: x_a}`` with ``x = sum_a a * x_a`` in the free algebra."""
    parts = {}
    for p, c in x.terms:
        if not p.word:
            raise ValueError("element has a trivial-path term")
        a = p.word[0]
        parts.setdefault(a, []).append((quiver.subpath(p, 1, p.length), c))
    return {a: FreeElement(x.field, ts) for a, ts in sorted(parts.items())}


def compute_f3(f2: GeneratorSet, G: GroebnerBasis, alg: AlgebraBasis) -> GeneratorSet:
    """Uniform generators of the third syzygy, lifted to the free algebra.

    Kernel of ``⊕_x t(x)Λ → ⊕_a t(a)Λ``, ``t(x) ↦ (x_a)``; a complement of
    ``kernel · rad`` gives the minimal generators, each lifted to
    ``y = Σ f2_i p_i`` and rewritten as ``Σ q f2_i r`` via cofactors of
    ``y = Σ_a a s_a`` with every ``s_a`` in the ideal.
    """
    q = alg.quiver
    f = alg.field
    if list(G.generators) != list(f2.elements):
        raise ConsistencyError("Groebner basis must be completed from the f2 elements")
    splits = [split_leading(x, q) for x in f2.elements]
    split_vecs = [{a: alg.vec(xa) for a, xa in sp.items()} for sp in splits]

    src = [(xi, n) for xi, (_, t) in enumerate(f2.endpoints)
           for n in range(alg.dim) if alg.nontips[n].origin == t]
    src_index = {c: i for i, c in enumerate(src)}
    tgt = [(a, n) for a in range(q.num_arrows)
           for n in range(alg.dim) if alg.nontips[n].origin == q.arrow_terminus[a]]
    tgt_index = {c: i for i, c in enumerate(tgt)}

    cols = []
    for xi, n in src:
        col = {}
        en = alg.basis_vec(n)
        for a, xv in split_vecs[xi].items():
            for k, c in alg.mul(xv, en).items():
                col[tgt_index[(a, k)]] = c
        cols.append(col)
    M = SparseMatrix.from_columns(cols, len(tgt), f)
    _, _, kernel = rank_and_kernel(M)

    rad_span = RowSpace(f)
    for k in kernel:
        for b in range(q.num_arrows):
            bv = alg.path_vec(q.arrow(b))
            kb = {}
            for ci, c in k.items():
                xi, n = src[ci]
                for m, d in alg.mul({n: c}, bv).items():
                    kb[src_index[(xi, m)]] = d
            if kb:
                rad_span.add(kb)
    chosen = []
    for k in kernel:
        if rad_span.add(k):
            chosen.append(k)

    records = []
    for k in chosen:
        per_x = {}
        for ci, c in k.items():
            xi, n = src[ci]
            per_x.setdefault(xi, {})[n] = c
        left = {xi: alg.element(v) for xi, v in sorted(per_x.items())}
        y = FreeElement.zero(f)
        for xi, p in left.items():
            y = y + f2.elements[xi] * p
        if y.is_zero() or not y.is_uniform():
            raise ConsistencyError("lifted syzygy generator is zero or not uniform")
        two = _two_sided(y, G, q)
        records.append((y, left, two))
    records.sort(key=lambda r: (r[0].tip.length, r[0].origin, r[0].terminus, order_key(r[0].tip)))
    f3 = GeneratorSet.from_elements(3, [r[0] for r in records],
                                    [r[1] for r in records], [r[2] for r in records])
    check = verify_f3(f3, f2)
    if not check:
        raise ConsistencyError("computed f3 failed verification: " + "; ".join(check.problems))
    return f3


def _two_sided(y: FreeElement, G: GroebnerBasis, quiver):
    f = G.field
    acc = {}
    for a, s in split_leading(y, quiver).items():
        nf, cof = G.reduce(s)
        if not nf.is_zero():
            raise ConsistencyError("right factor of a syzygy generator is not in the ideal")
        ap = quiver.arrow(a)
        for (i, l, r), c in cof.items():
            key = (i, Path(ap.origin, l.terminus, ap.word + l.word), r)
            acc[key] = f.reduce(acc.get(key, f.zero) + c)
    two = {}
    for (i, qp, rp), c in sorted(acc.items(), key=lambda kv: (kv[0][0], order_key(kv[0][1]), order_key(kv[0][2]))):
        if c != 0:
            two.setdefault(i, []).append((FreeElement.monomial(f, qp, c), FreeElement.monomial(f, rp)))
    return two


@dataclass
class F3Check:
    ok: bool
    problems: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_f3(candidate: GeneratorSet, f2: GeneratorSet) -> F3Check:
    """Re-expand both stored decompositions of every f3 element."""
    problems = []
    for n, (y, left, two) in enumerate(zip(candidate.elements, candidate.left_decomp, candidate.two_sided)):
        f = y.field
        lhs = FreeElement.zero(f)
        for i, p in left.items():
            lhs = lhs + f2.elements[i] * p
            if any(path.length == 0 for path in p.paths()):
                problems.append(f"f3[{n}]: p_{i} is not in the arrow ideal")
        rhs = FreeElement.zero(f)
        for i, pairs in two.items():
            for qq, r in pairs:
                rhs = rhs + qq * f2.elements[i] * r
                if any(path.length == 0 for path in qq.paths()):
                    problems.append(f"f3[{n}]: a left factor for f2_{i} is not in the arrow ideal")
        if lhs != y:
            problems.append(f"f3[{n}]: y != sum f2_i p_i")
        if rhs != y:
            problems.append(f"f3[{n}]: y != sum q f2_i r")
        if not y.is_uniform():
            problems.append(f"f3[{n}]: not uniform")
    return F3Check(not problems, problems)


def f3_from_decompositions(f2: GeneratorSet, left_decomps, two_sided) -> GeneratorSet:
    """Assemble an f3 set from given decompositions; ``y = Σ f2_i p_i``."""
    els = []
    for left in left_decomps:
        field = f2.elements[0].field
        y = FreeElement.zero(field)
        for i, p in left.items():
            y = y + f2.elements[i] * p
        els.append(y)
    return GeneratorSet.from_elements(3, els, list(left_decomps), list(two_sided))


# -- whole pipeline -----------------------------------------------------

@dataclass
class Resolution:
    presentation: object
    retained: list
    G: GroebnerBasis
    algebra: AlgebraBasis
    f: list
    maps: dict

    @property
    def field(self):
        return self.algebra.field

    def complex_checks(self) -> dict:
        a = self.algebra
        m = self.maps
        return {
            "g*A1": compose_check(m["g"], m["A1"], a),
            "A1*A2": compose_check(m["A1"], m["A2"], a),
            "A2*A3": compose_check(m["A2"], m["A3"], a),
        }


def build_resolution(pres, minimize=True, degree_bound=DEFAULT_DEGREE_BOUND, cap=None, f3=None) -> Resolution:
    """Run the pipeline: minimize, complete, nontip basis, f^0..f^3, maps.

    ``f3`` may be a callable ``(f2, G, algebra) -> GeneratorSet`` supplying
    a hand-written f3 set instead of the computed one.
    """
    quiver, field = pres.quiver, pres.field
    rels = list(pres.relations)
    retained = (minimize_generators(rels, quiver, field, degree_bound) if minimize and rels
                else list(range(len(rels))))
    f2_elems = [rels[i] for i in retained]
    G = complete(f2_elems, quiver, field, degree_bound)
    alg = AlgebraBasis(G, cap)
    f0 = build_f0(quiver, field)
    f1 = build_f1(quiver, field)
    f2 = build_f2(f2_elems)
    f3s = f3(f2, G, alg) if f3 is not None else compute_f3(f2, G, alg)
    maps = {
        "g": map_g(alg),
        "A1": map_A1(alg),
        "A2": map_A2(f2, alg),
        "A3": map_A3(f3s, alg),
    }
    return Resolution(pres, retained, G, alg, [f0, f1, f2, f3s], maps)
