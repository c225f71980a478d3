"""The finite-dimensional quotient algebra Λ = KQ/I in its nontip basis.

Elements of Λ are sparse coordinate dicts ``{nontip index: coefficient}``.
"""

from __future__ import annotations

from collections import defaultdict

from .free import FreeElement
from .groebner import GroebnerBasis
from .quiver import Path


class AlgebraBasis:
    def __init__(self, G: GroebnerBasis, cap=None):
        self.G = G
        self.quiver = G.quiver
        self.field = G.field
        self.nontips: list[Path] = G.nontips(cap)
        self.index = {p: i for i, p in enumerate(self.nontips)}
        self.slices = defaultdict(list)
        for i, p in enumerate(self.nontips):
            self.slices[(p.origin, p.terminus)].append(i)
        self.radical = [i for i, p in enumerate(self.nontips) if p.length > 0]
        self.vertex_index = {p.origin: i for i, p in enumerate(self.nontips) if p.length == 0}
        self.table = {}
        for i, p in enumerate(self.nontips):
            for j, q in enumerate(self.nontips):
                if p.terminus != q.origin:
                    continue
                prod = FreeElement.monomial(self.field, _cat(p, q))
                self.table[(i, j)] = self.vec(prod)

    @property
    def dim(self) -> int:
        return len(self.nontips)

    def slice(self, v: int, w: int) -> list:
        return self.slices.get((v, w), [])

    def slice_table(self):
        """``{(v, w): dim e_v Λ e_w}`` for every nonzero slice."""
        return {k: len(v) for k, v in sorted(self.slices.items())}

    def vec(self, x: FreeElement) -> dict:
        nf = self.G.normal_form(x)
        return {self.index[p]: c for p, c in nf.terms}

    def path_vec(self, p: Path) -> dict:
        return self.vec(FreeElement.monomial(self.field, p))

    def basis_vec(self, i: int) -> dict:
        return {i: self.field.one}

    def vertex_vec(self, v: int) -> dict:
        return {self.vertex_index[v]: self.field.one}

    def element(self, vec: dict) -> FreeElement:
        return FreeElement(self.field, [(self.nontips[i], c) for i, c in vec.items()])

    def mul(self, u: dict, v: dict) -> dict:
        f = self.field
        acc = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = self.table.get((i, j))
                if not prod:
                    continue
                ab = a * b
                for k, c in prod.items():
                    acc[k] = acc.get(k, f.zero) + ab * c
        out = {}
        for k, c in acc.items():
            c = f.reduce(c)
            if c != 0:
                out[k] = c
        return out

    def mul3(self, u: dict, v: dict, w: dict) -> dict:
        return self.mul(self.mul(u, v), w)

    def loewy_length(self) -> int:
        """Smallest N with rad^N = 0."""
        f = self.field
        rad = [self.basis_vec(i) for i in self.radical]
        power = list(rad)
        n = 1
        while power:
            nxt = []
            for x in power:
                for i in self.radical:
                    y = self.mul(x, self.basis_vec(i))
                    if y:
                        nxt.append(y)
            power = _basis_of(nxt, f)
            n += 1
        return n

    def __repr__(self):
        return f"AlgebraBasis(dim={self.dim}, field={self.field.name})"


def _cat(p, q):
    if not p.word:
        return q
    if not q.word:
        return p
    return Path(p.origin, q.terminus, p.word + q.word)


def _basis_of(vectors, field):
    from .linalg import SparseMatrix, row_basis
    if not vectors:
        return []
    ncols = max(max(v) for v in vectors) + 1
    return row_basis(SparseMatrix.from_rows(vectors, ncols, field))


def minimal_generator_count(generators, alg: AlgebraBasis) -> int:
    """``dim I / (JI + IJ)`` for the ideal generated by ``generators``.

    Computed in KQ modulo paths longer than the Loewy length N of Λ: there
    ``J^N ⊆ I`` so ``J^{N+1} ⊆ JI + IJ`` and nothing is lost.
    """
    from .linalg import RowSpace
    q = alg.quiver
    f = alg.field
    N = alg.loewy_length()
    paths = [q.trivial(v) for v in range(q.num_vertices)]
    level = list(paths)
    for _ in range(N):
        level = [Path(p.origin, q.arrow_terminus[a], p.word + (a,))
                 for p in level for a in q.out_arrows[p.terminus]]
        paths.extend(level)
    col = {}

    def vec(x):
        out = {}
        for p, c in x.terms:
            if p.length <= N:
                out[col.setdefault(p, len(col))] = c
        return out

    whole = RowSpace(f)
    lower = RowSpace(f)
    for g in generators:
        gmin = g.min_length()
        for p in paths:
            if p.terminus != g.origin:
                continue
            for r in paths:
                if r.origin != g.terminus or p.length + r.length + gmin > N:
                    continue
                v = vec(FreeElement.monomial(f, p) * g * FreeElement.monomial(f, r))
                if not v:
                    continue
                whole.add(v)
                if p.length + r.length > 0:
                    lower.add(v)
    return len(whole) - len(lower)


def is_minimal_generating_set(generators, alg: AlgebraBasis) -> bool:
    """True when the generators' classes form a basis of ``I / (JI + IJ)``."""
    return minimal_generator_count(generators, alg) == len(generators)
