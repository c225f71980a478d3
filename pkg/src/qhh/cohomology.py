"""Hochschild cohomology from the resolution: apply Hom(-, Λ) and take ranks.

A bimodule map ``Λ o(y) ⊗ t(y) Λ → Λ`` is fixed by the image of
``o(y) ⊗ t(y)``, an element of ``e_{o(y)} Λ e_{t(y)}``, so Hom(Q^n, Λ) has
coordinates ``(y, nontip in that slice)``.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .linalg import ShapeError, SparseMatrix, rank_and_kernel
from .resolution import BimoduleMap, Resolution


def cochain_basis(endpoints, alg) -> list:
    """``[(summand, nontip index)]`` for Hom(Q^n, Λ), summand-major."""
    return [(y, i) for y, (o, t) in enumerate(endpoints) for i in alg.slice(o, t)]


def induce_matrix(A: BimoduleMap, source_basis, target_basis, alg) -> SparseMatrix:
    """Matrix of ``d f = f ∘ A`` from Hom(Q^{n-1}, Λ) to Hom(Q^n, Λ)."""
    f = alg.field
    row_of = {c: r for r, c in enumerate(target_basis)}
    by_summand = {}
    for s, terms in enumerate(A.images):
        for t, lv, rv in terms:
            by_summand.setdefault(t, []).append((s, lv, rv))
    cols = []
    for t, m in source_basis:
        col = {}
        mv = {m: f.one}
        for s, lv, rv in by_summand.get(t, []):
            for k, c in alg.mul(alg.mul(lv, mv), rv).items():
                r = row_of.get((s, k))
                if r is None:
                    raise ShapeError(f"image coordinate ({s}, {k}) outside the target slice")
                col[r] = f.reduce(col.get(r, f.zero) + c)
        cols.append({r: c for r, c in col.items() if c != 0})
    return SparseMatrix.from_columns(cols, len(target_basis), f)


@dataclass
class HHReport:
    algebra: str
    field: str
    hom_dims: list        # dim Hom(Q^n, Λ), n = 0..3
    ranks: list           # rank d_1, d_2, d_3
    kernel_dims: list     # dim Ker d_1, d_2, d_3
    hh: list              # dim HH^0, HH^1, HH^2

    def as_dict(self):
        return asdict(self)


class Cochains:
    """The complex Hom(Q^•, Λ) for a built resolution."""

    def __init__(self, res: Resolution):
        self.res = res
        alg = res.algebra
        self.bases = [cochain_basis(fn.endpoints, alg) for fn in res.f]
        self._d = {}

    def d(self, n: int) -> SparseMatrix:
        """``d_n : Hom(Q^{n-1}, Λ) → Hom(Q^n, Λ)`` for n = 1, 2, 3."""
        if n not in self._d:
            A = self.res.maps[f"A{n}"]
            self._d[n] = induce_matrix(A, self.bases[n - 1], self.bases[n], self.res.algebra)
        return self._d[n]

    def report(self) -> HHReport:
        ranks, kers = [], []
        for n in (1, 2, 3):
            r, k, _ = rank_and_kernel(self.d(n))
            ranks.append(r)
            kers.append(k)
        hh = [kers[0], kers[1] - ranks[0], kers[2] - ranks[1]]
        pres = self.res.presentation
        return HHReport(pres.name, self.res.field.name, [len(b) for b in self.bases], ranks, kers, hh)


def hh_dim(pres, n: int, **kw) -> int:
    if n not in (0, 1, 2):
        raise ValueError("only HH^0, HH^1, HH^2 are available from the resolution")
    from .resolution import build_resolution
    return Cochains(build_resolution(pres, **kw)).report().hh[n]
