"""Brute-force Hochschild cohomology from the reduced bar complex relative
to the vertex subalgebra E.

``C^n`` has coordinates ``(T, m)`` with ``T = (u_1, ..., u_n)`` a composable
tuple of radical nontips and ``m`` a nontip of ``e_{o(u_1)} Λ e_{t(u_n)}``;
``C^0`` is ``⊕_v e_v Λ e_v`` (``T = ()``).  The coboundary is

    (δf)(u_1..u_{n+1}) = u_1 f(u_2..) + Σ_i (-1)^i f(.., u_i u_{i+1}, ..)
                         + (-1)^{n+1} f(u_1..u_n) u_{n+1}.
"""

from __future__ import annotations

from .linalg import SparseMatrix, rank

DEFAULT_MAX_COLUMNS = 500_000


class OracleTooLargeError(RuntimeError):
    pass


class RelativeBarComplex:
    def __init__(self, alg, max_columns=DEFAULT_MAX_COLUMNS):
        self.alg = alg
        self.max_columns = max_columns
        nt = alg.nontips
        self.rad = alg.radical
        self.rad_from = {}
        for u in self.rad:
            self.rad_from.setdefault(nt[u].origin, []).append(u)
        self.rad_to = {}
        for u in self.rad:
            self.rad_to.setdefault(nt[u].terminus, []).append(u)
        # factor[w] = [(a, b, c)]: coefficient c of w in a*b
        self.factor = {}
        for a in self.rad:
            for b in self.rad_from.get(nt[a].terminus, []):
                for w, c in alg.table.get((a, b), {}).items():
                    self.factor.setdefault(w, []).append((a, b, c))
        self._tuples = {0: [()]}
        self._bases = {}
        self._d = {}

    def tuples(self, n: int) -> list:
        if n not in self._tuples:
            nt = self.alg.nontips
            prev = self.tuples(n - 1)
            out = []
            for T in prev:
                ext = self.rad if not T else self.rad_from.get(nt[T[-1]].terminus, [])
                out.extend(T + (u,) for u in ext)
            self._tuples[n] = out
        return self._tuples[n]

    def _ends(self, T):
        nt = self.alg.nontips
        return nt[T[0]].origin, nt[T[-1]].terminus

    def basis(self, n: int) -> list:
        if n not in self._bases:
            alg = self.alg
            if n == 0:
                b = [((), m) for m in range(alg.dim) if alg.nontips[m].origin == alg.nontips[m].terminus]
            else:
                b = [(T, m) for T in self.tuples(n) for m in alg.slice(*self._ends(T))]
            if len(b) > self.max_columns:
                raise OracleTooLargeError(f"C^{n} has {len(b)} coordinates (cap {self.max_columns})")
            self._bases[n] = b
        return self._bases[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def differential(self, n: int) -> SparseMatrix:
        """``δ^n : C^n → C^{n+1}``."""
        if n in self._d:
            return self._d[n]
        alg = self.alg
        f = alg.field
        nt = alg.nontips
        src = self.basis(n)
        tgt = self.basis(n + 1)
        row_of = {c: i for i, c in enumerate(tgt)}
        sign_last = f.one if (n + 1) % 2 == 0 else -f.one
        cols = []
        for T, m in src:
            col = {}

            def put(S, vec, scale):
                for k, c in vec.items():
                    r = row_of[(S, k)]
                    col[r] = f.reduce(col.get(r, f.zero) + scale * c)

            mv = {m: f.one}
            o_m, t_m = nt[m].origin, nt[m].terminus
            for u in self.rad_to.get(o_m if T else None, []) if T else self.rad:
                if not T and nt[u].terminus != o_m:
                    continue
                prod = alg.table.get((u, m))
                if prod:
                    put((u,) + T, prod, f.one)
            for u in self.rad_from.get(t_m, []) if T else self.rad:
                if not T and nt[u].origin != t_m:
                    continue
                prod = alg.table.get((m, u))
                if prod:
                    put(T + (u,), prod, sign_last)
            for i, w in enumerate(T, start=1):
                s = f.one if i % 2 == 0 else -f.one
                for a, b, c in self.factor.get(w, []):
                    S = T[:i - 1] + (a, b) + T[i:]
                    r = row_of[(S, m)]
                    col[r] = f.reduce(col.get(r, f.zero) + s * c)
            cols.append({r: c for r, c in col.items() if c != 0})
        M = SparseMatrix.from_columns(cols, len(tgt), f)
        self._d[n] = M
        return M

    def rank(self, n: int) -> int:
        return rank(self.differential(n))

    def hh(self, n: int) -> int:
        r_prev = self.rank(n - 1) if n > 0 else 0
        return self.dim(n) - self.rank(n) - r_prev


def hh_via_bar(alg, n: int, max_degree: int = 3, max_columns=DEFAULT_MAX_COLUMNS) -> int:
    if n > max_degree:
        raise ValueError(f"oracle degree {n} exceeds configured bound {max_degree}")
    return RelativeBarComplex(alg, max_columns).hh(n)
