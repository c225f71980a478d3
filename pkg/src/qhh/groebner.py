"""Two-sided Groebner bases in path algebras, with cofactor tracking.

Every rule carries a *cofactor*: a dict ``{(i, left, right): c}`` meaning
``tip - tail = sum c * left * g_i * right`` over the input generators
``g_i``.  Reductions thread these through, so ideal membership comes with a
certificate that can be re-expanded in the free algebra.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .free import FreeElement
from .quiver import Path, order_key

DEFAULT_DEGREE_BOUND = 12
DEFAULT_DIM_CAP = 10_000


class IncompleteBasisError(RuntimeError):
    def __init__(self, message, overlap=None):
        super().__init__(message)
        self.overlap = overlap


class DimensionCapError(RuntimeError):
    pass


def dim_cap() -> int:
    return int(os.environ.get("QHH_DIM_CAP", DEFAULT_DIM_CAP))


def _cat(p: Path, q: Path) -> Path:
    # caller guarantees composability
    if not p.word:
        return q
    if not q.word:
        return p
    return Path(p.origin, q.terminus, p.word + q.word)


def _cof_add(dst: dict, src: dict, scale, left: Path, right: Path, field):
    for (i, l, r), v in src.items():
        key = (i, _cat(left, l), _cat(r, right))
        c = field.reduce(dst.get(key, field.zero) + scale * v)
        if c == 0:
            dst.pop(key, None)
        else:
            dst[key] = c


def expand_cofactor(cofactor: dict, generators, field) -> FreeElement:
    """``sum c * left * g_i * right`` computed in the free algebra."""
    total = FreeElement.zero(field)
    for (i, l, r), c in cofactor.items():
        total = total + (FreeElement.monomial(field, l, c) * generators[i] * FreeElement.monomial(field, r))
    return total


def certificate_triples(cofactor: dict, field):
    """Group a cofactor dict as ``[(left, i, right)]`` with FreeElement entries."""
    return [(FreeElement.monomial(field, l, c), i, FreeElement.monomial(field, r))
            for (i, l, r), c in sorted(cofactor.items(),
                                       key=lambda kv: (kv[0][0], order_key(kv[0][1]), order_key(kv[0][2])))]


@dataclass
class RewriteRule:
    tip: Path
    tail: FreeElement
    cofactor: dict

    @property
    def element(self) -> FreeElement:
        return FreeElement.monomial(self.tail.field, self.tip) - self.tail


class _RuleSet:
    """Mutable rule store used while completing and for reductions."""

    def __init__(self, quiver, field):
        self.quiver = quiver
        self.field = field
        self.rules: list[RewriteRule] = []
        self._by_word = {}
        self._lengths = []

    def _reindex(self):
        self._by_word = {r.tip.word: r for r in self.rules}
        self._lengths = sorted({len(w) for w in self._by_word})

    def find(self, p: Path):
        """Leftmost tip occurrence in ``p``: ``(rule, start)`` or None."""
        w = p.word
        n = len(w)
        for i in range(n):
            for L in self._lengths:
                if i + L > n:
                    break
                r = self._by_word.get(w[i:i + L])
                if r is not None:
                    return r, i
        return None

    def reduce(self, poly: dict, track: bool = True):
        """Full two-sided reduction.

        Returns ``(remainder, quotient)`` with ``poly = remainder + expand(quotient)``.
        Always rewrites the order-largest reducible term at its leftmost tip.
        """
        f = self.field
        q = self.quiver
        work = {p: c for p, c in poly.items() if c != 0}
        rem = {}
        quo = {}
        while work:
            m = max(work, key=order_key)
            c = work.pop(m)
            hit = self.find(m)
            if hit is None:
                rem[m] = c
                continue
            rule, i = hit
            L = q.subpath(m, 0, i)
            R = q.subpath(m, i + rule.tip.length, m.length)
            for p, t in rule.tail.terms:
                key = _cat(_cat(L, p), R)
                v = f.reduce(work.get(key, f.zero) + c * t)
                if v == 0:
                    work.pop(key, None)
                else:
                    work[key] = v
            if track:
                _cof_add(quo, rule.cofactor, c, L, R, f)
        return rem, quo


class GroebnerBasis:
    """A completed (or bound-truncated) reduced Groebner basis."""

    def __init__(self, quiver, field, generators, rules, degree_bound, complete, max_degree, unresolved=()):
        self.quiver = quiver
        self.field = field
        self.generators = list(generators)
        self.rules = sorted(rules, key=lambda r: order_key(r.tip))
        self.degree_bound = degree_bound
        self.complete = complete
        self.max_degree = max_degree
        self.unresolved = list(unresolved)
        self._store = _RuleSet(quiver, field)
        self._store.rules = self.rules
        self._store._reindex()
        self._nf_cache = {}

    @property
    def tips(self):
        return [r.tip for r in self.rules]

    def reduce(self, x: FreeElement):
        """``(normal form, cofactor dict)`` with ``x = nf + expand(cofactor)``."""
        rem, quo = self._store.reduce(x.as_dict())
        return FreeElement(self.field, rem), quo

    def normal_form(self, x: FreeElement) -> FreeElement:
        f = self.field
        acc = {}
        for p, c in x.terms:
            for q, d in self.normal_form_path(p).terms:
                acc[q] = acc.get(q, f.zero) + c * d
        return FreeElement(f, acc)

    def normal_form_path(self, p: Path) -> FreeElement:
        nf = self._nf_cache.get(p)
        if nf is None:
            rem, _ = self._store.reduce({p: self.field.one}, track=False)
            nf = self._nf_cache[p] = FreeElement(self.field, rem)
        return nf

    def is_reducible(self, p: Path) -> bool:
        return self._store.find(p) is not None

    def has_tip_suffix(self, p: Path) -> bool:
        w = p.word
        for L in self._store._lengths:
            if L > len(w):
                break
            if w[len(w) - L:] in self._store._by_word:
                return True
        return False

    def nontips(self, cap=None):
        """All paths avoiding every tip as a subword, breadth first by length."""
        cap = dim_cap() if cap is None else cap
        q = self.quiver
        level = [q.trivial(v) for v in range(q.num_vertices)]
        out = list(level)
        while level:
            nxt = []
            for p in level:
                for a in q.out_arrows[p.terminus]:
                    ext = Path(p.origin, q.arrow_terminus[a], p.word + (a,))
                    if not self.has_tip_suffix(ext):
                        nxt.append(ext)
            out.extend(nxt)
            if len(out) > cap:
                raise DimensionCapError(
                    f"more than {cap} nontips; algebra is probably infinite dimensional")
            level = nxt
        return sorted(out, key=order_key)

    def ideal_membership(self, x: FreeElement):
        """``(is_member, certificate)``; certificate is ``[(left, i, right)]``
        over the original generators and re-expands exactly to ``x`` when
        ``x`` is a member."""
        nf, quo = self.reduce(x)
        if not nf.is_zero():
            return False, []
        return True, certificate_triples(quo, self.field)

    def format(self) -> str:
        q = self.quiver
        return "\n".join(f"{q.format_path(r.tip)} -> {r.tail.format(q)}" for r in self.rules)


def _monic_rule(rem: dict, cof: dict, field) -> RewriteRule:
    tip = max(rem, key=order_key)
    inv = field.inv(rem[tip])
    tail = FreeElement(field, {p: -c * inv for p, c in rem.items() if p != tip})
    cof = {k: field.reduce(v * inv) for k, v in cof.items()}
    cof = {k: v for k, v in cof.items() if v != 0}
    return RewriteRule(tip, tail, cof)


def _sub(a: dict, b: dict, field) -> dict:
    out = dict(a)
    for k, v in b.items():
        c = field.reduce(out.get(k, field.zero) - v)
        if c == 0:
            out.pop(k, None)
        else:
            out[k] = c
    return out


def complete(generators, quiver, field=None, degree_bound=DEFAULT_DEGREE_BOUND, strict=True) -> GroebnerBasis:
    """Overlap completion of a list of uniform generators.

    Overlaps are processed in ascending order of their overlap word.  With
    ``strict`` an :class:`IncompleteBasisError` is raised if an overlap longer
    than ``degree_bound`` fails to resolve; otherwise the basis is returned
    with ``complete=False``.
    """
    generators = list(generators)
    if field is None:
        if not generators:
            raise ValueError("field required when there are no generators")
        field = generators[0].field
    for i, g in enumerate(generators):
        if g.is_zero():
            raise ValueError(f"generator {i} is zero")
        if not g.is_uniform():
            raise ValueError(f"generator {i} is not uniform")
        if g.min_length() < 2:
            raise ValueError(f"generator {i} is not admissible (term of length < 2)")

    store = _RuleSet(quiver, field)
    queue = []
    for i, g in enumerate(generators):
        o, t = g.origin, g.terminus
        queue.append((g.as_dict(), {(i, quiver.trivial(o), quiver.trivial(t)): field.one}))

    def drain():
        while queue:
            poly, cof = queue.pop(0)
            rem, quo = store.reduce(poly)
            if not rem:
                continue
            rule = _monic_rule(rem, _sub(cof, quo, field), field)
            keep = []
            for r in store.rules:
                w, t = r.tip.word, rule.tip.word
                contains = any(w[i:i + len(t)] == t for i in range(len(w) - len(t) + 1))
                if contains:
                    queue.append((r.element.as_dict(), r.cofactor))
                else:
                    keep.append(r)
            keep.append(rule)
            store.rules = keep
            store._reindex()
            for r in store.rules:
                rem2, quo2 = store.reduce(r.tail.as_dict())
                new_tail = FreeElement(field, rem2)
                if new_tail != r.tail:
                    r.tail = new_tail
                    r.cofactor = _sub(r.cofactor, {k: -v for k, v in quo2.items()}, field)

    drain()
    done = set()
    unresolved = []
    max_degree = max((g.tip.length for g in generators), default=0)
    while True:
        pending = []
        for r1 in store.rules:
            u = r1.tip.word
            for r2 in store.rules:
                w = r2.tip.word
                for k in range(1, min(len(u), len(w))):
                    if u[len(u) - k:] != w[:k]:
                        continue
                    key = (r1.tip, r1.tail, r2.tip, r2.tail, k)
                    if key in done:
                        continue
                    word = u + w[k:]
                    pending.append(((len(word), word), key, r1, r2, k))
        if not pending:
            break
        pending.sort(key=lambda t: (t[0], order_key(t[1][0]), order_key(t[1][2]), t[1][4]))
        (olen, word), key, r1, r2, k = pending[0]
        done.add(key)
        A = quiver.subpath(r1.tip, 0, r1.tip.length - k)
        C = quiver.subpath(r2.tip, k, r2.tip.length)
        one = field.one
        s = (r1.element * FreeElement.monomial(field, C)) - (FreeElement.monomial(field, A) * r2.element)
        cof = {}
        _cof_add(cof, r1.cofactor, one, quiver.trivial(r1.tip.origin), C, field)
        _cof_add(cof, r2.cofactor, -one, A, quiver.trivial(r2.tip.terminus), field)
        if olen > degree_bound:
            rem, _ = store.reduce(s.as_dict(), track=False)
            if rem:
                unresolved.append(quiver.word_path(word))
            continue
        max_degree = max(max_degree, olen)
        queue.append((s.as_dict(), cof))
        drain()

    if unresolved and strict:
        w = unresolved[0]
        raise IncompleteBasisError(
            f"overlap {quiver.format_path(w)} (length {w.length}) unresolved within degree bound {degree_bound}",
            overlap=w)
    return GroebnerBasis(quiver, field, generators, store.rules, degree_bound,
                         not unresolved, max_degree, unresolved)


def minimize_generators(generators, quiver, field=None, degree_bound=DEFAULT_DEGREE_BOUND, strict=False):
    """Greedy left-to-right drop of generators lying in the ideal of the others.

    Returns the retained indices.  Membership is decided by a basis of the
    currently retained others, completed up to ``degree_bound``; a zero normal
    form is always a certified membership.  The result depends on the input
    order: earlier generators are tried for removal first.
    """
    retained = list(range(len(generators)))
    for i in range(len(generators)):
        others = [j for j in retained if j != i]
        if not others:
            continue
        G = complete([generators[j] for j in others], quiver, field, degree_bound, strict=strict)
        if G.normal_form(generators[i]).is_zero():
            retained.remove(i)
    return retained
