"""Elements of the free path algebra KQ."""

from __future__ import annotations

from collections import defaultdict

from .quiver import Path, order_key


class FreeElement:
    """Finite K-linear combination of paths.

    Immutable.  Terms are stored sorted descending by the admissible order,
    so ``terms[0]`` is the tip and equality is structural.
    """

    __slots__ = ("field", "terms", "_dict")

    def __init__(self, field, terms=()):
        acc = defaultdict(lambda: field.zero)
        for p, c in (terms.items() if isinstance(terms, dict) else terms):
            acc[p] = acc[p] + c
        clean = {}
        for p, c in acc.items():
            c = field.reduce(c)
            if c != 0:
                clean[p] = c
        self.field = field
        self.terms = tuple(sorted(clean.items(), key=lambda t: order_key(t[0]), reverse=True))
        self._dict = clean

    @classmethod
    def _raw(cls, field, clean: dict):
        obj = object.__new__(cls)
        obj.field = field
        obj.terms = tuple(sorted(clean.items(), key=lambda t: order_key(t[0]), reverse=True))
        obj._dict = clean
        return obj

    @classmethod
    def monomial(cls, field, path: Path, coeff=None):
        c = field.one if coeff is None else field(coeff)
        return cls._raw(field, {path: c} if c != 0 else {})

    @classmethod
    def zero(cls, field):
        return cls._raw(field, {})

    # -- access ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._dict

    def __bool__(self):
        return bool(self._dict)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def coefficient(self, path: Path):
        return self._dict.get(path, self.field.zero)

    def as_dict(self) -> dict:
        return dict(self._dict)

    def paths(self):
        return [p for p, _ in self.terms]

    @property
    def tip(self) -> Path:
        if not self.terms:
            raise ValueError("zero element has no tip")
        return self.terms[0][0]

    @property
    def leading_coefficient(self):
        return self.terms[0][1]

    def is_uniform(self) -> bool:
        return len(self.endpoints()) == 1

    def endpoints(self) -> set:
        return {(p.origin, p.terminus) for p in self._dict}

    @property
    def origin(self) -> int:
        (o, _), = self.endpoints()
        return o

    @property
    def terminus(self) -> int:
        (_, t), = self.endpoints()
        return t

    def min_length(self) -> int:
        return min(p.length for p in self._dict)

    # -- arithmetic -----------------------------------------------------
    def _combine(self, other, sign):
        if other.field != self.field:
            raise ValueError("elements over different fields")
        f = self.field
        d = dict(self._dict)
        for p, c in other._dict.items():
            v = f.reduce(d.get(p, f.zero) + sign * c)
            if v == 0:
                d.pop(p, None)
            else:
                d[p] = v
        return FreeElement._raw(f, d)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        f = self.field
        return FreeElement._raw(f, {p: f.reduce(-c) for p, c in self._dict.items()})

    def scale(self, c):
        f = self.field
        c = f(c)
        if c == 0:
            return FreeElement.zero(f)
        return FreeElement._raw(f, {p: f.reduce(c * v) for p, v in self._dict.items()})

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        f = self.field
        acc = {}
        for p, a in self._dict.items():
            for q, b in other._dict.items():
                if p.terminus != q.origin:
                    continue
                r = Path(p.origin, q.terminus, p.word + q.word)
                acc[r] = acc.get(r, f.zero) + a * b
        return FreeElement(f, acc)

    def uniform_components(self):
        """Split into ``v x w`` pieces, sorted by (origin, terminus)."""
        groups = defaultdict(dict)
        for p, c in self._dict.items():
            groups[(p.origin, p.terminus)][p] = c
        return [(o, t, FreeElement._raw(self.field, groups[(o, t)])) for o, t in sorted(groups)]

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def format(self, quiver) -> str:
        if not self.terms:
            return "0"
        out = []
        for p, c in self.terms:
            c = self.field.to_int(c)
            neg = c < 0
            mag = -c if neg else c
            word = quiver.format_path(p)
            s = word if mag == 1 else f"{mag} {word}"
            if not out:
                out.append(("- " if neg else "") + s)
            else:
                out.append(("- " if neg else "+ ") + s)
        return " ".join(out)

    def __repr__(self):
        return f"FreeElement({list(self.terms)!r})"


def vertex_sum(quiver, field) -> FreeElement:
    """Sum of all trivial paths, the identity of KQ."""
    return FreeElement(field, [(quiver.trivial(v), field.one) for v in range(quiver.num_vertices)])


def path_element(quiver, field, names, coeff=1) -> FreeElement:
    if isinstance(names, Path):
        return FreeElement.monomial(field, names, coeff)
    return FreeElement.monomial(field, quiver.path(names), coeff)
