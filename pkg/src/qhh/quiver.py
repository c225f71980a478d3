"""Quivers and paths.

Paths are read left to right: ``a b`` means first ``a``, then ``b``, so
``terminus(a) == origin(b)``.  A :class:`Path` stores vertex and arrow
*indices*; names live on the :class:`Quiver`.

The admissible order used throughout is length-then-lexicographic, with
arrows compared by declaration order.  :func:`order_key` realises it.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence


class CompositionError(ValueError):
    pass


class QuiverError(ValueError):
    pass


class Path(NamedTuple):
    origin: int
    terminus: int
    word: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_trivial(self) -> bool:
        return not self.word


def order_key(p: Path):
    return (len(p.word), p.word, p.origin)


def compose(p: Path, q: Path) -> Path:
    if p.terminus != q.origin:
        raise CompositionError(f"cannot compose: terminus {p.terminus} != origin {q.origin}")
    if not p.word:
        return q
    if not q.word:
        return p
    return Path(p.origin, q.terminus, p.word + q.word)


def composable(p: Path, q: Path) -> bool:
    return p.terminus == q.origin


class Quiver:
    """A finite quiver with named vertices and arrows.

    >>> Q = Quiver(["1", "2"], [("a", "1", "2")])
    >>> Q.format_path(Q.path("a"))
    'a'
    """

    def __init__(self, vertices: Sequence[str], arrows: Sequence[tuple[str, str, str]]):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self.arrows = []
        self.arrow_names = []
        self.arrow_origin = []
        self.arrow_terminus = []
        for name, o, t in arrows:
            name, o, t = str(name), str(o), str(t)
            if name in self.arrow_names or name in self._vindex:
                raise QuiverError(f"duplicate id {name!r}")
            for v in (o, t):
                if v not in self._vindex:
                    raise QuiverError(f"arrow {name!r} uses undeclared vertex {v!r}")
            self.arrows.append((name, o, t))
            self.arrow_names.append(name)
            self.arrow_origin.append(self._vindex[o])
            self.arrow_terminus.append(self._vindex[t])
        self._aindex = {a: i for i, a in enumerate(self.arrow_names)}
        self.out_arrows = [[] for _ in self.vertices]
        for i, o in enumerate(self.arrow_origin):
            self.out_arrows[o].append(i)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def vertex_index(self, v: str) -> int:
        try:
            return self._vindex[str(v)]
        except KeyError:
            raise QuiverError(f"unknown vertex {v!r}") from None

    def arrow_index(self, a: str) -> int:
        try:
            return self._aindex[a]
        except KeyError:
            raise QuiverError(f"unknown arrow {a!r}") from None

    def trivial(self, v) -> Path:
        if isinstance(v, str):
            v = self.vertex_index(v)
        return Path(v, v, ())

    def arrow(self, a) -> Path:
        if isinstance(a, str):
            a = self.arrow_index(a)
        return Path(self.arrow_origin[a], self.arrow_terminus[a], (a,))

    def word_path(self, word: Sequence[int]) -> Path:
        """Path from a nonempty word of arrow indices; checks composability."""
        word = tuple(word)
        if not word:
            raise QuiverError("empty word needs a vertex; use trivial()")
        for x, y in zip(word, word[1:]):
            if self.arrow_terminus[x] != self.arrow_origin[y]:
                raise CompositionError(
                    f"{self.arrow_names[x]} ends at {self.vertices[self.arrow_terminus[x]]} "
                    f"but {self.arrow_names[y]} starts at {self.vertices[self.arrow_origin[y]]}")
        return Path(self.arrow_origin[word[0]], self.arrow_terminus[word[-1]], word)

    def path(self, names) -> Path:
        """``Q.path("a d g")`` or ``Q.path(["a", "d"])``."""
        if isinstance(names, str):
            names = names.split()
        return self.word_path([self.arrow_index(n) for n in names])

    def subpath(self, p: Path, i: int, j: int) -> Path:
        """The subword ``p.word[i:j]``; trivial at the right vertex when empty."""
        w = p.word[i:j]
        if w:
            return Path(self.arrow_origin[w[0]], self.arrow_terminus[w[-1]], w)
        if i == 0:
            return Path(p.origin, p.origin, ())
        return Path(self.arrow_terminus[p.word[i - 1]], self.arrow_terminus[p.word[i - 1]], ())

    def format_path(self, p: Path) -> str:
        if not p.word:
            return "@" + self.vertices[p.origin]
        return " ".join(self.arrow_names[a] for a in p.word)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((tuple(self.vertices), tuple(self.arrows)))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"
