"""Built-in algebra descriptions shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .parser import parse_algebra

ALIASES = {"nonstd-D4-six": "nonstd-D4"}


def names():
    files = resources.files("qhh") / "corpus"
    found = sorted(p.name[:-4] for p in files.iterdir() if p.name.endswith(".alg"))
    return found + sorted(ALIASES)


def text(name: str) -> str:
    fname = ALIASES.get(name, name) + ".alg"
    res = resources.files("qhh") / "corpus" / fname
    if not res.is_file():
        raise KeyError(name)
    return res.read_text(encoding="utf-8")


def load(name: str, field=None):
    """Corpus entry by name, or an algebra file by path."""
    try:
        src = text(name)
    except KeyError:
        path = Path(name)
        if not path.is_file():
            raise FileNotFoundError(f"no corpus entry or file named {name!r}") from None
        src = path.read_text(encoding="utf-8")
        name = path.stem
    pres = parse_algebra(src, field=field)
    pres.name = name
    return pres
