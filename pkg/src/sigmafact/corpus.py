"""Named groups given by generators in cycle notation.

A corpus file is INI-style, one section per group::

    [A5]
    degree = 5
    generators = (1 2 3); (3 4 5)
    order = 60

``order`` is optional; when present it is checked against the stabilizer
chain at load time.
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .group import Group, build_group
from .perm import parse_perm_list

__all__ = ["CorpusEntry", "CorpusError", "load_corpus", "parse_corpus", "builtin_corpus",
           "builtin_group", "find_entry"]


class CorpusError(ParseError):
    def __init__(self, entry, message, line=None):
        super().__init__(f"entry {entry!r}: {message}", line=line)
        self.entry = entry


@dataclass
class CorpusEntry:
    name: str
    degree: int
    generators: list
    expected_order: int | None = None
    line: int | None = None

    def build(self) -> Group:
        try:
            perms = parse_perm_list("; ".join(self.generators), self.degree, line=self.line)
        except ParseError as exc:
            raise CorpusError(self.name, str(exc), self.line) from None
        G = build_group(perms, self.degree)
        if self.expected_order is not None and G.order != self.expected_order:
            raise CorpusError(
                self.name, f"generators give order {G.order}, expected {self.expected_order}", self.line)
        return G


def _section_lines(text):
    lines = {}
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s.startswith("[") and s.endswith("]"):
            lines[s[1:-1].strip()] = no
    return lines


def parse_corpus(text: str, source="<corpus>"):
    cp = configparser.ConfigParser(interpolation=None, delimiters=("=",), comment_prefixes=("#",),
                                   inline_comment_prefixes=None)
    try:
        cp.read_string(text, source)
    except configparser.Error as exc:
        raise ParseError(str(exc).replace("\n", " "), line=getattr(exc, "lineno", None)) from None
    where = _section_lines(text)
    entries = []
    for name in cp.sections():
        sec = cp[name]
        line = where.get(name)
        try:
            degree = int(sec["degree"])
            order = int(sec["order"]) if "order" in sec else None
        except KeyError as exc:
            raise CorpusError(name, f"missing key {exc.args[0]!r}", line) from None
        except ValueError as exc:
            raise CorpusError(name, str(exc), line) from None
        if "generators" not in sec:
            raise CorpusError(name, "missing key 'generators'", line)
        gens = [g.strip() for g in sec["generators"].split(";") if g.strip()]
        entries.append(CorpusEntry(name, degree, gens, order, line))
    return entries


def load_corpus(path) -> list:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read corpus {path}: {exc.strerror}") from None
    return parse_corpus(text, str(path))


def builtin_corpus() -> list:
    text = resources.files("sigmafact").joinpath("data/corpus.ini").read_text()
    return parse_corpus(text, "corpus.ini")


def _norm(name):
    return "".join(c for c in name.lower() if c not in "(), ")


def find_entry(entries, name):
    """Entry whose name matches ``name`` ignoring case, parentheses and commas."""
    for e in entries:
        if _norm(e.name) == _norm(name):
            return e
    return None


def builtin_group(name: str) -> Group:
    e = find_entry(builtin_corpus(), name)
    if e is None:
        raise KeyError(name)
    return e.build()
