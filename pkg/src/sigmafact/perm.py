"""Permutations on the points 1..n.

Composition is right-to-left: ``(a * b)(x) == a(b(x))``.  Internally a
permutation is a tuple of 0-based images; every public surface (cycle
notation, ``images``, ``__call__``) is 1-based.
"""
from __future__ import annotations

import math
import re
from functools import total_ordering

from .errors import DegreeMismatch, ParseError

__all__ = ["Perm", "compose", "parse_perm", "parse_perm_list"]


@total_ordering
class Perm:
    __slots__ = ("_a", "_hash")

    def __init__(self, images):
        """Build from 1-based images: ``Perm([2, 1, 3])`` is (1 2) on 3 points."""
        a = tuple(int(i) - 1 for i in images)
        if sorted(a) != list(range(len(a))):
            raise ValueError(f"not a permutation of 1..{len(a)}: {list(images)!r}")
        if not a:
            raise ValueError("degree must be positive")
        self._a = a
        self._hash = hash(a)

    @classmethod
    def _raw(cls, a):
        p = object.__new__(cls)
        p._a = a
        p._hash = hash(a)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        a = list(range(degree))
        for c in cycles:
            for i, x in enumerate(c):
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                a[x - 1] = c[(i + 1) % len(c)] - 1
        if sorted(a) != list(range(degree)):
            raise ValueError(f"cycles {cycles!r} are not disjoint")
        return cls._raw(tuple(a))

    @property
    def degree(self):
        return len(self._a)

    @property
    def images(self):
        return tuple(x + 1 for x in self._a)

    @property
    def array(self):
        """0-based image tuple."""
        return self._a

    def __call__(self, x):
        return self._a[x - 1] + 1

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = [0] * len(self._a)
        for i, j in enumerate(self._a):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(i == x for i, x in enumerate(self._a))

    def cycles(self):
        seen = set()
        out = []
        for i, x in enumerate(self._a):
            if i in seen or x == i:
                continue
            c = [i + 1]
            seen.add(i)
            j = x
            while j != i:
                seen.add(j)
                c.append(j + 1)
                j = self._a[j]
            out.append(tuple(c))
        return out

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def moved_points(self):
        return [i + 1 for i, x in enumerate(self._a) if x != i]

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self._a == other._a

    def __lt__(self, other):
        return self._a < other._a

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __repr__(self):
        return f"Perm.parse({str(self)!r}, degree={self.degree})"

    @staticmethod
    def parse(text, degree=None):
        return parse_perm(text, degree)


def compose(a: Perm, b: Perm) -> Perm:
    """Return a∘b, i.e. apply ``b`` first."""
    if len(a._a) != len(b._a):
        raise DegreeMismatch(f"cannot compose degree {a.degree} with degree {b.degree}")
    aa = a._a
    return Perm._raw(tuple(aa[x] for x in b._a))


_TOKEN = re.compile(r"[^\s,]+")


def _scan_cycles(text, start, stop, line=None):
    """Parse ``text[start:stop]`` as a product of cycles; return list of cycles."""
    cycles = []
    i = start
    while i < stop:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", text, line, i + 1)
        close = text.find(")", i, stop)
        if close < 0:
            raise ParseError("unclosed '('", text, line, i + 1)
        pts = []
        for m in _TOKEN.finditer(text, i + 1, close):
            tok, col = m.group(), m.start() + 1
            if not tok.isdigit() or int(tok) < 1:
                raise ParseError(f"bad point {tok!r}", text, line, col)
            if int(tok) in pts:
                raise ParseError(f"point {tok} repeated inside a cycle", text, line, col)
            pts.append(int(tok))
        if len(pts) > 1:
            cycles.append(tuple(pts))
        i = close + 1
    return cycles


def _build(cycles, degree, text, line):
    top = max((x for c in cycles for x in c), default=1)
    if degree is None:
        degree = top
    elif top > degree:
        raise ParseError(f"point {top} exceeds degree {degree}", text, line)
    try:
        return Perm.from_cycles(cycles, degree)
    except ValueError as exc:
        raise ParseError(str(exc), text, line) from None


def parse_perm(text: str, degree: int | None = None, *, line: int | None = None) -> Perm:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity."""
    cycles = _scan_cycles(text, 0, len(text), line)
    return _build(cycles, degree, text, line)


def parse_perm_list(text: str, degree: int | None = None, *, line: int | None = None) -> list[Perm]:
    """Parse generators separated by ``;`` or by ``,`` outside parentheses.

    All permutations are lifted to a common degree (the largest point seen
    unless ``degree`` is given).
    """
    chunks = []
    depth = 0
    begin = 0
    for i, ch in enumerate(text):
        if ch == "(":
            if depth:
                raise ParseError("nested '('", text, line, i + 1)
            depth = 1
        elif ch == ")":
            if not depth:
                raise ParseError("unmatched ')'", text, line, i + 1)
            depth = 0
        elif ch in ";," and not depth:
            chunks.append((begin, i))
            begin = i + 1
    if depth:
        raise ParseError("unclosed '('", text, line, len(text))
    chunks.append((begin, len(text)))
    parsed = []
    for a, b in chunks:
        if not text[a:b].strip():
            if len(chunks) == 1:
                return []
            raise ParseError("empty generator", text, line, a + 1)
        parsed.append(_scan_cycles(text, a, b, line))
    top = max((x for cs in parsed for c in cs for x in c), default=1)
    if degree is None:
        degree = top
    return [_build(cs, degree, text, line) for cs in parsed]
