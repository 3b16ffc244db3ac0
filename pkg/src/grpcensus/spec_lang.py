"""Group-expression mini-language.

Grammar::

    expr := term ("x" term)*
    term := atom | "(" expr ")"
    atom := NAME "(" args ")"

Atoms: ``C(n) D(n) Q(n) S(n) A(n) E(p,k) ES(sign,n) EXT16(e,f)`` and
``PERM(degree; cycles, cycles, ...)`` with 1-based cycle notation, e.g.
``PERM(5; (1 2 3 4 5), (2 5)(3 4))``.  ``x`` is the direct product and
associates to the left.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from . import constructions
from .core import MAX_ORDER, Group
from .errors import BadArity, CapExceeded, SpecSyntaxError, UnknownAtom

ARITY = {"C": 1, "D": 1, "Q": 1, "S": 1, "A": 1, "E": 2, "ES": 2, "EXT16": 2}


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple

    def __str__(self):
        if self.name == "PERM":
            degree, gens = self.args
            body = ", ".join(
                "".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in g) or "()"
                for g in gens)
            return f"PERM({degree}; {body})"
        return f"{self.name}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"

    def __str__(self):
        right = f"({self.right})" if isinstance(self.right, Product) else str(self.right)
        return f"{self.left}x{right}"


GroupSpec = Union[Atom, Product]

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Z][A-Z0-9]*)|(?P<int>[+-]?\d+)|(?P<sign>[+-])"
                    r"|(?P<op>[x×])|(?P<punct>[(),;]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise SpecSyntaxError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op":
            self.i += 1
            node = Product(node, self.term())
        return node

    def term(self):
        tok = self.peek()
        if tok[0] == "punct" and tok[1] == "(":
            self.i += 1
            node = self.expr()
            self.take("punct", ")")
            return node
        if tok[0] == "name":
            return self.atom()
        raise SpecSyntaxError(f"expected a group atom, got {tok[1] or 'end of input'!r}", tok[2])

    def atom(self):
        _, name, pos = self.take("name")
        if name != "PERM" and name not in ARITY:
            raise UnknownAtom(f"unknown atom {name!r} at position {pos}")
        self.take("punct", "(")
        if name == "PERM":
            return self.perm_args()
        args = []
        while True:
            tok = self.peek()
            if tok[0] == "int":
                args.append(int(tok[1]))
            elif tok[0] == "sign":
                args.append(tok[1])
            else:
                raise SpecSyntaxError(f"expected an argument, got {tok[1] or 'end of input'!r}",
                                      tok[2])
            self.i += 1
            if self.peek()[1] == ",":
                self.i += 1
                continue
            break
        self.take("punct", ")")
        if len(args) != ARITY[name]:
            raise BadArity(f"{name} takes {ARITY[name]} argument(s), got {len(args)}")
        return _normalize(name, args, pos)

    def perm_args(self):
        degree = int(self.take("int")[1])
        self.take("punct", ";")
        gens = []
        while True:
            cycles = []
            while self.peek()[1] == "(":
                self.i += 1
                cyc = []
                while self.peek()[0] == "int":
                    cyc.append(int(self.take("int")[1]))
                self.take("punct", ")")
                if cyc:
                    cycles.append(tuple(cyc))
            if not cycles and self.tokens[self.i - 1][1] != ")":
                tok = self.peek()
                raise SpecSyntaxError("expected a cycle", tok[2])
            gens.append(tuple(cycles))
            if self.peek()[1] == ",":
                self.i += 1
                continue
            break
        self.take("punct", ")")
        return Atom("PERM", (degree, tuple(gens)))


def _normalize(name, args, pos):
    if name == "ES":
        sign, n = args
        if sign not in ("+", "-") or not isinstance(n, int):
            raise SpecSyntaxError("ES takes a sign and an order, e.g. ES(+,32)", pos)
        return Atom(name, (sign, n))
    if any(not isinstance(a, int) for a in args):
        raise SpecSyntaxError(f"{name} takes integer arguments", pos)
    return Atom(name, tuple(args))


def parse_spec(text: str) -> GroupSpec:
    parser = _Parser(text)
    node = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise SpecSyntaxError(f"unexpected {tok[1]!r}", tok[2])
    return node


def format_spec(spec: GroupSpec) -> str:
    return str(spec)


def _atom_order(atom: Atom):
    n = atom.args[0] if atom.args else None
    if atom.name in ("C", "D", "Q"):
        return n
    if atom.name == "S":
        return math.factorial(n) if 0 <= n <= 12 else None
    if atom.name == "A":
        return max(1, math.factorial(n) // 2) if 0 <= n <= 12 else None
    if atom.name == "E":
        p, k = atom.args
        return p ** k if 0 <= k <= 64 else None
    if atom.name == "ES":
        return atom.args[1]
    if atom.name == "EXT16":
        return 16
    return None


def expected_order(spec: GroupSpec):
    """Order implied by the expression, or None when only building tells."""
    if isinstance(spec, Product):
        a, b = expected_order(spec.left), expected_order(spec.right)
        return None if a is None or b is None else a * b
    return _atom_order(spec)


def _perm_images(degree, cycles):
    img = list(range(degree))
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= degree:
                raise SpecSyntaxError(f"point {x} outside 1..{degree}", 0)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return img


def _build_atom(atom: Atom) -> Group:
    name, args = atom.name, atom.args
    c = constructions
    if name == "C":
        G = c.cyclic(args[0])
    elif name == "D":
        G = c.dihedral(args[0])
    elif name == "Q":
        G = c.dicyclic(args[0])
    elif name == "S":
        G = c.symmetric(args[0])
    elif name == "A":
        G = c.alternating(args[0])
    elif name == "E":
        G = c.elementary_abelian(*args)
    elif name == "ES":
        G = c.extraspecial(args[1], args[0])
    elif name == "EXT16":
        G = c.ext16(*args)
    else:
        degree, gens = args
        G = c.from_permutations(degree, [_perm_images(degree, g) for g in gens])
    return G.relabel(str(atom))


def build(spec) -> Group:
    """Realise a spec (string or parsed tree) as a group labelled canonically."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    order = expected_order(spec)
    if order is not None and order > MAX_ORDER:
        raise CapExceeded(f"{spec} has order {order} > {MAX_ORDER}")
    if isinstance(spec, Product):
        G = constructions.direct_product(build(spec.left), build(spec.right))
        return G.relabel(str(spec))
    return _build_atom(spec)
