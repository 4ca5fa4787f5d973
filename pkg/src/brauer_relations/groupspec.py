"""Text syntax for group constructions.

Grammar (whitespace is ignored)::

    spec  := atom | spec "x" atom
    atom  := "C" int | "D" int | "Q8" | "S" int | "A" int
           | "sd(" int "," int "," int ")"
           | "perm(" int (";" gen)* [";"] ")"
    gen   := cycle+
    cycle := "(" int ("," int)* ")"

``D n`` is the dihedral group of order 2n and ``sd(n,m,a)`` is C_n ⋊ C_m with
the generator of C_m acting as x -> x^a.  Cycles in ``perm`` are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GroupTooLargeError, InvalidInputError
from .groups import (
    MAX_ORDER,
    FiniteGroup,
    from_permutations,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_quaternion8,
    make_semidirect_cyclic,
    make_symmetric,
    perm_from_cycles,
)


class SpecSyntaxError(InvalidInputError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Quaternion8:
    pass


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class Semidirect:
    n: int
    m: int
    a: int


@dataclass(frozen=True)
class Perm:
    degree: int
    gens: tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Cyclic | Dihedral | Quaternion8 | Symmetric | Alternating | Semidirect | Perm | Product


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise SpecSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        start = self.pos
        for ch in token:
            if self.peek() != ch:
                self.pos = start
                return False
            self.pos += 1
        return True

    def expect(self, token: str):
        if not self.accept(token):
            self.error(f"expected {token!r}")

    def integer(self) -> int:
        start = self.pos
        sign = -1 if self.accept("-") else 1
        digits = ""
        while self.peek().isdigit():
            digits += self.peek()
            self.pos += 1
        if not digits:
            self.pos = start
            self.skip()
            self.error("expected an integer")
        return sign * int(digits)

    def spec(self) -> GroupSpec:
        node = self.atom()
        while self.peek() in ("x", "×"):
            self.pos += 1
            node = Product(node, self.atom())
        return node

    def atom(self) -> GroupSpec:
        if self.accept("sd("):
            n = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(",")
            a = self.integer()
            self.expect(")")
            return Semidirect(n, m, a)
        if self.accept("perm("):
            degree = self.integer()
            gens = []
            while self.accept(";"):
                if self.peek() == "(":
                    gens.append(self.generator())
            self.expect(")")
            return Perm(degree, tuple(gens))
        if self.accept("Q8"):
            return Quaternion8()
        for letter, cls in (("C", Cyclic), ("D", Dihedral), ("S", Symmetric), ("A", Alternating)):
            if self.accept(letter):
                return cls(self.integer())
        self.error("expected a group (C, D, Q8, S, A, sd(...) or perm(...))")

    def generator(self) -> tuple[tuple[int, ...], ...]:
        cycles = []
        while self.accept("("):
            pts = []
            if self.peek() != ")":
                pts.append(self.integer())
                while self.accept(","):
                    pts.append(self.integer())
            self.expect(")")
            cycles.append(tuple(pts))
        return tuple(cycles)


def parse_group_spec(text: str) -> GroupSpec:
    p = _Parser(text)
    node = p.spec()
    if p.peek():
        p.error("unexpected trailing input")
    return node


def render(spec: GroupSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"C{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.n}"
    if isinstance(spec, Quaternion8):
        return "Q8"
    if isinstance(spec, Symmetric):
        return f"S{spec.n}"
    if isinstance(spec, Alternating):
        return f"A{spec.n}"
    if isinstance(spec, Semidirect):
        return f"sd({spec.n},{spec.m},{spec.a})"
    if isinstance(spec, Perm):
        gens = "".join(";" + "".join("(" + ",".join(map(str, c)) + ")" for c in g) for g in spec.gens)
        return f"perm({spec.degree}{gens})"
    if isinstance(spec, Product):
        return f"{render(spec.left)} x {render(spec.right)}"
    raise TypeError(f"not a group spec: {spec!r}")


def spec_order(spec: GroupSpec) -> int | None:
    """Group order implied by the spec, or None if only enumeration can tell."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Quaternion8):
        return 8
    if isinstance(spec, Symmetric):
        return math.factorial(spec.n) if spec.n >= 1 else None
    if isinstance(spec, Alternating):
        return max(1, math.factorial(spec.n) // 2) if spec.n >= 1 else None
    if isinstance(spec, Semidirect):
        return spec.n * spec.m
    if isinstance(spec, Product):
        a, b = spec_order(spec.left), spec_order(spec.right)
        return None if a is None or b is None else a * b
    return None


def build_group(spec: GroupSpec | str, max_order: int = MAX_ORDER) -> FiniteGroup:
    """Construct the group a spec describes, refusing anything above ``max_order``."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    expected = spec_order(spec)
    if expected is not None and expected > max_order:
        raise GroupTooLargeError(expected, max_order)
    G = _build(spec, max_order)
    G.label = render(spec)
    return G


def _build(spec: GroupSpec, max_order: int) -> FiniteGroup:
    if isinstance(spec, Cyclic):
        return make_cyclic(spec.n)
    if isinstance(spec, Dihedral):
        return make_dihedral(spec.n)
    if isinstance(spec, Quaternion8):
        return make_quaternion8()
    if isinstance(spec, Symmetric):
        return make_symmetric(spec.n)
    if isinstance(spec, Alternating):
        return make_alternating(spec.n)
    if isinstance(spec, Semidirect):
        return make_semidirect_cyclic(spec.n, spec.m, spec.a)
    if isinstance(spec, Perm):
        if spec.degree < 1:
            raise InvalidInputError(f"perm degree must be positive, got {spec.degree}")
        gens = [perm_from_cycles(spec.degree, g) for g in spec.gens]
        return from_permutations(spec.degree, gens, max_order=max_order)
    if isinstance(spec, Product):
        return make_direct_product(_build(spec.left, max_order), _build(spec.right, max_order))
    raise TypeError(f"not a group spec: {spec!r}")
