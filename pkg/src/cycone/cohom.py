"""Exact sheaf cohomology on P2.

Supported objects: line bundles O(k), the homogeneous family S^a T(b)
(symmetric powers of the tangent bundle, twisted), finite direct sums,
twists, duals, symmetric powers and endomorphism bundles of split bundles,
and one plethysm family S^2(S^2 T(b)) needed for the rank-3 boundary-root
analysis.  Everything else raises UnsupportedExpressionError naming the
offending node.

Method notes:

* h^1 of a line bundle on P2 vanishes, so h^0 along the symmetric-power
  Euler resolution 0 -> S^{a-1}(O(1)^3)(b) -> S^a(O(1)^3)(b) -> S^a T(b) -> 0
  is a clean difference of binomials.
* h^2 comes from Serre duality through Omega = T(-3) (rank 2).
* h^1 is chi-complemented, with chi from Riemann-Roch on P2:
  chi = rank + c1(c1+3)/2 - c2, evaluated exactly.
* The plethysm family is evaluated through the exact sequence
  0 -> (det H)^2 -> S^2 S^2 H -> S^4 H -> 0 for rank-2 H, whose line-bundle
  sub has no h^1, so h^0 is additive.

Tables are cached; all functions are pure, and the lru caches are the
synchronized-cache concession the concurrency model allows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .errors import DomainError, InvariantViolationError, UnsupportedExpressionError

# --- expression trees ------------------------------------------------------


@dataclass(frozen=True)
class LineBundle:
    k: int


@dataclass(frozen=True)
class SymTangent:
    """S^a(T_P2) tensor O(b)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0:
            raise DomainError("symmetric power degree must be nonnegative")


@dataclass(frozen=True)
class DirectSum:
    parts: tuple

    def __init__(self, *parts):
        flat = []
        for p in parts:
            if isinstance(p, (tuple, list)):
                flat.extend(p)
            else:
                flat.append(p)
        object.__setattr__(self, "parts", tuple(flat))


@dataclass(frozen=True)
class TwistBy:
    expr: object
    k: int


@dataclass(frozen=True)
class SymPower:
    expr: object
    p: int


@dataclass(frozen=True)
class EndOf:
    expr: object


@dataclass(frozen=True)
class DualOf:
    expr: object


@dataclass(frozen=True)
class _PlethSq:
    """Internal atom: S^2 S^2 T_P2 tensor O(t).  Closed under twist and dual."""

    t: int


SheafExpr = object  # structural union of the node classes above


# --- cohomology tables -----------------------------------------------------


@dataclass(frozen=True)
class CohomologyTable:
    h0: int
    h1: int
    h2: int

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise InvariantViolationError(f"negative cohomology dimension: {self}")

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def __add__(self, other: "CohomologyTable") -> "CohomologyTable":
        return CohomologyTable(self.h0 + other.h0, self.h1 + other.h1, self.h2 + other.h2)


_EMPTY = CohomologyTable(0, 0, 0)


@lru_cache(maxsize=None)
def h0_line(k: int) -> int:
    return comb(k + 2, 2) if k >= 0 else 0


@lru_cache(maxsize=None)
def cohom_line(k: int) -> CohomologyTable:
    """h^i(O(k)) on P2; h^1 always vanishes, h^2 by Serre duality."""
    return CohomologyTable(h0_line(k), 0, h0_line(-3 - k))


@lru_cache(maxsize=None)
def sym_tangent_h0(a: int, b: int) -> int:
    if a < 0:
        raise DomainError("symmetric power degree must be nonnegative")
    if a == 0:
        return h0_line(b)
    return comb(a + 2, 2) * h0_line(a + b) - comb(a + 1, 2) * h0_line(a + b - 1)


@lru_cache(maxsize=None)
def cohom_sym_tangent(a: int, b: int) -> CohomologyTable:
    """h^i(S^a T(b)) via the Euler resolution, Serre duality and chi."""
    if a == 0:
        return cohom_line(b)
    h0 = sym_tangent_h0(a, b)
    h2 = sym_tangent_h0(a, -3 * a - b - 3)  # Serre dual: S^a T(-3a-b-3)
    chi = chi_rr(SymTangent(a, b))
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise InvariantViolationError(f"S^{a}T({b}) produced h1 = {h1}")
    return CohomologyTable(h0, h1, h2)


def _pleth_h0(t: int) -> int:
    # 0 -> O(6+t) -> S^2 S^2 T (t) -> S^4 T(t) -> 0, line-bundle sub has no h^1
    return h0_line(6 + t) + sym_tangent_h0(4, t)


@lru_cache(maxsize=None)
def _pleth_table(t: int) -> CohomologyTable:
    h0 = _pleth_h0(t)
    h2 = _pleth_h0(-15 - t)  # Serre dual: (S^2S^2T)^v = S^2S^2T(-12)
    chi = chi_rr(_PlethSq(t))
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise InvariantViolationError(f"S^2S^2T({t}) produced h1 = {h1}")
    return CohomologyTable(h0, h1, h2)


# --- normalization to evaluable atoms --------------------------------------


def normalize(expr) -> tuple:
    """Flatten an expression into evaluable atoms.

    Atoms are LineBundle, SymTangent with a >= 1, and the internal plethysm
    family.  Raises UnsupportedExpressionError when the expression leaves
    the evaluable fragment.
    """
    if isinstance(expr, LineBundle):
        return (expr,)
    if isinstance(expr, SymTangent):
        return (LineBundle(expr.b),) if expr.a == 0 else (expr,)
    if isinstance(expr, _PlethSq):
        return (expr,)
    if isinstance(expr, DirectSum):
        out = []
        for p in expr.parts:
            out.extend(normalize(p))
        return tuple(out)
    if isinstance(expr, TwistBy):
        return tuple(_twist_atom(a, expr.k) for a in normalize(expr.expr))
    if isinstance(expr, DualOf):
        return tuple(_dual_atom(a) for a in normalize(expr.expr))
    if isinstance(expr, SymPower):
        return _normalize_sym(expr)
    if isinstance(expr, EndOf):
        atoms = normalize(expr.expr)
        if not all(isinstance(a, LineBundle) for a in atoms):
            raise UnsupportedExpressionError(
                expr, "End is only evaluable for direct sums of line bundles"
            )
        return tuple(
            LineBundle(aj.k - ai.k) for ai in atoms for aj in atoms
        )
    raise UnsupportedExpressionError(expr, "unknown expression node")


def _twist_atom(atom, k: int):
    if isinstance(atom, LineBundle):
        return LineBundle(atom.k + k)
    if isinstance(atom, SymTangent):
        return SymTangent(atom.a, atom.b + k)
    return _PlethSq(atom.t + k)


def _dual_atom(atom):
    if isinstance(atom, LineBundle):
        return LineBundle(-atom.k)
    if isinstance(atom, SymTangent):
        # (S^a T)^v = S^a(T(-3)), since T is self-dual up to det on a surface
        return SymTangent(atom.a, -3 * atom.a - atom.b)
    return _PlethSq(-12 - atom.t)


def _normalize_sym(expr: SymPower) -> tuple:
    if expr.p <= 0:
        return (LineBundle(0),)  # degenerate powers normalize to O
    if expr.p == 1:
        return normalize(expr.expr)
    atoms = normalize(expr.expr)
    if all(isinstance(a, LineBundle) for a in atoms):
        degrees = [a.k for a in atoms]
        return tuple(
            LineBundle(sum(degrees[i] for i in idx))
            for idx in combinations_with_replacement(range(len(degrees)), expr.p)
        )
    if len(atoms) == 1 and isinstance(atoms[0], SymTangent):
        st = atoms[0]
        if st.a == 1:
            return (SymTangent(expr.p, expr.p * st.b),)
        if st.a == 2 and expr.p == 2:
            return (_PlethSq(2 * st.b),)
    raise UnsupportedExpressionError(
        expr, "symmetric power is outside the evaluable fragment"
    )


def cohom_expr(e) -> CohomologyTable:
    """Cohomology table of an evaluable expression (additive over sums).

    >>> cohom_expr(parse_sheaf_expr("end(O+O+O(3))")).h2
    2
    >>> cohom_expr(parse_sheaf_expr("twist(sym(sym(SymT(1,-1),2),2),-1)")).h0
    3
    """
    table = _EMPTY
    for atom in normalize(e):
        if isinstance(atom, LineBundle):
            table = table + cohom_line(atom.k)
        elif isinstance(atom, SymTangent):
            table = table + cohom_sym_tangent(atom.a, atom.b)
        else:
            table = table + _pleth_table(atom.t)
    return table


# --- Chern-character bookkeeping and Riemann-Roch --------------------------


@dataclass(frozen=True)
class ChernData:
    """Rank and the first two Chern-character components of a sheaf on P2."""

    rank: int
    c1: Fraction
    ch2: Fraction

    @classmethod
    def line(cls, k: int) -> "ChernData":
        return cls(1, Fraction(k), Fraction(k * k, 2))

    @classmethod
    def tangent(cls) -> "ChernData":
        return cls(2, Fraction(3), Fraction(3, 2))  # c1 = 3, c2 = 3

    @property
    def c2(self) -> Fraction:
        return (self.c1 * self.c1 - 2 * self.ch2) / 2

    @property
    def chi(self) -> Fraction:
        """Riemann-Roch on P2: chi = rank + c1(c1+3)/2 - c2 = ch2 + 3/2 c1 + rank."""
        return self.ch2 + Fraction(3, 2) * self.c1 + self.rank

    def __add__(self, other: "ChernData") -> "ChernData":
        return ChernData(self.rank + other.rank, self.c1 + other.c1, self.ch2 + other.ch2)

    def tensor(self, other: "ChernData") -> "ChernData":
        return ChernData(
            self.rank * other.rank,
            other.rank * self.c1 + self.rank * other.c1,
            other.rank * self.ch2 + self.c1 * other.c1 + self.rank * other.ch2,
        )

    def twist(self, k: int) -> "ChernData":
        return self.tensor(ChernData.line(k))

    def dual(self) -> "ChernData":
        return ChernData(self.rank, -self.c1, self.ch2)

    def sym(self, p: int) -> "ChernData":
        if p <= 0:
            return ChernData.line(0)
        if p == 1:
            return self
        if self.rank == 1:
            return ChernData(1, p * self.c1, p * p * self.ch2)
        # ch of S^p through the splitting principle: for Chern roots x_i the
        # roots of S^p are the multiset sums; only degree <= 2 data is needed.
        r = self.rank
        rank_out = comb(r + p - 1, p)
        sum_m1 = sq_m1 = m1_m2 = 0
        for idx in combinations_with_replacement(range(r), p):
            m0 = idx.count(0)
            sum_m1 += m0
            sq_m1 += m0 * m0
            m1_m2 += m0 * idx.count(1)
        c1_out = sum_m1 * self.c1
        ch2_out = (sq_m1 - m1_m2) * self.ch2 + Fraction(m1_m2, 2) * self.c1 * self.c1
        return ChernData(rank_out, c1_out, ch2_out)


def chern_data(expr) -> ChernData:
    """Chern-character data of any expression (no evaluability restriction)."""
    if isinstance(expr, LineBundle):
        return ChernData.line(expr.k)
    if isinstance(expr, SymTangent):
        return ChernData.tangent().sym(expr.a).twist(expr.b)
    if isinstance(expr, _PlethSq):
        return ChernData.tangent().sym(2).sym(2).twist(expr.t)
    if isinstance(expr, DirectSum):
        data = ChernData(0, Fraction(0), Fraction(0))
        for p in expr.parts:
            data = data + chern_data(p)
        return data
    if isinstance(expr, TwistBy):
        return chern_data(expr.expr).twist(expr.k)
    if isinstance(expr, DualOf):
        return chern_data(expr.expr).dual()
    if isinstance(expr, SymPower):
        return chern_data(expr.expr).sym(expr.p)
    if isinstance(expr, EndOf):
        d = chern_data(expr.expr)
        return d.dual().tensor(d)
    raise UnsupportedExpressionError(expr, "unknown expression node")


def chi_rr(e) -> int:
    """Exact Euler characteristic via Riemann-Roch (always an integer)."""
    chi = chern_data(e).chi
    if chi.denominator != 1:
        raise InvariantViolationError(f"Riemann-Roch produced a non-integer chi for {e!r}")
    return chi.numerator


# --- textual grammar --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|([()+,*-]))")


class _Parser:
    """Recursive-descent parser for the expression grammar.

    expr := term ('+' term)*
    term := [INT ['*']] atom
    atom := 'O' ['(' int ')'] | 'SymT' '(' int ',' int ')'
          | 'twist' '(' expr ',' int ')' | 'sym' '(' expr ',' int ')'
          | 'end' '(' expr ')' | 'dual' '(' expr ')'
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise DomainError(f"bad character in expression: {text[pos:]!r}")
                break
            pos = m.end()
            self.tokens.append(m.group(1) or m.group(2) or m.group(3))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise DomainError(
                f"expected {expected or 'a token'} at position {self.i} in {self.text!r}"
            )
        self.i += 1
        return tok

    def parse(self):
        e = self.expr()
        if self.peek() is not None:
            raise DomainError(f"trailing input in expression: {self.text!r}")
        return e

    def expr(self):
        parts = [self.term()]
        while self.peek() == "+":
            self.take("+")
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else DirectSum(*parts)

    def integer(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise DomainError(f"expected an integer in {self.text!r}")
        return sign * int(tok)

    def term(self):
        mult = 1
        if self.peek() is not None and self.peek().isdigit():
            mult = int(self.take())
            if self.peek() == "*":
                self.take("*")
        atom = self.atom()
        if mult < 1:
            raise DomainError("multiplicity must be positive")
        return atom if mult == 1 else DirectSum(*([atom] * mult))

    def atom(self):
        tok = self.take()
        if tok == "O":
            if self.peek() == "(":
                self.take("(")
                k = self.integer()
                self.take(")")
                return LineBundle(k)
            return LineBundle(0)
        if tok == "SymT":
            self.take("(")
            a = self.integer()
            self.take(",")
            b = self.integer()
            self.take(")")
            return SymTangent(a, b)
        if tok in ("twist", "sym"):
            self.take("(")
            e = self.expr()
            self.take(",")
            k = self.integer()
            self.take(")")
            return TwistBy(e, k) if tok == "twist" else SymPower(e, k)
        if tok in ("end", "dual"):
            self.take("(")
            e = self.expr()
            self.take(")")
            return EndOf(e) if tok == "end" else DualOf(e)
        raise DomainError(f"unknown symbol {tok!r} in expression {self.text!r}")


def parse_sheaf_expr(text: str):
    """Parse the CLI grammar: O(k), SymT(a,b), +, twist(e,k), sym(e,p), end(e), dual(e)."""
    return _Parser(text).parse()


def line_bundle_exponents(expr) -> list[int] | None:
    """Exponents when the expression is a direct sum of line bundles, else None."""
    try:
        atoms = normalize(expr)
    except UnsupportedExpressionError:
        return None
    if all(isinstance(a, LineBundle) for a in atoms):
        return sorted(a.k for a in atoms)
    return None
