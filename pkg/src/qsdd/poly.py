"""Sparse exact polynomials keyed by exponent codes.

A code is a tuple of nonnegative integers ``(c_1, c_2, ...)`` with trailing
zeros stripped.  Position ``i`` (1-based) holds the exponent of the ``i``-th
variable, so ``(2, 0, 1)`` is ``x1^2*x3``.  The same tuples double as forest
identifiers in :mod:`qsdd.forest`.

Two concrete rings are provided: :class:`XPoly` (integer coefficients,
variables ``x1, x2, ...``) and :class:`LPoly` (rational coefficients,
variables ``l1, l2, ...`` standing for the lambda alphabet).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple

Code = Tuple[int, ...]


def canon(c: Iterable[int]) -> Code:
    """Strip trailing zeros; reject negative entries."""
    t = tuple(int(v) for v in c)
    if any(v < 0 for v in t):
        raise ValueError(f"negative entry in code {t}")
    end = len(t)
    while end and t[end - 1] == 0:
        end -= 1
    return t[:end]


def revlex_key(c: Code):
    # For canonical codes the longer one has a nonzero entry where the other
    # has zero, so comparing length first and then the reversed tuple gives
    # "largest differing position decides".
    return (len(c), c[::-1])


def degree_revlex_key(c: Code):
    return (sum(c), len(c), c[::-1])


def pad(c: Code, n: int) -> Code:
    if len(c) > n:
        raise ValueError(f"code {c} longer than {n}")
    return c + (0,) * (n - len(c))


def code_factorial(c: Code) -> int:
    out = 1
    for v in c:
        for k in range(2, v + 1):
            out *= k
    return out


def _add_codes(a: Code, b: Code) -> Code:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return tuple(out)


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class Poly:
    """Immutable sparse polynomial; subclasses fix the variable name and the
    coefficient ring."""

    var = "?"

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        acc: Dict[Code, object] = {}
        if terms:
            for c, a in terms.items():
                a = self._coerce(a)
                if a:
                    k = canon(c)
                    acc[k] = acc.get(k, 0) + a
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @staticmethod
    def _coerce(a):
        raise NotImplementedError

    @classmethod
    def _raw(cls, terms: Dict[Code, object]):
        # trusted constructor: codes canonical, coefficients nonzero
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # construction helpers
    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(): cls._coerce(1)})

    @classmethod
    def const(cls, a):
        a = cls._coerce(a)
        return cls._raw({(): a} if a else {})

    @classmethod
    def monomial(cls, c: Iterable[int], coeff=1):
        coeff = cls._coerce(coeff)
        return cls._raw({canon(c): coeff} if coeff else {})

    @classmethod
    def variable(cls, i: int):
        if i < 1:
            raise ValueError("variable index must be >= 1")
        return cls._raw({(0,) * (i - 1) + (1,): cls._coerce(1)})

    # inspection
    def terms(self) -> Dict[Code, object]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Code, object]]:
        return iter(self._terms.items())

    def codes(self):
        return self._terms.keys()

    def coeff(self, c: Iterable[int]):
        return self._terms.get(canon(c), 0)

    def constant_term(self):
        return self._terms.get((), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(c) for c in self._terms)

    def nvars(self) -> int:
        """Largest variable index that occurs (0 for constants)."""
        return max((len(c) for c in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(c) for c in self._terms}) <= 1

    def homogeneous_components(self) -> Dict[int, "Poly"]:
        out: Dict[int, Dict[Code, object]] = {}
        for c, a in self._terms.items():
            out.setdefault(sum(c), {})[c] = a
        return {d: self._raw(t) for d, t in sorted(out.items())}

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda t: degree_revlex_key(t[0]))

    # ring operations
    def _check(self, other):
        if isinstance(other, Poly):
            if type(other) is not type(self):
                raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
            return other
        return self.const(other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for c, a in other._terms.items():
            v = out.get(c, 0) + a
            if v:
                out[c] = v
            else:
                out.pop(c, None)
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({c: -a for c, a in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            a = self._coerce(other)
            if not a:
                return self.zero()
            return self._raw({c: v * a for c, v in self._terms.items()})
        other = self._check(other)
        out: Dict[Code, object] = {}
        for c1, a1 in self._terms.items():
            for c2, a2 in other._terms.items():
                c = _add_codes(c1, c2)
                out[c] = out.get(c, 0) + a1 * a2
        return self._raw({c: a for c, a in out.items() if a})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return type(other) is type(self) and self._terms == other._terms
        try:
            return self._terms == self.const(other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def map_codes(self, fn: Callable[[Code], Iterable[Tuple[Code, object]]]):
        """Apply a linear map given on monomials.  ``fn(c)`` yields
        ``(code, scalar)`` pairs; codes need not be canonical."""
        out: Dict[Code, object] = {}
        for c, a in self._terms.items():
            for d, s in fn(c):
                d = canon(d)
                out[d] = out.get(d, 0) + a * s
        return self._raw({c: a for c, a in out.items() if a})

    # text
    def _coeff_str(self, a) -> str:
        return str(a)

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for c, a in self.sorted_items():
            factors = []
            for i, e in enumerate(c, start=1):
                if e == 1:
                    factors.append(f"{self.var}{i}")
                elif e > 1:
                    factors.append(f"{self.var}{i}^{e}")
            neg = a < 0
            mag = -a if neg else a
            if not factors:
                body = self._coeff_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = self._coeff_str(mag) + "*" + "*".join(factors)
            parts.append(("-" if neg else "+", body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = format

    def __repr__(self):
        return f"{type(self).__name__}({self.format()!r})"

    def to_json_obj(self) -> dict:
        return {"terms": [{"coeff": self._coeff_str(a), "code": list(c)} for c, a in self.sorted_items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict):
        return cls({tuple(t["code"]): cls._parse_coeff(t["coeff"]) for t in obj["terms"]})

    @classmethod
    def from_json(cls, text: str):
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def _parse_coeff(cls, s: str):
        raise NotImplementedError

    @classmethod
    def parse(cls, text: str):
        return _Parser(text, cls).parse()


class XPoly(Poly):
    """Polynomial in x1, x2, ... with integer coefficients."""

    var = "x"
    __slots__ = ()

    @staticmethod
    def _coerce(a):
        if isinstance(a, bool) or not isinstance(a, int):
            if isinstance(a, Fraction) and a.denominator == 1:
                return int(a)
            raise TypeError(f"XPoly coefficients must be integers, got {a!r}")
        return a

    @classmethod
    def _parse_coeff(cls, s: str):
        return int(s)


class LPoly(Poly):
    """Polynomial in the lambda variables (written l1, l2, ...) with rational
    coefficients."""

    var = "l"
    __slots__ = ()

    @staticmethod
    def _coerce(a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return Fraction(a)
        raise TypeError(f"LPoly coefficients must be rational, got {a!r}")

    @classmethod
    def _parse_coeff(cls, s: str):
        return Fraction(s)

    def _coeff_str(self, a) -> str:
        return str(a)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\S))")


class _Parser:
    """Recursive-descent parser for

        poly   := ['-'] term (('+'|'-') term)*
        term   := [number '*'] factor ('*' factor)* | number
        factor := VAR index ['^' exponent]

    where ``number`` is an integer (or ``p/q`` for LPoly)."""

    def __init__(self, text: str, cls):
        self.text = text
        self.cls = cls
        self.toks = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                break
            start = m.start(m.lastindex)
            self.toks.append((m.group(m.lastindex), m.lastindex, start))
            pos = m.end()
        if text[pos:].strip():
            raise ParseError("unexpected input", pos)
        self.i = 0

    @staticmethod
    def show(tok) -> str:
        return "end of input" if tok is None else repr(tok)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, s):
        tok, _, pos = self.take()
        if tok != s:
            raise ParseError(f"expected {s!r}, got {self.show(tok)}", pos)

    def integer(self, what):
        tok, kind, pos = self.take()
        if kind != 1:
            raise ParseError(f"expected {what}, got {self.show(tok)}", pos)
        return int(tok), pos

    def number(self):
        val, pos = self.integer("number")
        if self.peek()[0] == "/":
            if self.cls is XPoly:
                raise ParseError("rational coefficient in integer polynomial", self.peek()[2])
            self.take()
            den, dpos = self.integer("denominator")
            if den == 0:
                raise ParseError("zero denominator", dpos)
            return Fraction(val, den)
        return val

    def factor(self, code):
        tok, kind, pos = self.take()
        var = self.cls.var
        if kind != 2 or not tok.startswith(var):
            raise ParseError(f"expected variable {var}<index>, got {self.show(tok)}", pos)
        rest = tok[len(var):]
        if rest:
            raise ParseError(f"unknown name {tok!r}", pos)
        idx, ipos = self.integer("variable index")
        if idx < 1:
            raise ParseError("variable index must be >= 1", ipos)
        exp = 1
        if self.peek()[0] == "^":
            self.take()
            exp, epos = self.integer("exponent")
            if exp < 1:
                raise ParseError("exponent must be >= 1", epos)
        if len(code) < idx:
            code.extend([0] * (idx - len(code)))
        code[idx - 1] += exp

    def term(self):
        code: list = []
        coeff = 1
        tok, kind, _ = self.peek()
        if kind == 1:
            coeff = self.number()
            if self.peek()[0] != "*":
                return coeff, code
            self.take()
        self.factor(code)
        while self.peek()[0] == "*":
            self.take()
            self.factor(code)
        return coeff, code

    def parse(self):
        if not self.toks:
            raise ParseError("empty input", 0)
        terms: Dict[Code, object] = {}
        sign = 1
        if self.peek()[0] in ("-", "+"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            coeff, code = self.term()
            c = canon(code)
            terms[c] = terms.get(c, 0) + sign * coeff
            tok, _, pos = self.peek()
            if tok is None:
                break
            if tok not in ("+", "-"):
                raise ParseError(f"unexpected {tok!r}", pos)
            self.take()
            sign = 1 if tok == "+" else -1
        return self.cls(terms)


def parse_poly(text: str) -> XPoly:
    return XPoly.parse(text)


def parse_lpoly(text: str) -> LPoly:
    return LPoly.parse(text)


def format_poly(p: Poly) -> str:
    return p.format()


def x(i: int) -> XPoly:
    return XPoly.variable(i)


def lam(i: int) -> LPoly:
    return LPoly.variable(i)


def multiply(f: Poly, g: Poly) -> Poly:
    return f * g
