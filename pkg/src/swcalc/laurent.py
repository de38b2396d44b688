"""Exact multivariate Laurent polynomials over Z with half-integer exponents.

The lattice of allowed exponents is (1/2)Z in every variable. Internally an
exponent is stored as an int equal to twice its true value, so t^(1/2) is the
stored exponent 1 and t^2 is the stored exponent 4. All arithmetic is exact
integer arithmetic; nothing in this module ever rounds.

A polynomial is a dict from stored-exponent vectors (tuples aligned with the
variable basis) to nonzero int coefficients. The canonical term order used
for printing and for division is descending lexicographic order on the
stored vectors.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    BasisMismatch,
    DivisionByZero,
    InexactDivision,
    InvalidParameters,
    ParseError,
    UnknownVariable,
)

__all__ = [
    "VarBasis",
    "LaurentPoly",
    "parse_poly",
    "exact_div",
    "is_symmetric",
]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# Exponents accepted from the public API: ints, or Fractions with
# denominator 1 or 2.
ExpLike = Union[int, Fraction]


class VarBasis(tuple):
    """Ordered tuple of distinct variable names.

    The order is the canonical print/term order, so ("t", "e1") and
    ("e1", "t") are different bases on purpose.
    """

    def __new__(cls, names: Iterable[str]) -> "VarBasis":
        names = tuple(names)
        for n in names:
            if not isinstance(n, str) or not _NAME_RE.match(n):
                raise UnknownVariable(f"bad variable name {n!r}")
        if len(set(names)) != len(names):
            raise BasisMismatch(f"duplicate variable in basis {names!r}")
        return super().__new__(cls, names)

    def position(self, name: str) -> int:
        try:
            return self.index(name)
        except ValueError:
            raise UnknownVariable(
                f"variable {name!r} not in basis {tuple(self)!r}"
            ) from None


def _store(exp: ExpLike) -> int:
    """Convert a true exponent to its stored (doubled) form."""
    if isinstance(exp, int):
        return 2 * exp
    if isinstance(exp, Fraction):
        doubled = exp * 2
        if doubled.denominator != 1:
            raise InvalidParameters(
                f"exponent {exp} not on the half-integer lattice"
            )
        return int(doubled)
    raise InvalidParameters(f"exponent {exp!r} must be int or Fraction")


def _unstore(stored: int) -> ExpLike:
    """Stored form back to a true exponent: int when even, Fraction when odd."""
    if stored % 2 == 0:
        return stored // 2
    return Fraction(stored, 2)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over a fixed variable basis."""

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(self, basis: Iterable[str], terms: Mapping[tuple, int] = ()):
        """Build from a mapping of stored-exponent vectors to coefficients.

        Most callers want the classmethod constructors (zero, one, constant,
        variable, monomial, from_terms) or parse_poly instead; this raw form
        expects stored (doubled) exponents.
        """
        b = basis if isinstance(basis, VarBasis) else VarBasis(basis)
        clean: dict = {}
        n = len(b)
        for vec, coeff in dict(terms).items():
            vec = tuple(vec)
            if len(vec) != n or not all(isinstance(e, int) for e in vec):
                raise BasisMismatch(
                    f"exponent vector {vec!r} does not fit basis {tuple(b)!r}"
                )
            if not isinstance(coeff, int):
                raise InvalidParameters(f"coefficient {coeff!r} is not an int")
            if coeff != 0:
                clean[vec] = clean.get(vec, 0) + coeff
                if clean[vec] == 0:
                    del clean[vec]
        object.__setattr__(self, "basis", b)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls, basis: Iterable[str]) -> "LaurentPoly":
        return cls(basis, {})

    @classmethod
    def constant(cls, basis: Iterable[str], value: int) -> "LaurentPoly":
        b = basis if isinstance(basis, VarBasis) else VarBasis(basis)
        if value == 0:
            return cls(b, {})
        return cls(b, {(0,) * len(b): value})

    @classmethod
    def one(cls, basis: Iterable[str]) -> "LaurentPoly":
        return cls.constant(basis, 1)

    @classmethod
    def variable(cls, basis: Iterable[str], name: str,
                 exp: ExpLike = 1) -> "LaurentPoly":
        return cls.monomial(basis, {name: exp})

    @classmethod
    def monomial(cls, basis: Iterable[str], exps: Mapping[str, ExpLike],
                 coeff: int = 1) -> "LaurentPoly":
        b = basis if isinstance(basis, VarBasis) else VarBasis(basis)
        vec = [0] * len(b)
        for name, e in exps.items():
            vec[b.position(name)] = _store(e)
        return cls(b, {tuple(vec): coeff})

    @classmethod
    def from_terms(cls, basis: Iterable[str],
                   terms: Iterable[tuple]) -> "LaurentPoly":
        """Build from (exponent mapping, coefficient) pairs with true exponents."""
        b = basis if isinstance(basis, VarBasis) else VarBasis(basis)
        acc: dict = {}
        for exps, coeff in terms:
            vec = [0] * len(b)
            for name, e in exps.items():
                vec[b.position(name)] = _store(e)
            key = tuple(vec)
            acc[key] = acc.get(key, 0) + coeff
        return cls(b, acc)

    # ---- basic queries ----

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * len(self.basis): 1}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        """Number of nonzero terms (the size of the support)."""
        return len(self._terms)

    def support(self) -> list:
        """Exponent vectors with nonzero coefficient, in canonical order.

        Entries are tuples of true exponents aligned with the basis (ints
        where integral, Fractions on the half lattice).
        """
        return [tuple(_unstore(e) for e in vec)
                for vec in sorted(self._terms, reverse=True)]

    def terms(self) -> list:
        """Canonically ordered (exponent dict, coefficient) pairs."""
        out = []
        for vec in sorted(self._terms, reverse=True):
            exps = {name: _unstore(e)
                    for name, e in zip(self.basis, vec) if e != 0}
            out.append((exps, self._terms[vec]))
        return out

    def coefficient(self, exps: Mapping[str, ExpLike]) -> int:
        vec = [0] * len(self.basis)
        for name, e in exps.items():
            vec[self.basis.position(name)] = _store(e)
        return self._terms.get(tuple(vec), 0)

    def min_exponent(self, name: str) -> Optional[ExpLike]:
        """Smallest exponent of the variable across the support; None if zero."""
        i = self.basis.position(name)
        if not self._terms:
            return None
        return _unstore(min(vec[i] for vec in self._terms))

    def max_exponent(self, name: str) -> Optional[ExpLike]:
        i = self.basis.position(name)
        if not self._terms:
            return None
        return _unstore(max(vec[i] for vec in self._terms))

    def eval_at_one(self) -> int:
        """Value with every variable set to 1: the sum of coefficients."""
        return sum(self._terms.values())

    # ---- equality / hashing ----

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(self.basis, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((tuple(self.basis), frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # ---- arithmetic ----

    def _check_basis(self, other: "LaurentPoly") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(
                f"bases differ: {tuple(self.basis)!r} vs {tuple(other.basis)!r}"
            )

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.basis, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check_basis(o)
        acc = dict(self._terms)
        for vec, c in o._terms.items():
            acc[vec] = acc.get(vec, 0) + c
        return LaurentPoly(self.basis, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.basis,
                           {vec: -c for vec, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check_basis(o)
        acc: dict = {}
        for v1, c1 in self._terms.items():
            for v2, c2 in o._terms.items():
                key = tuple(a + b for a, b in zip(v1, v2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly(self.basis, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            # Only unit monomials are invertible over Z.
            if len(self._terms) == 1:
                ((vec, c),) = self._terms.items()
                if c in (1, -1):
                    inv = LaurentPoly(self.basis,
                                      {tuple(-e for e in vec): c})
                    return inv ** (-n)
            raise InexactDivision("negative power of a non-unit")
        result = LaurentPoly.one(self.basis)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- structural operations ----

    def substitute_power(self, name: str, k: int) -> "LaurentPoly":
        """Replace the variable with its k-th power (k any nonzero int)."""
        if not isinstance(k, int) or k == 0:
            raise InvalidParameters(f"substitution power must be a nonzero int, got {k!r}")
        i = self.basis.position(name)
        acc: dict = {}
        for vec, c in self._terms.items():
            nv = list(vec)
            nv[i] = nv[i] * k
            key = tuple(nv)
            acc[key] = acc.get(key, 0) + c
        return LaurentPoly(self.basis, acc)

    def invert_variables(self, names: Optional[Sequence[str]] = None) -> "LaurentPoly":
        """Send each listed variable (default: all) to its inverse."""
        if names is None:
            idx = range(len(self.basis))
        else:
            idx = [self.basis.position(n) for n in names]
        flip = set(idx)
        acc = {
            tuple(-e if j in flip else e for j, e in enumerate(vec)): c
            for vec, c in self._terms.items()
        }
        return LaurentPoly(self.basis, acc)

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        """Rename variables; the basis keeps its order."""
        for old in mapping:
            self.basis.position(old)
        new_names = [mapping.get(n, n) for n in self.basis]
        return LaurentPoly(VarBasis(new_names), dict(self._terms))

    def extended(self, basis: Iterable[str]) -> "LaurentPoly":
        """Reinterpret over a larger basis containing every current variable."""
        b = basis if isinstance(basis, VarBasis) else VarBasis(basis)
        positions = [b.position(n) for n in self.basis]
        acc = {}
        for vec, c in self._terms.items():
            nv = [0] * len(b)
            for p, e in zip(positions, vec):
                nv[p] = e
            acc[tuple(nv)] = c
        return LaurentPoly(b, acc)

    def dropped(self, names: Sequence[str]) -> "LaurentPoly":
        """Remove variables that appear in no term of the support."""
        drop = {self.basis.position(n) for n in names}
        for vec in self._terms:
            for i in drop:
                if vec[i] != 0:
                    raise BasisMismatch(
                        f"variable {self.basis[i]!r} still occurs; cannot drop")
        keep = [i for i in range(len(self.basis)) if i not in drop]
        b = VarBasis(self.basis[i] for i in keep)
        acc = {tuple(vec[i] for i in keep): c for vec, c in self._terms.items()}
        return LaurentPoly(b, acc)

    # ---- printing ----

    def _format_varpow(self, name: str, stored: int) -> str:
        if stored == 2:
            return name
        if stored % 2 == 0:
            return f"{name}^{stored // 2}"
        if stored > 0:
            return f"{name}^({stored}/2)"
        return f"{name}^(-{-stored}/2)"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for vec in sorted(self._terms, reverse=True):
            c = self._terms[vec]
            powers = [self._format_varpow(n, e)
                      for n, e in zip(self.basis, vec) if e != 0]
            mag = abs(c)
            if powers:
                body = (" ".join(powers) if mag == 1
                        else f"{mag}{powers[0]}" + "".join(" " + p for p in powers[1:]))
            else:
                body = str(mag)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, basis={tuple(self.basis)!r})"


# ---- parsing ----

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([()^+\-/*]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            raise ParseError(f"unexpected character {text[pos]!r}", pos=pos)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
        # skip trailing whitespace so the loop terminates cleanly
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _PolyParser:
    def __init__(self, tokens, end_pos=0):
        self.toks = tokens
        self.i = 0
        self.end_pos = end_pos

    def peek(self):
        if self.i < len(self.toks):
            return self.toks[self.i]
        return (None, None, self.end_pos)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos=pos)

    def parse_exponent(self) -> int:
        """Exponent after '^', returned in stored (doubled) form."""
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.take()
            stored = self._signed_fraction()
            self.expect_op(")")
            return stored
        return self._signed_int() * 2

    def _signed_int(self) -> int:
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
            kind, val, pos = self.peek()
        if kind != "int":
            raise ParseError("expected integer exponent", pos=pos)
        self.take()
        return sign * val

    def _signed_fraction(self) -> int:
        num = self._signed_int()
        kind, val, pos = self.peek()
        if kind == "op" and val == "/":
            self.take()
            kind, val, pos = self.peek()
            if kind != "int":
                raise ParseError("expected denominator", pos=pos)
            self.take()
            if val == 1:
                return num * 2
            if val == 2:
                return num
            raise ParseError(
                "only half-integer exponents are supported", pos=pos)
        return num * 2

    def parse_term(self, vars_seen: dict) -> tuple:
        """One term: returns ({name: stored exponent}, coefficient)."""
        coeff = None
        exps: dict = {}
        saw_factor = False
        while True:
            kind, val, pos = self.peek()
            if kind == "int":
                self.take()
                coeff = val if coeff is None else coeff * val
                saw_factor = True
                nk, nv, _ = self.peek()
                if nk == "op" and nv == "*":
                    self.take()
                continue
            if kind == "name":
                self.take()
                vars_seen[val] = True
                nk, nv, _ = self.peek()
                if nk == "op" and nv == "^":
                    self.take()
                    stored = self.parse_exponent()
                else:
                    stored = 2
                exps[val] = exps.get(val, 0) + stored
                saw_factor = True
                nk, nv, _ = self.peek()
                if nk == "op" and nv == "*":
                    self.take()
                continue
            break
        if not saw_factor:
            raise ParseError("expected a term", pos=self.peek()[2])
        return exps, 1 if coeff is None else coeff


def parse_poly(text: str, basis: Optional[Iterable[str]] = None) -> LaurentPoly:
    """Parse canonical polynomial text back into a LaurentPoly.

    If basis is omitted it is inferred as the sorted tuple of variables
    appearing in the text (a constant gets the empty basis). Round-tripping
    print output is exact: parse_poly(str(p), p.basis) == p.
    """
    tokens = _tokenize(text)
    parser = _PolyParser(tokens, end_pos=len(text))
    vars_seen: dict = {}
    raw_terms = []  # (exps, coeff) with stored exponents

    sign = 1
    kind, val, pos = parser.peek()
    if kind == "op" and val in "+-":
        parser.take()
        sign = -1 if val == "-" else 1
    while True:
        exps, coeff = parser.parse_term(vars_seen)
        raw_terms.append((exps, sign * coeff))
        kind, val, pos = parser.peek()
        if kind is None:
            break
        if kind == "op" and val in "+-":
            parser.take()
            sign = -1 if val == "-" else 1
            continue
        raise ParseError(f"unexpected token {val!r}", pos=pos)

    if basis is None:
        b = VarBasis(sorted(vars_seen))
    else:
        b = basis if isinstance(basis, VarBasis) else VarBasis(basis)
    acc: dict = {}
    for exps, coeff in raw_terms:
        vec = [0] * len(b)
        for name, stored in exps.items():
            vec[b.position(name)] = stored
        key = tuple(vec)
        acc[key] = acc.get(key, 0) + coeff
    return LaurentPoly(b, acc)


# ---- exact division ----

def _shift_to_origin(p: LaurentPoly) -> tuple:
    """Translate exponents so each variable's minimum is 0.

    Returns (shifted terms dict, shift vector). Works on stored exponents.
    """
    n = len(p.basis)
    mins = [min(vec[i] for vec in p._terms) for i in range(n)]
    shifted = {tuple(e - m for e, m in zip(vec, mins)): c
               for vec, c in p._terms.items()}
    return shifted, tuple(mins)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num / den over Z, or raise InexactDivision.

    Both arguments are translated so all exponents are nonnegative, then
    reduced by descending-lex division against the single divisor. Each step
    must divide exactly (exponentwise and over the integer coefficients) and
    the remainder must reach zero; otherwise no Laurent quotient with integer
    coefficients exists and InexactDivision is raised. The translation is
    undone on the quotient, so fractional (half-lattice) exponents pass
    through exactly.
    """
    if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
        raise InvalidParameters("exact_div expects LaurentPoly arguments")
    if num.basis != den.basis:
        raise BasisMismatch(
            f"bases differ: {tuple(num.basis)!r} vs {tuple(den.basis)!r}")
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.basis)

    num_terms, num_shift = _shift_to_origin(num)
    den_terms, den_shift = _shift_to_origin(den)
    lt_den = max(den_terms)
    lc_den = den_terms[lt_den]

    remainder = dict(num_terms)
    quotient: dict = {}
    while remainder:
        lt_r = max(remainder)
        lc_r = remainder[lt_r]
        q_vec = tuple(a - b for a, b in zip(lt_r, lt_den))
        if any(e < 0 for e in q_vec) or lc_r % lc_den != 0:
            raise InexactDivision(
                f"({num}) is not divisible by ({den})")
        q_c = lc_r // lc_den
        quotient[q_vec] = q_c
        for vec, c in den_terms.items():
            key = tuple(a + b for a, b in zip(q_vec, vec))
            nc = remainder.get(key, 0) - q_c * c
            if nc:
                remainder[key] = nc
            else:
                remainder.pop(key, None)

    # undo the shifts: true quotient exponents differ by num_shift - den_shift
    unshift = tuple(a - b for a, b in zip(num_shift, den_shift))
    final = {tuple(e + s for e, s in zip(vec, unshift)): c
             for vec, c in quotient.items()}
    return LaurentPoly(num.basis, final)


def try_exact_div(num: LaurentPoly, den: LaurentPoly):
    """exact_div, returning None instead of raising InexactDivision."""
    try:
        return exact_div(num, den)
    except InexactDivision:
        return None


def is_symmetric(p: LaurentPoly, sign: int = 1,
                 variables: Optional[Sequence[str]] = None) -> bool:
    """Whether inverting the variables reproduces sign * p.

    With the default arguments this is the palindrome condition
    p(t -> 1/t, ...) == p; sign=-1 tests odd symmetry. A subset of
    variables may be passed to invert only those.
    """
    if sign not in (1, -1):
        raise InvalidParameters("sign must be +1 or -1")
    flipped = p.invert_variables(variables)
    return flipped == (p if sign == 1 else -p)
