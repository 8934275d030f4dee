"""Monomials, the DRL ordering, and sparse polynomials over F_p.

Monomials are plain tuples of exponents.  In the homogenized ring R' = R[y]
the extra variable y is stored last, so that the homogenized DRL ordering is
literally DRL on (x1, ..., xn, y).

Polynomial text grammar (used by ``parse_polynomial`` and the CLI)::

    poly   := ["-"] term (("+" | "-") term)*
    term   := factor ("*"? factor)*
    factor := INT | var ["^" INT]          (``**`` accepted for ``^``)
    var    := "x" INT | "y"

e.g. ``x1^2 + 3*x2*x1 - 2*x3*x1 - x1 + x2^2 - 2*x3*x2 - 2*x2 + x3^2 + x3``.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement

from .errors import ArityMismatch, ParseError, ZeroInput
from .gf import FieldSpec

DRL = "drl"
HOMOGENIZED_DRL = "homogenized-drl"


def mono_degree(m):
    return sum(m)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def drl_key(m):
    """Sort key: larger key means larger monomial under DRL."""
    return (sum(m), tuple(-e for e in reversed(m)))


def _heap_key(m):
    # min-heap order = descending DRL
    return (-sum(m), tuple(reversed(m)))


@dataclass(frozen=True)
class OrderingSpec:
    kind: str
    nvars: int

    def key(self, m):
        return drl_key(m)


def compare(a, b, ordering: OrderingSpec | None = None) -> int:
    """Three-way DRL comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    if len(a) != len(b) or (ordering is not None and len(a) != ordering.nvars):
        raise ArityMismatch(f"monomials of length {len(a)} and {len(b)}")
    ka, kb = drl_key(a), drl_key(b)
    return (ka > kb) - (ka < kb)


class PolyRing:
    """F_p[x1..xn] or, with ``hom_var``, F_p[x1..xn, y]."""

    def __init__(self, p: int, n: int, hom_var: bool = False):
        if n < 0:
            raise ValueError("nvars must be nonnegative")
        self.field = FieldSpec(p)
        self.p = p
        self.n = n
        self.hom_var = hom_var
        self.nvars = n + (1 if hom_var else 0)
        self.ordering = OrderingSpec(HOMOGENIZED_DRL if hom_var else DRL, self.nvars)
        self._monos = {}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.p == other.p and self.n == other.n
                and self.hom_var == other.hom_var)

    def __hash__(self):
        return hash((self.p, self.n, self.hom_var))

    def __repr__(self):
        return f"PolyRing(p={self.p}, n={self.n}, hom_var={self.hom_var})"

    @cached_property
    def var_names(self):
        names = [f"x{i + 1}" for i in range(self.n)]
        if self.hom_var:
            names.append("y")
        return tuple(names)

    def homogenized(self) -> "PolyRing":
        if self.hom_var:
            return self
        return _ring(self.p, self.n, True)

    def base(self) -> "PolyRing":
        return _ring(self.p, self.n, False)

    @property
    def one_mono(self):
        return (0,) * self.nvars

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self.one_mono: 1})

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Polynomial(self, {tuple(e): 1}))
        return out

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} exponents, got {len(exps)}")
        return Polynomial(self, {exps: coeff})

    def monomials(self, d):
        """All degree-d monomials, descending under the ring ordering."""
        if d < 0:
            return []
        if d not in self._monos:
            self._monos[d] = monomials_of_degree(self.nvars, d)
        return self._monos[d]

    def poly(self, terms):
        return Polynomial(self, dict(terms))

    def parse(self, text, line=None):
        return parse_polynomial(text, self, line=line)


_RINGS = {}


def _ring(p, n, hom_var):
    key = (p, n, hom_var)
    if key not in _RINGS:
        _RINGS[key] = PolyRing(p, n, hom_var)
    return _RINGS[key]


def monomials_of_degree(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=drl_key, reverse=True)
    return out


class Polynomial:
    """Immutable sparse polynomial; ``terms`` is sorted strictly descending."""

    __slots__ = ("ring", "terms", "_dict")

    def __init__(self, ring: PolyRing, terms):
        p = ring.p
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        d = {}
        for m, c in items:
            c = int(c) % p
            if c:
                d[m] = c
        self.ring = ring
        self._dict = d
        self.terms = tuple(sorted(d.items(), key=lambda t: drl_key(t[0]), reverse=True))

    @classmethod
    def _from_clean(cls, ring, d):
        # d already reduced mod p without zeros
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._dict = d
        obj.terms = tuple(sorted(d.items(), key=lambda t: drl_key(t[0]), reverse=True))
        return obj

    def as_dict(self):
        return dict(self._dict)

    def coeff(self, m):
        return self._dict.get(m, 0)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def LM(self):
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def LC(self):
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def LT(self):
        return self.terms[0] if self.terms else None

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        return len({sum(m) for m, _ in self.terms}) <= 1

    def monic(self):
        if not self.terms:
            return self
        c = self.LC
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        p = self.ring.p
        return Polynomial._from_clean(self.ring, {m: a * inv % p for m, a in self.terms})

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return False
        if other.ring != self.ring:
            raise ArityMismatch(f"{self.ring} vs {other.ring}")
        return True

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial(self.ring, {self.ring.one_mono: other})
        if not self._check(other):
            return NotImplemented
        p = self.ring.p
        d = dict(self._dict)
        for m, c in other.terms:
            v = (d.get(m, 0) + c) % p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial._from_clean(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._from_clean(self.ring, {m: p - c for m, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial(self.ring, {self.ring.one_mono: other})
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial._from_clean(self.ring, {m: a * c % p for m, a in self.terms})

    def mul_term(self, mono, c=1):
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial._from_clean(
            self.ring, {mono_mul(m, mono): a * c % p for m, a in self.terms})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        p = self.ring.p
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                d[m] = (d.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == Polynomial(self.ring, {self.ring.one_mono: other})
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)

    def homogeneous_component(self, d):
        return Polynomial._from_clean(
            self.ring, {m: c for m, c in self.terms if sum(m) == d})


def format_monomial(m, names):
    parts = []
    for e, v in zip(m, names):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, signed=False) -> str:
    """Render in the text grammar.  Coefficients are residues in [0, p),
    or in (-p/2, p/2] with ``signed``."""
    if not f.terms:
        return "0"
    names = f.ring.var_names
    p = f.ring.p
    out = []
    for m, c in f.terms:
        if signed and c > p // 2:
            c -= p
        neg = c < 0
        c = abs(c)
        mono = format_monomial(m, names)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)(\d+)|(y)|(\*\*|\^)|([*+\-]))")


def parse_polynomial(text: str, ring: PolyRing, line=None) -> Polynomial:
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", line, bad + 1)
        col = mt.end() - len(mt.group(0).lstrip()) + 1
        if mt.group(1) is not None:
            tokens.append(("int", int(mt.group(1)), col))
        elif mt.group(2):
            idx = int(mt.group(3))
            if not 1 <= idx <= ring.n:
                raise ParseError(f"variable x{idx} outside x1..x{ring.n}", line, col)
            tokens.append(("var", idx - 1, col))
        elif mt.group(4):
            if not ring.hom_var:
                raise ParseError("variable y only allowed in homogenized rings", line, col)
            tokens.append(("var", ring.n, col))
        elif mt.group(5):
            tokens.append(("pow", None, col))
        else:
            tokens.append((mt.group(6), None, col))
        pos = mt.end()
    if not tokens:
        raise ParseError("empty polynomial", line, 1)

    terms = {}
    i = 0
    sign = 1
    expect_term = True
    cur_coeff, cur_exp, have_factor = 1, [0] * ring.nvars, False

    def flush(col):
        nonlocal cur_coeff, cur_exp, have_factor
        if not have_factor:
            raise ParseError("missing term", line, col)
        m = tuple(cur_exp)
        terms[m] = (terms.get(m, 0) + sign * cur_coeff) % ring.p
        cur_coeff, cur_exp, have_factor = 1, [0] * ring.nvars, False

    if tokens[0][0] == "-":
        sign = -1
        i = 1
    elif tokens[0][0] == "+":
        i = 1
    while i < len(tokens):
        kind, val, col = tokens[i]
        if kind in ("+", "-"):
            if expect_term:
                raise ParseError(f"unexpected {kind!r}", line, col)
            flush(col)
            sign = 1 if kind == "+" else -1
            expect_term = True
            i += 1
            continue
        if kind == "*":
            if not have_factor:
                raise ParseError("unexpected '*'", line, col)
            i += 1
            if i >= len(tokens) or tokens[i][0] not in ("int", "var"):
                raise ParseError("expected factor after '*'", line, col)
            continue
        if kind == "pow":
            raise ParseError("unexpected '^'", line, col)
        if kind == "int":
            cur_coeff *= val
        else:
            e = 1
            if i + 1 < len(tokens) and tokens[i + 1][0] == "pow":
                if i + 2 >= len(tokens) or tokens[i + 2][0] != "int":
                    where = tokens[i + 2][2] if i + 2 < len(tokens) else len(text) + 1
                    raise ParseError("expected integer exponent", line, where)
                e = tokens[i + 2][1]
                i += 2
            cur_exp[val] += e
        have_factor = True
        expect_term = False
        i += 1
    flush(len(text) + 1)
    return Polynomial(ring, terms)


# ---------------------------------------------------------------------------
# transforms between R and R' = R[y]


def homogenize(f: Polynomial) -> Polynomial:
    """f^h = sum c_t t y^(deg f - deg t) in R[y]."""
    if f.is_zero():
        raise ZeroInput("cannot homogenize the zero polynomial")
    if f.ring.hom_var:
        raise ArityMismatch("polynomial already lives in R[y]")
    d = f.degree
    hring = f.ring.homogenized()
    return Polynomial._from_clean(hring, {m + (d - sum(m),): c for m, c in f.terms})


def dehomogenize(h: Polynomial) -> Polynomial:
    """h|_{y=1}, as an element of R."""
    if not h.ring.hom_var:
        raise ArityMismatch("dehomogenize expects a polynomial in R[y]")
    p = h.ring.p
    d = {}
    for m, c in h.terms:
        x = m[:-1]
        d[x] = (d.get(x, 0) + c) % p
    return Polynomial(h.ring.base(), d)


def top_part(f: Polynomial) -> Polynomial:
    """Highest-degree graded component for f in R; h|_{y=0} (returned in R)
    for homogeneous h in R[y]."""
    if f.is_zero():
        raise ZeroInput("top part of the zero polynomial")
    if f.ring.hom_var:
        return Polynomial._from_clean(
            f.ring.base(), {m[:-1]: c for m, c in f.terms if m[-1] == 0})
    return f.homogeneous_component(f.degree)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ZeroInput("S-polynomial of a zero polynomial")
    L = mono_lcm(f.LM, g.LM)
    p = f.ring.p
    a = f.mul_term(mono_div(L, f.LM), pow(f.LC, -1, p))
    b = g.mul_term(mono_div(L, g.LM), pow(g.LC, -1, p))
    return a - b


def _nf_dict(work, reducers, p, full=True):
    """Reduce the dict ``work`` (consumed) by monic ``reducers``.

    Always eliminates the largest reducible term using the first reducer (in
    list order) whose LM divides it.  Returns the remainder as a dict.
    """
    heap = [(_heap_key(m), m) for m in work]
    heapq.heapify(heap)
    out = {}
    lms = [g.LM for g in reducers]
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for g, lm in zip(reducers, lms):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.terms[1:]:
                    mm = mono_mul(gm, q)
                    old = work.get(mm)
                    if old is None:
                        work[mm] = (-c * gc) % p
                        heapq.heappush(heap, (_heap_key(mm), mm))
                    else:
                        v = (old - c * gc) % p
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
                break
        else:
            out[m] = c
            if not full:
                out.update(work)
                return out
    return out


def reduce(f: Polynomial, G) -> Polynomial:
    """Full normal form of f modulo the sequence G (tail reduction included)."""
    reducers = [g.monic() for g in G if not g.is_zero()]
    return Polynomial._from_clean(f.ring, _nf_dict(dict(f._dict), reducers, f.ring.p))


normal_form = reduce


def top_reduce(f: Polynomial, G) -> Polynomial:
    """Reduce only until the leading term is irreducible."""
    reducers = [g.monic() for g in G if not g.is_zero()]
    return Polynomial._from_clean(
        f.ring, _nf_dict(dict(f._dict), reducers, f.ring.p, full=False))


@dataclass(frozen=True)
class PolySequence:
    """(f_1, ..., f_m) sharing one ring, all nonzero."""

    polys: tuple

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise ZeroInput("empty polynomial sequence")
        ring = polys[0].ring
        for f in polys:
            if f.is_zero():
                raise ZeroInput("sequence contains the zero polynomial")
            if f.ring != ring:
                raise ArityMismatch("sequence mixes rings")

    @property
    def ring(self):
        return self.polys[0].ring

    @property
    def degrees(self):
        return tuple(f.degree for f in self.polys)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def is_homogeneous(self):
        return all(f.is_homogeneous() for f in self.polys)

    def homogenize(self):
        return PolySequence(tuple(homogenize(f) for f in self.polys))

    def top(self):
        return PolySequence(tuple(top_part(f) for f in self.polys))


def as_sequence(F) -> PolySequence:
    return F if isinstance(F, PolySequence) else PolySequence(tuple(F))
