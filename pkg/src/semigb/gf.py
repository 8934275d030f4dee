"""Prime field arithmetic.

Polynomials and matrices store bare ``int`` residues and carry the modulus on
their ring/matrix; ``FieldElem`` is the checked element type for callers that
want operator syntax.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, ModulusMismatch, NotPrime

# deterministic Miller-Rabin witnesses, valid for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p, 2 <= p < 2**31."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < 2**31:
            raise NotPrime(f"modulus must be prime with 2 <= p < 2^31, got {self.p!r}")
        if not is_prime(self.p):
            raise NotPrime(f"modulus must be prime, got {self.p}")

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(value % self.p, self)

    def inv(self, a: int) -> int:
        """Inverse of the residue ``a`` as a plain int."""
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)


@dataclass(frozen=True)
class FieldElem:
    value: int
    spec: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.spec.p:
            object.__setattr__(self, "value", self.value % self.spec.p)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec.p != self.spec.p:
                raise ModulusMismatch(f"F_{self.spec.p} vs F_{other.spec.p}")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem((self.value + b) % self.spec.p, self.spec)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem((self.value - b) % self.spec.p, self.spec)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem((b - self.value) % self.spec.p, self.spec)

    def __neg__(self):
        return FieldElem(-self.value % self.spec.p, self.spec)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.value * b % self.spec.p, self.spec)

    __rmul__ = __mul__

    def inv(self) -> "FieldElem":
        return FieldElem(self.spec.inv(self.value), self.spec)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.value * self.spec.inv(b) % self.spec.p, self.spec)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec.p == other.spec.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.spec.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.spec.p})"


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def inv(a: FieldElem) -> FieldElem:
    return a.inv()
