"""Exact univariate polynomials over arbitrary-precision integers.

Carries the q-analog counting quantities: q-integers [m]_q, q-factorials
[n!]_q, and q-multinomials [n!]_q / prod [lam_i!]_q.  The same type also
holds dimension-growth polynomials in a second contextual variable X;
the variable name is purely presentational.

The q-multinomial is computed by exact polynomial long division (the
divisors are monic), with a hard error on a nonzero remainder, so the
divisibility that makes the count a polynomial is exercised on every
call instead of being assumed.
"""

from __future__ import annotations

from .partitions import Partition


class QPoly:
    """Immutable polynomial with int coefficients, constant term first.

    The zero polynomial stores an empty coefficient tuple; nonzero
    polynomials store no trailing zeros, so equality of values is
    equality of tuples.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def eval_at(self, v: int) -> int:
        """Horner evaluation with exact integer arithmetic."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def substitute(self, scale: int) -> "QPoly":
        """The polynomial p(scale * X): coefficient k is multiplied by scale**k."""
        return QPoly(c * scale**k for k, c in enumerate(self.coeffs))

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        """Exact quotient self / divisor; nonzero remainder is an error.

        The divisor must be monic so the division stays in integer
        coefficients.  A nonzero remainder means an arithmetic bug in
        the caller, not bad data, hence ArithmeticError.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.coeffs[-1] != 1:
            raise ValueError(f"exact_div requires a monic divisor, got leading {divisor.coeffs[-1]}")
        rem = list(self.coeffs)
        dd = divisor.degree
        qd = len(rem) - 1 - dd
        if qd < 0:
            if any(rem):
                raise ArithmeticError(f"inexact polynomial division: {self!r} by {divisor!r}")
            return QPoly.zero()
        quot = [0] * (qd + 1)
        for k in range(qd, -1, -1):
            c = rem[k + dd]
            if c == 0:
                continue
            quot[k] = c
            for i, b in enumerate(divisor.coeffs):
                rem[k + i] -= c * b
        if any(rem):
            raise ArithmeticError(f"inexact polynomial division: {self!r} by {divisor!r}")
        return QPoly(quot)

    def pretty(self, var: str = "q") -> str:
        """Compact descending form, e.g. 'q^2+2q+1' or 't^2-2t+1'."""
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if pieces else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
            pieces.append(sign + body)
        return "".join(pieces)

    def pretty_ascending(self, var: str = "X") -> str:
        """Spaced ascending form, e.g. '-1 + 4X' or '2X'."""
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "QPoly":
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError(f"a polynomial serializes as a JSON array of integers, got {data!r}")
        return cls(data)


def q_int(m: int) -> QPoly:
    """[m]_q = 1 + q + ... + q^(m-1), for m >= 1."""
    if m < 1:
        raise ValueError(f"q_int requires m >= 1, got {m}")
    return QPoly((1,) * m)


def q_factorial(n: int) -> QPoly:
    """[n!]_q = product of [m]_q for m = 1..n."""
    if n < 1:
        raise ValueError(f"q_factorial requires n >= 1, got {n}")
    acc = QPoly.one()
    for m in range(1, n + 1):
        acc = acc * q_int(m)
    return acc


def q_multinomial(lam: Partition) -> QPoly:
    """[n!]_q / prod_i [lam_i!]_q, by exact polynomial division.

    Evaluated at a prime power q this is the number of cosets of the
    block upper-triangular subgroup of shape lam in GL_n(F_q).
    """
    num = q_factorial(lam.n)
    for part in lam:
        num = num.exact_div(q_factorial(part))
    return num
