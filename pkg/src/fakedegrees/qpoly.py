"""Exact integer polynomial arithmetic in the single variable q.

Everything here works over Z[q] with dense ascending coefficient lists and
Python's arbitrary-precision integers.  The zero polynomial is the empty
coefficient list, so equality is plain list equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class QPolynomial:
    """Univariate polynomial in q with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``q**k``.  Instances are immutable
    and hashable; all operations return new polynomials in canonical form
    (no trailing zero coefficients, zero polynomial == empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Smallest exponent with nonzero coefficient, or -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == QPolynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for k, c in enumerate(other.coeffs):
            out[k] -= c
        return QPolynomial(out)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Long division, raising if the quotient is not exact.

        Every quotient arising in the generating-function formulas is
        exact, so a nonzero remainder always signals an arithmetic bug.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return QPolynomial()
        rem = list(self.coeffs)
        div = other.coeffs
        dn = len(div) - 1
        lead = div[-1]
        qn = len(rem) - 1 - dn
        if qn < 0:
            raise InexactDivisionError(self, other)
        quot = [0] * (qn + 1)
        for k in range(qn, -1, -1):
            c = rem[k + dn]
            if c % lead != 0:
                raise InexactDivisionError(self, other)
            f = c // lead
            quot[k] = f
            if f:
                for j, d in enumerate(div):
                    rem[k + j] -= f * d
        if any(rem):
            raise InexactDivisionError(self, other)
        return QPolynomial(quot)

    def substitute_power(self, d: int) -> "QPolynomial":
        """Return p(q^d): the coefficient of q^k moves to q^(d*k)."""
        if d < 1:
            raise ValueError("power substitution requires d >= 1")
        if d == 1 or self.is_zero():
            return self
        out = [0] * ((len(self.coeffs) - 1) * d + 1)
        for k, c in enumerate(self.coeffs):
            out[d * k] = c
        return QPolynomial(out)

    def shift(self, s: int) -> "QPolynomial":
        """Multiply by q^s; s may be negative down to the lowest degree."""
        if self.is_zero():
            return self
        if s >= 0:
            return QPolynomial((0,) * s + self.coeffs)
        if -s > self.low_degree:
            raise ValueError(f"shift by {s} drops below degree 0")
        return QPolynomial(self.coeffs[-s:])

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        """Whether the nonzero coefficient block reads the same reversed."""
        if self.is_zero():
            return True
        block = self.coeffs[self.low_degree:]
        return block == block[::-1]

    def exponent_multiset(self) -> list[int]:
        """Each exponent repeated by its coefficient; needs coeffs >= 0."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c < 0:
                raise ValueError("exponent multiset needs nonnegative coefficients")
            out.extend([k] * c)
        return out

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        return cls(data["coeffs"])

    def pretty(self) -> str:
        """Render like ``q^3 + q^5 + q^7`` with ascending exponents."""
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()


class InexactDivisionError(ArithmeticError):
    """A polynomial quotient that should be exact left a remainder."""

    def __init__(self, num: QPolynomial, den: QPolynomial):
        super().__init__(f"inexact division: ({num.pretty()}) / ({den.pretty()})")
        self.num = num
        self.den = den


ONE = QPolynomial([1])
ZERO = QPolynomial()


def q_int(n: int) -> QPolynomial:
    """The q-analogue 1 + q + ... + q^(n-1); by convention [0]_q = 1."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    if n == 0:
        return ONE
    return QPolynomial([1] * n)


def q_factorial(n: int) -> QPolynomial:
    """Product [n]_q [n-1]_q ... [1]_q, with the empty product equal to 1."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


def q_multinomial(n: int, parts: Sequence[int]) -> QPolynomial:
    """q-multinomial coefficient [n]_q! / prod [part]_q!."""
    if any(p < 0 for p in parts):
        raise ValueError("q_multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    num = q_factorial(n)
    for p in parts:
        num = num.exact_div(q_factorial(p))
    return num


def q_binomial(n: int, k: int) -> QPolynomial:
    return q_multinomial(n, (k, n - k))


def hook_syt_gf(shape) -> QPolynomial:
    """Major-index generating function over SYT of a shape, hook form.

    Computes q^b(shape) [r]_q! / prod over cells [hook]_q, which equals the
    enumeration-side sum of q^maj over standard Young tableaux.
    """
    from . import shapes as _shapes

    r = sum(shape)
    num = q_factorial(r).shift(_shapes.b_statistic(shape))
    for h in _shapes.hooks(shape):
        num = num.exact_div(q_int(h))
    return num
