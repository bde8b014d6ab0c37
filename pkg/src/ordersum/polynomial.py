"""Dense integer polynomials and the symbolic order-sum in Z[x].

For a fixed partition shape, the order-sum of the p-group of that shape is
a polynomial in p with integer coefficients.  This module constructs that
polynomial exactly (psi_symbolic) and re-derives the closed forms for the
small families as polynomial identities (verify_closed_form), so every
formula is checked in Z[x] once and for all rather than prime by prime.

All arithmetic is over Z.  Division is long division that insists on
exactness at every step and raises ExactDivisionError otherwise.
"""

from dataclasses import dataclass

from .arith import ExactDivisionError
from .partitions import Partition

__all__ = [
    "ClosedFormCheck",
    "ClosedFormReport",
    "IntPoly",
    "psi_symbolic",
    "verify_closed_form",
]


class IntPoly:
    """Immutable dense polynomial over Z; coefficients ascending by power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        if power < 0:
            raise ValueError(f"power must be >= 0, got {power}")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient self / divisor in Z[x]; error unless it divides exactly."""
        if not divisor:
            raise ExactDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dn = len(divisor.coeffs)
        if len(rem) < dn:
            if any(rem):
                raise ExactDivisionError(
                    f"{self} is not divisible by {divisor}")
            return IntPoly()
        quot = [0] * (len(rem) - dn + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + dn - 1]
            if c % lead != 0:
                raise ExactDivisionError(
                    f"{self} is not divisible by {divisor}")
            q = c // lead
            quot[i] = q
            if q:
                for j, d in enumerate(divisor.coeffs):
                    rem[i + j] -= q * d
        if any(rem):
            raise ExactDivisionError(f"{self} is not divisible by {divisor}")
        return IntPoly(quot)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces: list[str] = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if pieces else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            pieces.append(sign + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"


_ONE = IntPoly((1,))
_X = IntPoly((0, 1))


def psi_symbolic(shape: Partition) -> IntPoly:
    """Order-sum of the p-group of the given shape, as a polynomial in p.

    Uses the division-free subtraction form: x^{2 a_k + a_{k-1} + ... + a_1}
    minus (x - 1) times the tail sum of x^{2 alpha} * f(alpha), where
    f(alpha) is the reduced solution count of f_eval, itself a monomial in
    x.  The result is monic of that degree, has constant coefficient 1,
    and all coefficients in {-1, 0, 1}.
    """
    parts = shape.parts
    a_k = parts[-1]
    degree = 2 * a_k + sum(parts[:-1])
    tail = IntPoly()
    for alpha in range(a_k):
        exp = 2 * alpha + sum(min(alpha, a) for a in parts) - min(alpha, a_k)
        tail = tail + IntPoly.monomial(exp)
    return IntPoly.monomial(degree) - (_X - _ONE) * tail


def _geometric(n: int) -> IntPoly:
    """1 + x + ... + x^{n-1}."""
    return IntPoly((1,) * n)


def _closed_cyclic(n: int) -> IntPoly:
    return (IntPoly.monomial(2 * n + 1) + _ONE).exact_div(_geometric(2))


def _closed_elem_abelian(n: int) -> IntPoly:
    return IntPoly.monomial(n + 1) - _X + _ONE


def _closed_near_elem(n: int) -> IntPoly:
    return (IntPoly.monomial(n + 2) - IntPoly.monomial(n + 1)
            + IntPoly.monomial(n) - _X + _ONE)


def _closed_rank2(a1: int, a2: int) -> IntPoly:
    num = (IntPoly.monomial(2 * a2 + a1 + 3) + IntPoly.monomial(2 * a2 + a1 + 2)
           + IntPoly.monomial(2 * a2 + a1 + 1) + IntPoly.monomial(3 * a1 + 2)
           + _X + _ONE)
    return num.exact_div(_geometric(2) * _geometric(3))


def _closed_rank3(a1: int, a2: int, a3: int) -> IntPoly:
    t1 = (IntPoly.monomial(2 * a3 + a2 + a1 + 1)
          + IntPoly.monomial(3 * a2 + a1 + 2)).exact_div(_geometric(2))
    t2 = (IntPoly.monomial(3 * a2 + a1 + 3)
          - IntPoly.monomial(4 * a1 + 3)).exact_div(_geometric(3))
    t3 = (IntPoly.monomial(4 * a1 + 4) - _ONE).exact_div(_geometric(4))
    return t1 - t2 - t3


@dataclass(frozen=True, slots=True)
class ClosedFormCheck:
    """One closed form compared against the direct polynomial."""

    family: str
    closed: IntPoly
    residual: IntPoly

    @property
    def matches(self) -> bool:
        return not self.residual


@dataclass(frozen=True, slots=True)
class ClosedFormReport:
    """Every applicable closed form for one shape, with residuals."""

    shape: Partition
    direct: IntPoly
    checks: tuple[ClosedFormCheck, ...]

    @property
    def all_match(self) -> bool:
        return all(c.matches for c in self.checks)


def verify_closed_form(shape: Partition) -> ClosedFormReport:
    """Check every closed form that covers `shape` against psi_symbolic.

    Covered shapes: a single part (n), all parts 1, all parts 1 except a
    final 2, and any shape with at most three parts.  The residual of each
    check is closed form minus direct polynomial, so a match is residual 0.
    """
    parts = shape.parts
    direct = psi_symbolic(shape)
    builders: list[tuple[str, IntPoly]] = []
    if len(parts) == 1:
        builders.append(("corollary2a", _closed_cyclic(parts[0])))
    if all(a == 1 for a in parts):
        builders.append(("corollary2b", _closed_elem_abelian(len(parts))))
    if len(parts) >= 2 and parts[-1] == 2 and all(a == 1 for a in parts[:-1]):
        builders.append(("corollary2c", _closed_near_elem(shape.n)))
    if len(parts) == 2:
        builders.append(("corollary2d", _closed_rank2(*parts)))
    if len(parts) == 3:
        builders.append(("corollary2e", _closed_rank3(*parts)))
    if not builders:
        raise ValueError(
            f"no closed form covers shape {shape}: need at most 3 parts, "
            "all parts 1, or all parts 1 with a final 2")
    checks = tuple(ClosedFormCheck(family, closed, closed - direct)
                   for family, closed in builders)
    return ClosedFormReport(shape, direct, checks)
