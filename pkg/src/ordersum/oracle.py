"""Brute-force ground truth: order sums by direct enumeration.

Everything here works on an explicit presentation of a finite abelian
group as Z_{m_1} x ... x Z_{m_r} (component moduli, addition mod each
modulus) and computes by walking elements.  It is deliberately independent
of the formula modules: no partitions, no p-group types, no closed forms.
The formula side is tested against this module, never the other way round.

Enumerations are guarded by an element-count cap (default 2**20) so a typo
in a group spec cannot silently start a week-long loop.
"""

from itertools import product, starmap
from math import gcd, lcm, prod

__all__ = [
    "DEFAULT_ENUM_CAP",
    "EnumerationCapError",
    "element_order",
    "group_order",
    "psi_bruteforce",
    "psi_relative",
    "relative_order",
    "subgroup_closure",
]

DEFAULT_ENUM_CAP = 1 << 20


class EnumerationCapError(ValueError):
    """An enumeration would touch more elements than the allowed cap."""

    def __init__(self, size: int, cap: int) -> None:
        super().__init__(
            f"enumeration of {size} elements exceeds the cap of {cap}; "
            "raise the cap explicitly to force it")
        self.size = size
        self.cap = cap


def _check_moduli(moduli) -> tuple[int, ...]:
    ms = tuple(moduli)
    if not ms:
        raise ValueError("need at least one component modulus")
    for i, m in enumerate(ms):
        if not isinstance(m, int) or m < 2:
            raise ValueError(f"component {i}: modulus must be >= 2, got {m!r}")
    return ms


def _check_element(moduli: tuple[int, ...], element) -> tuple[int, ...]:
    e = tuple(element)
    if len(e) != len(moduli):
        raise ValueError(
            f"element has {len(e)} components, group has {len(moduli)}")
    for i, (r, m) in enumerate(zip(e, moduli)):
        if not isinstance(r, int) or not 0 <= r < m:
            raise ValueError(
                f"component {i}: residue {r!r} not in [0, {m})")
    return e


def group_order(moduli) -> int:
    """Order of Z_{m_1} x ... x Z_{m_r}: the product of the moduli."""
    return prod(_check_moduli(moduli))


def element_order(moduli, element) -> int:
    """Additive order of an element: lcm of the per-component orders.

    In Z_m the residue r has order m / gcd(m, r), and the order in a
    direct product is the lcm over components.
    """
    ms = _check_moduli(moduli)
    e = _check_element(ms, element)
    return lcm(*(m // gcd(m, r) for m, r in zip(ms, e)))


def psi_bruteforce(moduli, *, max_enum: int = DEFAULT_ENUM_CAP) -> int:
    """Sum of element orders by walking the whole group.

    The inner loop runs over precomputed per-component order tables, so
    the cost is one lcm per element.
    """
    ms = _check_moduli(moduli)
    size = prod(ms)
    if size > max_enum:
        raise EnumerationCapError(size, max_enum)
    tables = [[m // gcd(m, r) for r in range(m)] for m in ms]
    return sum(starmap(lcm, product(*tables)))


def subgroup_closure(moduli, generators, *,
                     max_enum: int = DEFAULT_ENUM_CAP) -> frozenset:
    """Subgroup generated by the given elements, as a frozenset of tuples.

    Breadth-first closure under adding each generator; no generators give
    the trivial subgroup.  Raises EnumerationCapError if the closure would
    exceed max_enum elements.
    """
    ms = _check_moduli(moduli)
    gens = [_check_element(ms, g) for g in generators]
    identity = (0,) * len(ms)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple((x + y) % m for x, y, m in zip(a, g, ms))
                if b not in seen:
                    if len(seen) >= max_enum:
                        raise EnumerationCapError(len(seen) + 1, max_enum)
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def relative_order(moduli, subgroup, element) -> int:
    """Smallest m >= 1 with m * element inside the subgroup.

    The subgroup is any set of element tuples containing the identity;
    membership is plain set lookup.  The scan is a deliberate linear walk
    m = 1, 2, ...: it terminates by m = element_order(element) because at
    that multiple the identity is reached.
    """
    ms = _check_moduli(moduli)
    e = _check_element(ms, element)
    identity = (0,) * len(ms)
    if identity not in subgroup:
        raise ValueError("subgroup does not contain the identity")
    current = e
    m = 1
    while current not in subgroup:
        current = tuple((x + y) % mod for x, y, mod in zip(current, e, ms))
        m += 1
    return m


def psi_relative(moduli, subgroup, *, max_enum: int = DEFAULT_ENUM_CAP) -> int:
    """Sum over the whole group of the order of each element relative to
    the subgroup.

    With the trivial subgroup this equals psi_bruteforce; with the whole
    group it equals the group order.
    """
    ms = _check_moduli(moduli)
    size = prod(ms)
    if size > max_enum:
        raise EnumerationCapError(size, max_enum)
    identity = (0,) * len(ms)
    if identity not in subgroup:
        raise ValueError("subgroup does not contain the identity")
    total = 0
    for e in product(*(range(m) for m in ms)):
        current = e
        m = 1
        while current not in subgroup:
            current = tuple((x + y) % mod for x, y, mod in zip(current, e, ms))
            m += 1
        total += m
    return total
