"""Fake degree polynomials by independent routes, plus global checks.

Three families of groups are covered: wreath products G(d,1,n), the
hyperoctahedral groups (types B/C, the d = 2 case), and type D.  Each fake
degree is computable by several independent routes which must agree
exactly; the verification module sweeps those agreements exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dominoes import enumerate_sdt, maj_domino, sdt_maj_gf
from .qpoly import ONE, QPolynomial, hook_syt_gf, q_int, q_multinomial
from .shapes import (
    Multipartition,
    b_multi,
    lusztig_rho1,
    lusztig_rho2,
    multipartitions_of,
    total_size,
    _starred_rows,
    _unstar,
)
from .tableaux import (
    enumerate_tuple_tableaux,
    largest_label_component,
    maj_tuple,
    tuple_maj_gf,
    tuple_maj_gf_restricted,
)


@dataclass(frozen=True)
class Representation:
    """An irreducible representation label.

    group is one of "wreath", "bc", "d".  For wreath, d is the cyclic
    order and label has exactly d components.  For bc, d is 2 and label is
    an ordered pair.  For type D, label is stored in canonical order
    (lexicographically larger component first) and marker distinguishes
    the two representations attached to an equal-component pair; marker is
    fixed to 1 whenever the components differ.
    """

    group: str
    d: int
    label: Multipartition
    marker: int = 1

    def __post_init__(self):
        if self.group not in ("wreath", "bc", "d"):
            raise ValueError(f"unknown group {self.group!r}")
        if self.group == "wreath" and len(self.label) != self.d:
            raise ValueError("wreath label must have exactly d components")
        if self.group in ("bc", "d") and (self.d != 2 or len(self.label) != 2):
            raise ValueError("types B/C/D take an ordered pair of partitions")
        if self.group == "d":
            lam1, lam2 = self.label
            if lam1 < lam2:
                raise ValueError("type D label must be in canonical order")
            if self.marker not in (1, 2):
                raise ValueError("type D marker must be 1 or 2")
            if lam1 != lam2 and self.marker != 1:
                raise ValueError("marker 2 needs equal components")

    @property
    def n(self) -> int:
        return total_size(self.label)


def wreath_rep(label: Multipartition, d: int) -> Representation:
    return Representation(group="wreath", d=d, label=label)


def bc_rep(pair: Multipartition) -> Representation:
    return Representation(group="bc", d=2, label=pair)


def d_rep(pair: Multipartition, marker: int = 1) -> Representation:
    """Canonicalize an unordered pair for type D."""
    lam1, lam2 = pair
    if lam1 < lam2:
        lam1, lam2 = lam2, lam1
    if lam1 != lam2:
        marker = 1
    return Representation(group="d", d=2, label=(lam1, lam2), marker=marker)


# ---------------------------------------------------------------------------
# Wreath products G(d,1,n)


def fake_degree_wreath(
    mp: Multipartition, d: int, route: str = "formula"
) -> QPolynomial:
    """Fake degree of the irreducible labelled by a d-multipartition.

    Both routes shift by the b-statistic and substitute q^d uniformly into
    the size-n generating function: the closed formula uses the
    q-multinomial times hook-length products, the enumeration route sums
    q^maj over standard tuple tableaux.
    """
    if len(mp) != d:
        raise ValueError(f"label {mp} does not have {d} components")
    if route == "formula":
        n = total_size(mp)
        inner = q_multinomial(n, [sum(c) for c in mp])
        for comp in mp:
            inner = inner * hook_syt_gf(comp)
    elif route == "enumeration":
        inner = tuple_maj_gf(mp)
    else:
        raise ValueError(f"unknown wreath route {route!r}")
    return inner.substitute_power(d).shift(b_multi(mp))


# ---------------------------------------------------------------------------
# Types B and C (d = 2)

BC_ROUTES = ("domino_even", "domino_odd", "tuple")


def fake_degree_bc(pair: Multipartition, route: str = "tuple") -> QPolynomial:
    """Fake degree of the hyperoctahedral irreducible of an ordered pair.

    The domino routes sum q^(2 maj) over standard domino tableaux of the
    two associated shapes of sizes 2n and 2n+1; the tuple route is the
    d = 2 wreath enumeration.  All three agree.
    """
    if len(pair) != 2:
        raise ValueError("types B/C take an ordered pair of partitions")
    if route == "domino_even":
        inner = sdt_maj_gf(lusztig_rho1(pair))
    elif route == "domino_odd":
        inner = sdt_maj_gf(lusztig_rho2(pair))
    elif route == "tuple":
        return fake_degree_wreath(pair, 2, "enumeration")
    else:
        raise ValueError(f"unknown B/C route {route!r}")
    return inner.substitute_power(2).shift(b_multi(pair))


# ---------------------------------------------------------------------------
# Type D

D_ROUTES = ("tuple", "domino", "shifted")


def _orderings(rep: Representation) -> list[Multipartition]:
    lam1, lam2 = rep.label
    if lam1 == lam2:
        return [rep.label]
    return [rep.label, (lam2, lam1)]


def _restricted_sdt_gf(pair: Multipartition) -> QPolynomial:
    """Sum of q^maj over SDTs of the even associated shape whose image
    pair under the maj-preserving bijection has the largest label in the
    first component."""
    from .bijections import pi_c_prime

    coeffs: list[int] = []
    for t in enumerate_sdt(lusztig_rho1(pair)):
        if largest_label_component(pi_c_prime(t)) != 1:
            continue
        m = maj_domino(t)
        if m >= len(coeffs):
            coeffs.extend([0] * (m + 1 - len(coeffs)))
        coeffs[m] += 1
    return QPolynomial(coeffs)


def fake_degree_d(rep: Representation, route: str = "tuple") -> QPolynomial:
    """Fake degree of a type-D irreducible, three independent routes.

    tuple: restricted tuple generating functions of both orderings (one
    term when the components are equal); domino: the same restriction
    transported through the maj-preserving bijection; shifted: a single
    sum over tuple tableaux of the canonical ordering, subtracting n from
    the exponent whenever the largest label falls in the second filling.
    The marker does not affect the polynomial.
    """
    if rep.group != "d":
        raise ValueError("fake_degree_d needs a type-D representation")
    n = rep.n
    if n < 2:
        raise ValueError("type D needs n >= 2")
    lam1, lam2 = rep.label
    if route == "tuple":
        out = QPolynomial()
        for ordering in _orderings(rep):
            out = out + tuple_maj_gf_restricted(ordering).substitute_power(2).shift(
                b_multi(ordering)
            )
        return out
    if route == "domino":
        out = QPolynomial()
        for ordering in _orderings(rep):
            out = out + _restricted_sdt_gf(ordering).substitute_power(2).shift(
                b_multi(ordering)
            )
        return out
    if route == "shifted":
        b = b_multi(rep.label)
        coeffs: list[int] = []
        for t in enumerate_tuple_tableaux(rep.label):
            e = b + 2 * maj_tuple(t)
            if largest_label_component(t) == 2:
                e -= n
            if e >= len(coeffs):
                coeffs.extend([0] * (e + 1 - len(coeffs)))
            coeffs[e] += 1
        total = QPolynomial(coeffs)
        if lam1 == lam2:
            halved = []
            for c in total.coeffs:
                if c % 2 != 0:
                    raise ArithmeticError(
                        f"equal-component sum not divisible by 2 for {rep.label}"
                    )
                halved.append(c // 2)
            total = QPolynomial(halved)
        return total
    raise ValueError(f"unknown type-D route {route!r}")


# ---------------------------------------------------------------------------
# Poincaré polynomials and the regular-representation identity


def poincare_wreath(d: int, n: int) -> QPolynomial:
    """Hilbert series of the coinvariant algebra: prod over i of [d*i]_q."""
    if d < 1 or n < 0:
        raise ValueError("poincare_wreath needs d >= 1, n >= 0")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(d * i)
    return out


def poincare_bc(n: int) -> QPolynomial:
    return poincare_wreath(2, n)


def poincare_d(n: int) -> QPolynomial:
    """[n]_q times prod over i < n of [2i]_q (degrees 2, 4, ..., 2n-2, n)."""
    if n < 2:
        raise ValueError("type D needs n >= 2")
    out = q_int(n)
    for i in range(1, n):
        out = out * q_int(2 * i)
    return out


def dimension(rep: Representation) -> int:
    """Dimension of the irreducible: the fake degree evaluated at 1."""
    if rep.group == "wreath":
        return fake_degree_wreath(rep.label, rep.d, "formula").evaluate_at_one()
    if rep.group == "bc":
        return fake_degree_bc(rep.label).evaluate_at_one()
    return fake_degree_d(rep).evaluate_at_one()


def all_representations(group: str, n: int, d: int = 2) -> list[Representation]:
    """Every irreducible representation label of the group of rank n."""
    if group == "wreath":
        return [wreath_rep(mp, d) for mp in multipartitions_of(n, d)]
    if group == "bc":
        return [bc_rep(p) for p in multipartitions_of(n, 2)]
    if group == "d":
        out = []
        for pair in multipartitions_of(n, 2):
            lam1, lam2 = pair
            if lam1 < lam2:
                continue
            if lam1 == lam2:
                out.append(d_rep(pair, 1))
                out.append(d_rep(pair, 2))
            else:
                out.append(d_rep(pair))
        return out
    raise ValueError(f"unknown group {group!r}")


def regular_representation_sum(group: str, n: int, d: int = 2) -> QPolynomial:
    """Sum of dim(V) * f_V over all irreducibles; equals the Poincaré
    polynomial."""
    out = QPolynomial()
    for rep in all_representations(group, n, d):
        if rep.group == "wreath":
            f = fake_degree_wreath(rep.label, rep.d, "formula")
        elif rep.group == "bc":
            f = fake_degree_bc(rep.label)
        else:
            f = fake_degree_d(rep)
        out = out + f * QPolynomial([f.evaluate_at_one()])
    return out


# ---------------------------------------------------------------------------
# Special partners and exponent containment


def symbol_of(pair: Multipartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Defect-1 symbol of an ordered pair: two strictly increasing rows
    whose lengths differ by one."""
    alpha_star, beta_star = _starred_rows(pair)
    return tuple(sorted(alpha_star)), tuple(sorted(beta_star))


def special_partner_bc(pair: Multipartition) -> Multipartition:
    """The pair labelling the special representation in the family of the
    given pair: sort all symbol entries increasingly and deal them
    alternately, odd positions to the long row."""
    long_row, short_row = symbol_of(pair)
    merged = sorted(long_row + short_row)
    new_long = merged[0::2]
    new_short = merged[1::2]
    m = len(short_row)
    return (_unstar(new_long, m + 1), _unstar(new_short, m))


def is_shifted_submultiset(a: list[int], b: list[int]) -> bool:
    """Whether some uniform integer shift embeds multiset a into b."""
    if not a:
        return True
    if len(a) > len(b):
        return False
    from collections import Counter

    ca = Counter(a)
    cb = Counter(b)
    for s in {y - x for x in ca for y in cb}:
        if all(cb[x + s] >= k for x, k in ca.items()):
            return True
    return False


def check_corollary1_bc(n: int) -> list[dict]:
    """Exponent containment against the special partner, types B/C.

    Returns one record per ordered pair of total size n; "ok" is the
    shifted-submultiset verdict.
    """
    out = []
    for pair in multipartitions_of(n, 2):
        mu = special_partner_bc(pair)
        exp_lam = fake_degree_bc(pair).exponent_multiset()
        exp_mu = fake_degree_bc(mu).exponent_multiset()
        out.append(
            {
                "label": pair,
                "special": mu,
                "exponents": exp_lam,
                "special_exponents": exp_mu,
                "ok": is_shifted_submultiset(exp_lam, exp_mu),
            }
        )
    return out


def check_corollary1_d(n: int) -> list[dict]:
    """Two-part exponent containment in type D.

    The exponents of a type-D fake degree split naturally into the two
    ordering contributions of the tuple route (a single part for an
    equal-component pair); each part must embed, with its own shift, into
    the exponents of the special partner's type-D fake degree.
    """
    out = []
    for rep in all_representations("d", n):
        if rep.marker == 2:
            continue  # same polynomial as marker 1
        mu = d_rep(special_partner_bc(rep.label))
        exp_mu = fake_degree_d(mu).exponent_multiset()
        parts = []
        for ordering in _orderings(rep):
            piece = tuple_maj_gf_restricted(ordering).substitute_power(2).shift(
                b_multi(ordering)
            )
            parts.append(piece.exponent_multiset())
        ok = all(is_shifted_submultiset(p, exp_mu) for p in parts)
        out.append(
            {
                "label": rep.label,
                "special": mu.label,
                "parts": parts,
                "special_exponents": exp_mu,
                "ok": ok,
            }
        )
    return out
