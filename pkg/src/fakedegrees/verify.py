"""Exhaustive verification suites over all representations at desk scale.

Each suite returns a list of JSON-serializable records; a record with
"agree" (or "ok") false is a failure.  Suites are deterministic: records
are emitted in a fixed enumeration order.
"""

from __future__ import annotations

import json

from .bijections import pi_b_prime, pi_c_prime
from .dominoes import enumerate_sdt, maj_domino
from .fakedeg import (
    all_representations,
    check_corollary1_bc,
    check_corollary1_d,
    fake_degree_bc,
    fake_degree_d,
    fake_degree_wreath,
    poincare_d,
    poincare_wreath,
    regular_representation_sum,
)
from .qpoly import QPolynomial
from .shapes import (
    format_multipartition,
    lusztig_rho1,
    lusztig_rho2,
    multipartitions_of,
)
from .tableaux import enumerate_tuple_tableaux, maj_tuple

SUITES = ("thm1", "thm2", "thm4", "thm5", "bijections", "poincare", "cor1")


def _record(group: str, label: str, routes: dict[str, QPolynomial]) -> dict:
    polys = list(routes.values())
    agree = all(p == polys[0] for p in polys)
    return {
        "group": group,
        "label": label,
        "routes": {name: p.pretty() for name, p in routes.items()},
        "agree": agree,
        "exponents": polys[0].exponent_multiset() if agree else [],
        "palindromic": polys[0].is_palindromic(),
    }


def suite_thm1(max_n: int) -> list[dict]:
    """Wreath-product formula route vs enumeration route, d <= 3."""
    out = []
    for d in (1, 2, 3):
        for n in range(0, max_n + 1):
            for mp in multipartitions_of(n, d):
                out.append(
                    _record(
                        f"wreath({d},{n})",
                        format_multipartition(mp),
                        {
                            "formula": fake_degree_wreath(mp, d, "formula"),
                            "enumeration": fake_degree_wreath(mp, d, "enumeration"),
                        },
                    )
                )
    return out


def suite_thm2(max_n: int) -> list[dict]:
    """Triple agreement of the B/C routes: even dominoes, odd dominoes,
    tuple tableaux."""
    out = []
    for n in range(0, max_n + 1):
        for pair in multipartitions_of(n, 2):
            out.append(
                _record(
                    f"typeBC({n})",
                    format_multipartition(pair),
                    {
                        "domino_even": fake_degree_bc(pair, "domino_even"),
                        "domino_odd": fake_degree_bc(pair, "domino_odd"),
                        "tuple": fake_degree_bc(pair, "tuple"),
                    },
                )
            )
    return out


def _d_suite(max_n: int, other_route: str) -> list[dict]:
    out = []
    for n in range(2, max_n + 1):
        for rep in all_representations("d", n):
            label = format_multipartition(rep.label) + f";c={rep.marker}"
            out.append(
                _record(
                    f"typeD({n})",
                    label,
                    {
                        "tuple": fake_degree_d(rep, "tuple"),
                        other_route: fake_degree_d(rep, other_route),
                    },
                )
            )
    return out


def suite_thm4(max_n: int) -> list[dict]:
    """Type D: tuple route vs domino-restricted route."""
    return _d_suite(max_n, "domino")


def suite_thm5(max_n: int) -> list[dict]:
    """Type D: tuple route vs the shifted single-sum formula."""
    return _d_suite(max_n, "shifted")


def suite_bijections(max_n: int) -> list[dict]:
    """Certify both maj-preserving bijections shape by shape.

    For each pair shape: every domino tableau maps to a valid tuple
    tableau of that shape with equal major index, images are pairwise
    distinct, and their number equals the number of standard tuple
    tableaux (hence surjectivity)."""
    out = []
    for n in range(0, max_n + 1):
        for pair_shape in multipartitions_of(n, 2):
            for kind, rho, prime in (
                ("even", lusztig_rho1, pi_c_prime),
                ("odd", lusztig_rho2, pi_b_prime),
            ):
                shape = rho(pair_shape)
                images = []
                maj_ok = True
                for t in enumerate_sdt(shape):
                    z = prime(t)
                    if maj_tuple(z) != maj_domino(t):
                        maj_ok = False
                    images.append(z)
                universe = list(enumerate_tuple_tableaux(pair_shape))
                ok = (
                    maj_ok
                    and len(set(images)) == len(images)
                    and sorted(images) == sorted(universe)
                )
                out.append(
                    {
                        "group": f"bijection-{kind}({n})",
                        "label": format_multipartition(pair_shape),
                        "routes": {
                            "tableaux": str(len(images)),
                            "targets": str(len(universe)),
                        },
                        "agree": ok,
                        "exponents": sorted(maj_domino(t) for t in enumerate_sdt(shape)),
                        "palindromic": True,
                    }
                )
    return out


def suite_poincare(max_n: int) -> list[dict]:
    """Regular-representation identity: sum of dim * fake degree equals the
    Poincaré polynomial, for wreath(2,n), wreath(3,n), and type D."""
    out = []
    for d in (2, 3):
        for n in range(0, max_n + 1):
            out.append(
                _record(
                    f"wreath({d},{n})",
                    "regular",
                    {
                        "sum": regular_representation_sum("wreath", n, d),
                        "poincare": poincare_wreath(d, n),
                    },
                )
            )
    for n in range(2, max_n + 1):
        out.append(
            _record(
                f"typeD({n})",
                "regular",
                {
                    "sum": regular_representation_sum("d", n),
                    "poincare": poincare_d(n),
                },
            )
        )
    return out


def suite_cor1(max_n: int) -> list[dict]:
    """Exponent containment against the special partner (B/C), and the
    two-part relaxation (type D)."""
    out = []
    for n in range(0, max_n + 1):
        for r in check_corollary1_bc(n):
            out.append(
                {
                    "group": f"typeBC({n})",
                    "label": format_multipartition(r["label"]),
                    "routes": {"special": format_multipartition(r["special"])},
                    "agree": r["ok"],
                    "exponents": r["exponents"],
                    "palindromic": True,
                }
            )
    for n in range(2, max_n + 1):
        for r in check_corollary1_d(n):
            out.append(
                {
                    "group": f"typeD({n})",
                    "label": format_multipartition(r["label"]),
                    "routes": {"special": format_multipartition(r["special"])},
                    "agree": r["ok"],
                    "exponents": sorted(x for part in r["parts"] for x in part),
                    "palindromic": True,
                }
            )
    return out


def run_suite(name: str, max_n: int) -> list[dict]:
    funcs = {
        "thm1": suite_thm1,
        "thm2": suite_thm2,
        "thm4": suite_thm4,
        "thm5": suite_thm5,
        "bijections": suite_bijections,
        "poincare": suite_poincare,
        "cor1": suite_cor1,
    }
    if name == "all":
        out = []
        for suite in SUITES:
            out.extend(funcs[suite](max_n))
        return out
    if name not in funcs:
        raise ValueError(f"unknown suite {name!r}")
    return funcs[name](max_n)


def failures(records: list[dict]) -> list[dict]:
    return [r for r in records if not r["agree"]]


def to_json_lines(records: list[dict]) -> str:
    return "\n".join(json.dumps(r, sort_keys=True) for r in records)
