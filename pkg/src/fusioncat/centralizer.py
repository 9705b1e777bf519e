"""Centralizers of fusion subcategories in a modular category, two ways.

Route one reads the centralizer straight off the s-matrix:

    D' = { j : s_ij = d_i d_j for every i in D }.

Route two runs the cointegral of D through the Drinfeld map.  The image
drinfeld(lambda_D) must come out as a sum of distinct primitive idempotents,
i.e. its coefficient vector lies in {0, 1}^rank; the support is exactly D'.
Both routes are computed independently and compared, and the transform
route is tied back to class-function land by the main identity

    fourier(drinfeld(lambda_D)) = (dim D' / dim C) * lambda_{D'}

together with its companions: the integral transfer
ell_{D'} = (dim C / dim D') drinfeld(lambda_D), the support law
support(D') = members(D), the duality (D')' = D and dim D * dim D' = dim C.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import Check
from .charalg import CentralElement, CharacterAlgebra
from .errors import NotRibbonConsistentError
from .lattice import (
    FusionSubcategory,
    enumerate_subcats,
    generate_subcat,
    subcat_invariants,
)

__all__ = [
    "CentralizerResult",
    "centralizer_smatrix",
    "centralizer_theorem",
    "centralizer",
    "verify_main_identity",
    "centralizer_suite",
]


@dataclass(frozen=True)
class CentralizerResult:
    subcat: FusionSubcategory
    smatrix_route: FusionSubcategory
    transform_route: FusionSubcategory
    image: CentralElement  # drinfeld(lambda_D)

    @property
    def agreed(self) -> bool:
        return self.smatrix_route.members == self.transform_route.members

    @property
    def members(self) -> tuple[int, ...]:
        return self.smatrix_route.members


def centralizer_smatrix(
    alg: CharacterAlgebra, subcat: FusionSubcategory
) -> FusionSubcategory:
    """Objects whose s-matrix pairing with all of D degenerates to d_i d_j."""
    s = alg._require_s()
    members = tuple(
        j
        for j in range(alg.rank)
        if all(s.rows[i][j] == alg.dims[i] * alg.dims[j] for i in subcat.members)
    )
    closed = generate_subcat(alg, members)
    if closed.members != members:
        raise NotRibbonConsistentError(
            "s-matrix centralizer is not fusion-closed"
        )
    return FusionSubcategory(members)


def centralizer_theorem(alg: CharacterAlgebra, subcat: FusionSubcategory):
    """Centralizer via the Drinfeld image of the cointegral; returns the
    subcategory and the idempotent image drinfeld(lambda_D)."""
    image = alg.drinfeld(alg.cointegral(subcat.members))
    support = []
    for j, c in enumerate(image.coeffs):
        if c == 1:
            support.append(j)
        elif not c.is_zero():
            raise NotRibbonConsistentError(
                f"transform of the cointegral has coefficient {c} at {j}; "
                "expected a 0/1 vector"
            )
    members = tuple(support)
    closed = generate_subcat(alg, members)
    if closed.members != members:
        raise NotRibbonConsistentError(
            "support of the transformed cointegral is not fusion-closed"
        )
    return FusionSubcategory(members), image


def centralizer(alg: CharacterAlgebra, subcat: FusionSubcategory) -> CentralizerResult:
    by_s = centralizer_smatrix(alg, subcat)
    by_t, image = centralizer_theorem(alg, subcat)
    return CentralizerResult(
        subcat=subcat, smatrix_route=by_s, transform_route=by_t, image=image
    )


def verify_main_identity(
    alg: CharacterAlgebra, subcat: FusionSubcategory
) -> list[Check]:
    """All exact centralizer laws for one subcategory."""
    checks: list[Check] = []

    def record(check_id, ok, detail=""):
        checks.append(Check(check_id, "pass" if ok else "fail", detail))

    try:
        result = centralizer(alg, subcat)
    except NotRibbonConsistentError as e:
        return [Check("centralizer-route-agreement", "fail", str(e))]

    record(
        "centralizer-route-agreement",
        result.agreed,
        f"D' = {list(result.members)}"
        if result.agreed
        else f"s-route {list(result.smatrix_route.members)} != "
        f"transform route {list(result.transform_route.members)}",
    )
    prime = result.transform_route
    prime_inv = subcat_invariants(alg, prime)

    lhs = alg.fourier(result.image)
    rhs = prime_inv.cointegral.scaled(prime_inv.dim * alg._dim_inv)
    record(
        "main-identity",
        lhs == rhs,
        "fourier(drinfeld(lambda_D)) = (dim D'/dim C) lambda_D'",
    )

    record(
        "integral-transfer",
        prime_inv.integral == result.image.scaled(prime_inv.index),
        "ell_D' = (dim C/dim D') drinfeld(lambda_D)",
    )

    record(
        "centralizer-idempotent",
        alg.ce_mul(result.image, result.image) == result.image,
    )

    record(
        "centralizer-support",
        prime_inv.support == subcat.members,
        f"support(D') = {list(prime_inv.support)}, members(D) = {list(subcat.members)}",
    )

    double = centralizer_smatrix(alg, prime)
    record(
        "double-centralizer",
        double.members == subcat.members,
        f"(D')' = {list(double.members)}",
    )

    d_inv = subcat_invariants(alg, subcat)
    record(
        "dim-product",
        d_inv.dim * prime_inv.dim == alg.dim,
        f"dim D = {d_inv.dim}, dim D' = {prime_inv.dim}",
    )

    return checks


def centralizer_suite(alg: CharacterAlgebra) -> list[Check]:
    """Centralizer laws over every fusion subcategory, folded per law."""
    if alg.data.modular is None:
        ids = (
            "centralizer-route-agreement",
            "main-identity",
            "integral-transfer",
            "centralizer-idempotent",
            "centralizer-support",
            "double-centralizer",
            "dim-product",
        )
        return [Check(cid, "skip", "needs an s-matrix") for cid in ids]

    merged: dict[str, Check] = {}
    for d in enumerate_subcats(alg):
        for c in verify_main_identity(alg, d):
            prev = merged.get(c.check_id)
            if prev is None or (prev.status != "fail" and c.status == "fail"):
                detail = c.detail if c.status == "fail" else ""
                if c.status == "fail":
                    detail = f"D = {list(d.members)}: {c.detail}"
                merged[c.check_id] = Check(c.check_id, c.status, detail)
    count = len(enumerate_subcats(alg))
    return [
        Check(c.check_id, c.status, c.detail or f"all {count} subcategories")
        for c in merged.values()
    ]
