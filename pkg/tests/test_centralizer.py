"""Centralizer computation by both routes plus the exact laws tying them."""

import pytest

from fusioncat import (
    CentralElement,
    CharacterAlgebra,
    FusionSubcategory,
    catalog_get,
    catalog_names,
    centralizer,
    centralizer_smatrix,
    centralizer_suite,
    centralizer_theorem,
    enumerate_subcats,
    verify_main_identity,
)
from fusioncat.category import build_category, category_to_input
from fusioncat.cyclotomic import rational
from fusioncat.errors import CapabilityError, NotRibbonConsistentError


def test_toric_self_centralizing_halves(algs):
    alg = algs["toric_code"]
    for members in ((0, 1), (0, 2), (0, 3)):
        result = centralizer(alg, FusionSubcategory(members))
        assert result.agreed
        assert result.members == members


def test_toric_extremes(algs):
    alg = algs["toric_code"]
    assert centralizer(alg, FusionSubcategory((0,))).members == (0, 1, 2, 3)
    assert centralizer(alg, FusionSubcategory((0, 1, 2, 3))).members == (0,)


def test_ising_psi_self_centralizing(algs):
    alg = algs["ising"]
    result = centralizer(alg, FusionSubcategory((0, 2)))
    assert result.members == (0, 2)
    full = centralizer(alg, FusionSubcategory((0, 1, 2)))
    assert full.members == (0,)


def test_fibonacci_extremes(algs):
    alg = algs["fibonacci"]
    assert centralizer(alg, FusionSubcategory((0,))).members == (0, 1)
    assert centralizer(alg, FusionSubcategory((0, 1))).members == (0,)


def test_transform_image_toric(algs):
    alg = algs["toric_code"]
    result = centralizer(alg, FusionSubcategory((0, 1)))
    assert result.image == CentralElement(
        (rational(1), rational(1), rational(0), rational(0))
    )


@pytest.mark.parametrize("name", catalog_names())
def test_routes_agree_everywhere(name, algs):
    alg = algs[name]
    for d in enumerate_subcats(alg):
        by_s = centralizer_smatrix(alg, d)
        by_t, _ = centralizer_theorem(alg, d)
        assert by_s.members == by_t.members


@pytest.mark.parametrize("name", catalog_names())
def test_main_identity_everywhere(name, algs):
    alg = algs[name]
    for d in enumerate_subcats(alg):
        checks = verify_main_identity(alg, d)
        assert [c.check_id for c in checks if c.status == "fail"] == []
        ids = [c.check_id for c in checks]
        assert "main-identity" in ids and "double-centralizer" in ids


def test_anti_monotone_toric(algs):
    alg = algs["toric_code"]
    subcats = enumerate_subcats(alg)
    for d in subcats:
        for e in subcats:
            if set(d.members) <= set(e.members):
                dp = centralizer_smatrix(alg, d).members
                ep = centralizer_smatrix(alg, e).members
                assert set(dp) >= set(ep)


@pytest.mark.parametrize("name", catalog_names())
def test_suite_passes(name, algs):
    checks = centralizer_suite(algs[name])
    assert [c.check_id for c in checks if c.status == "fail"] == []


def test_suite_skips_without_s_matrix():
    inp = category_to_input(catalog_get("toric_code"), kind="fusion_ring")
    alg = CharacterAlgebra(build_category(inp))
    checks = centralizer_suite(alg)
    assert all(c.status == "skip" for c in checks)
    with pytest.raises(CapabilityError):
        centralizer_smatrix(alg, FusionSubcategory((0,)))


def test_non_closed_member_set_rejected(algs):
    # {1, e, m} is not fusion-closed; its weighted character sum transforms
    # to something that is not a 0/1 vector, which must be an error
    alg = algs["toric_code"]
    with pytest.raises(NotRibbonConsistentError):
        centralizer_theorem(alg, FusionSubcategory((0, 1, 2)))
