import pytest

from hopfkit import catalog

from conftest import build
from hopfkit.hopf import tr_s_squared, verify_hopf


def test_dicyclic_group_algebra():
    h, cd = build("dicyclic", n=3)
    assert h.dim == 12
    assert len(cd.grouplikes) == 12
    assert all(g.is_grouplike() for g in cd.grouplikes)


def test_gamma20_profile():
    h, cd = build("gamma4p", p=5)
    assert h.dim == 20
    assert sorted(m.dim for m in cd.simples) == [1, 1, 1, 1, 4]


def test_gamma4p_rejects_bad_p():
    with pytest.raises(ValueError):
        catalog.group_algebra(("gamma4p", 3))
    with pytest.raises(ValueError):
        catalog.group_algebra(("gamma4p", 9))


def test_base_field_member():
    h, cd = build("c_n", n=1)
    assert h.dim == 1
    assert verify_hopf(h).ok


def test_taft_counts():
    h, cd = build("taft", n=3)
    assert h.dim == 9
    assert len(cd.grouplikes) == 3
    assert all(g.is_grouplike() for g in cd.grouplikes)
    with pytest.raises(ValueError):
        catalog.taft(4, 2)  # zeta_4^2 = -1 is not primitive


def test_pointed4p_variants_build():
    for variant in catalog.POINTED4P_VARIANTS:
        h, cd = catalog.pointed4p(variant, 3)
        assert h.dim == 12
        assert len(cd.grouplikes) == 6
        assert all(g.is_grouplike() for g in cd.grouplikes)
        assert tr_s_squared(h).is_zero()


def test_pointed4p_rejects_even_p():
    with pytest.raises(ValueError):
        catalog.pointed4p("a-m10", 4)


def test_h4xcp_matches_tensor_product():
    from hopfkit.hopf import tensor_product

    h, _ = build("h4xcp", p=3)
    t, _ = build("taft", n=2)
    c, _ = build("c_n", n=3)
    assert h.same_tensors(tensor_product(t, c))


def test_a4p_klein_and_b4p_cyclic_grouplikes():
    # with (s+s-)^p = 1 the braid identity makes s_+(p) itself group-like
    # (Klein four); with (s+s-)^p = a only the idempotent-twisted combinations
    # are, and they square to a (cyclic of order four)
    _, cd_a = build("a4p", p=3)
    assert sorted(g.order(20) for g in cd_a.grouplikes) == [1, 2, 2, 2]
    _, cd_b = build("b4p", p=3)
    assert sorted(g.order(20) for g in cd_b.grouplikes) == [1, 2, 4, 4]


def test_b4p_middle_reflection_power_is_a():
    from hopfkit.hopf import Element

    h, cd = build("b4p", p=3)
    group = cd.extra["group"]
    splus = Element.basis(h, group.index[group.generators["s+"]])
    sminus = Element.basis(h, group.index[group.generators["s-"]])
    a = Element.basis(h, group.index[(3, 0)])
    assert ((splus * sminus) ** 3).coeffs == a.coeffs


def test_b8_kac_paljutkin():
    h, cd = build("b8")
    assert h.dim == 8
    assert tr_s_squared(h) == 8
    assert sorted(g.order(20) for g in cd.grouplikes) == [1, 2, 2, 2]


def test_fun_dic_grouplike_element_algebra():
    h, cd = build("fun-dic", p=3)
    g = cd.grouplikes[1]
    a = cd.grouplikes[2]
    assert (g * g).coeffs == a.coeffs
    assert g.order(10) == 4


def test_h8p_alpha_guard():
    with pytest.raises(ValueError):
        catalog.h8p(3, 2)


def test_h8p_alpha0_matches_bosonization():
    from hopfkit.ydnichols import bosonize, named_datum

    h0, _ = build("h8p", p=3, alpha=0)
    b = bosonize(named_datum("fun-dic", 3))
    assert b.same_tensors(h0)


def test_every_family_at_p3_verifies():
    builders = [
        lambda: build("c_n", n=6),
        lambda: build("dihedral", n=3),
        lambda: catalog.group_algebra(("q8",)),
        lambda: build("dual-group", group="dicyclic", n=3),
        lambda: build("taft", n=2),
        lambda: build("a-m10", p=3),
        lambda: build("a4p", p=3),
        lambda: build("b4p", p=3),
        lambda: build("b8"),
        lambda: build("fun-dic", p=3),
        lambda: build("h8p", p=3, alpha=1),
    ]
    for b in builders:
        h, _ = b()  # constructors verify by default and raise on failure
        assert h.dim >= 1


def test_build_family_dispatch():
    h, _ = catalog.build_family("dual-group", {"group": "dicyclic", "n": 3})
    assert h.dim == 12
    h, _ = catalog.build_family("product", {"ns": "2,4"})
    assert h.dim == 8
    with pytest.raises(ValueError):
        catalog.build_family("nope", {})
