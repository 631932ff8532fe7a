

from hopfkit import catalog

from conftest import build
from hopfkit.hopf import (
    Element,
    antipode_order,
    dual,
    is_semisimple,
    s_squared_order,
    tensor_product,
    tr_s_squared,
    verify_algebra,
    verify_antipode,
    verify_coalgebra,
    verify_hopf,
)


def test_group_algebra_c2_passes():
    h, _ = build("c_n", n=2)
    assert verify_hopf(h).ok


def test_sweedler_algebra_passes():
    h, _ = build("taft", n=2)
    assert verify_hopf(h).ok


def test_mutated_sweedler_fails_coassociativity():
    h, _ = build("taft", n=2)
    # drop the g (x) x term from Delta(x); x sits at basis index 2
    broken = [tr if i != 2 else [t for t in tr if t[:2] != (1, 2)]
              for i, tr in enumerate(h.comult)]
    h2 = type(h)(h.dim, h.conductor, h.labels, h.mult, h.unit, broken, h.counit, h.antipode)
    rep = verify_coalgebra(h2)
    assert not rep.ok
    assert any("x" in f for f in rep.failures)


def test_identity_antipode_fails_on_sweedler():
    from hopfkit.linalg import Matrix

    h, _ = build("taft", n=2)
    h2 = type(h)(h.dim, h.conductor, h.labels, h.mult, h.unit, h.comult, h.counit,
                 Matrix.identity(h.dim, h.conductor))
    assert verify_algebra(h2).ok
    assert not verify_antipode(h2).ok


def test_dual_is_involution_on_the_nose():
    for maker in (lambda: build("taft", n=2), lambda: build("fun-dic", p=3),
                  lambda: build("dihedral", n=3)):
        h, _ = maker()
        assert dual(dual(h)).same_tensors(h)


def test_dual_of_group_algebra_is_commutative():
    h, _ = build("dicyclic", n=3)
    d = dual(h)
    assert verify_hopf(d).ok
    assert d.dim == 12
    for i in range(d.dim):
        for j in range(i + 1, d.dim):
            assert d.mult[i][j] == d.mult[j][i]


def test_dual_of_taft_passes_and_has_skew_primitive():
    from hopfkit.invariants import skew_primitive_space

    h, _ = build("taft", n=3)
    d = dual(h)
    assert verify_hopf(d).ok
    # characters of T_q are the group-likes of the dual; find a nontrivial pair
    chars = [Element(d, [m.action[i].entries[0][0] for i in range(h.dim)])
             for m in build("taft", n=3)[1].simples]
    assert all(c.is_grouplike() for c in chars)
    found = any(
        skew_primitive_space(d, a, b).dim > 1
        for a in chars for b in chars
    )
    assert found


def test_tensor_product_dims_and_group_case():
    t, _ = build("taft", n=2)
    c3, _ = build("c_n", n=3)
    h = tensor_product(t, c3)
    assert h.dim == 12
    assert verify_hopf(h).ok
    # tensor of group algebras = group algebra of the product
    c2, _ = build("c_n", n=2)
    prod = tensor_product(c2, c3)
    direct, _ = catalog.group_algebra(("product", (2, 3)))
    assert prod.dim == direct.dim == 6
    assert verify_hopf(prod).ok
    assert sorted(tuple(sorted(d.items())) for row in prod.mult for d in row) == \
           sorted(tuple(sorted(d.items())) for row in direct.mult for d in row)


def test_h_tensor_base_field_is_h():
    h, _ = build("taft", n=2)
    k, _ = build("c_n", n=1)
    hk = tensor_product(h, k)
    assert hk.same_tensors(h)


def test_element_ops_in_h8p():
    h, cd = build("h8p", p=3, alpha=1)
    unit = Element.unit(h)
    a = Element.basis(h, 2 * 3)          # a = index 2p in the z-degree-0 block
    z = Element.basis(h, h.dim // 2)     # first z-monomial
    assert (unit * a).coeffs == a.coeffs
    assert (z * z).coeffs == (a - unit).coeffs
    g = cd.grouplikes[1]
    assert (g ** 4).coeffs == unit.coeffs
    assert (g ** 2).coeffs == a.coeffs
    assert g.inverse() is not None
    assert (g.inverse() * g).coeffs == unit.coeffs


def test_element_inverse_absent():
    h, _ = build("taft", n=2)
    x = Element.basis(h, 2)
    assert x.inverse() is None


def test_tr_s_squared_values():
    c6, _ = build("c_n", n=6)
    assert tr_s_squared(c6) == 6
    h4, _ = build("taft", n=2)
    assert tr_s_squared(h4).is_zero()
    assert not is_semisimple(h4)
    assert is_semisimple(c6)


def test_antipode_orders():
    c6, _ = build("c_n", n=6)
    assert antipode_order(c6) == 2
    klein, _ = build("product", ns="2,2")
    assert antipode_order(klein) == 1
    am10, _ = build("a-m10", p=3)
    assert antipode_order(am10) == 4
    assert s_squared_order(am10) == 2
    h8, _ = build("h8p", p=3, alpha=1)
    # no printed value exists for this one; just record that it is finite
    assert antipode_order(h8) in (4, 8)


def test_nichols_zoeller_divisibility():
    for h, cd in [build("taft", n=2), build("fun-dic", p=3), build("h8p", p=3, alpha=1),
                  build("a4p", p=3), build("a-m11", p=3)]:
        assert h.dim % len(cd.grouplikes) == 0


def test_json_round_trip_bit_exact():
    import json

    from hopfkit import io as hio

    h, cd = build("taft", n=3)
    blob = json.dumps(hio.hopf_to_json(h), sort_keys=True)
    h2 = hio.hopf_from_json(json.loads(blob))
    assert h2.same_tensors(h)
    blob2 = json.dumps(hio.hopf_to_json(h2), sort_keys=True)
    assert blob == blob2


def test_tr_s_squared_is_group_order():
    for name, kw, order in [("c_n", {"n": 6}, 6), ("dihedral", {"n": 3}, 6),
                            ("dicyclic", {"n": 3}, 12), ("q8", {}, 8),
                            ("gamma4p", {"p": 5}, 20), ("product", {"ns": "2,2"}, 4)]:
        h, _ = build(name, **kw)
        assert tr_s_squared(h) == order
