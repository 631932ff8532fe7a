from conftest import build
from hopfkit.invariants import jacobson_radical
from hopfkit.linalg import Matrix
from hopfkit.repsolver import (
    RepModule,
    are_isomorphic,
    hom_space,
    is_simple_certified,
    verify_module,
    wedderburn_certificate,
)


def regular_module(h):
    return RepModule("regular", h.dim, [h.left_mult_matrix(h.basis_dict(i))
                                        for i in range(h.dim)])


def test_regular_representation_verifies():
    for name, kw in [("taft", {"n": 2}), ("dicyclic", {"n": 3})]:
        h, _ = build(name, **kw)
        ok, why = verify_module(h, regular_module(h))
        assert ok, why


def test_regular_module_not_simple():
    h, _ = build("taft", n=2)
    assert not is_simple_certified(h, regular_module(h))


def test_h8p_u_modules():
    h, cd = build("h8p", p=3, alpha=1)
    u0 = cd.extra["u_all"][0]
    ok, why = verify_module(h, u0)
    assert ok, why
    assert is_simple_certified(h, u0)
    # flipping the sign of z.u_2 = -2u_1 breaks the pair (z, z)
    bad_action = [Matrix(2, 2, h.conductor, [list(r) for r in m.entries])
                  for m in u0.action]
    z_first = h.dim // 2
    for idx in range(h.dim):
        # rebuild action from mutated generators is overkill; directly negate
        # the (0,1) entry wherever it matches the z-column pattern
        pass
    zmat = bad_action[z_first]
    zmat.entries[0][1] = -zmat.entries[0][1]
    bad = RepModule("U0-flipped", 2, bad_action)
    ok, why = verify_module(h, bad)
    assert not ok
    assert "z" in why


def test_one_dimensional_always_simple():
    h, cd = build("fun-dic", p=3)
    for m in cd.simples[:4]:
        assert is_simple_certified(h, m)


def test_hom_spaces_and_isomorphism_classes():
    h, cd = build("h8p", p=3, alpha=1)
    u = cd.extra["u_all"]
    assert hom_space(h, u[0], u[0]).dim == 1
    for i in range(6):
        assert are_isomorphic(h, u[i], u[(i + 3) % 6])
    assert not are_isomorphic(h, u[0], u[1])
    w0 = cd.simples[0]
    assert hom_space(h, w0, u[0]).dim == 0


def test_wedderburn_h8p():
    h, cd = build("h8p", p=3, alpha=1)
    rad = jacobson_radical(h).dim
    cert = wedderburn_certificate(h, cd.simples, rad)
    assert cert.ok
    assert cert.profile == [1] * 6 + [2] * 3
    assert 6 * 1 + 3 * 4 == h.dim - rad


def test_wedderburn_gamma20():
    h, cd = build("gamma4p", p=5)
    cert = wedderburn_certificate(h, cd.simples, 0)
    assert cert.ok
    assert cert.profile == [1, 1, 1, 1, 4]
    assert sum(d * d for d in cert.profile) == 20


def test_wedderburn_am11():
    h, cd = build("a-m11", p=3)
    rad = jacobson_radical(h).dim
    cert = wedderburn_certificate(h, cd.simples, rad)
    assert cert.ok
    assert cert.profile == [1, 1, 2, 2]
    assert 2 + 8 == h.dim - rad


def test_wedderburn_rejects_duplicates():
    h, cd = build("h8p", p=3, alpha=1)
    mods = list(cd.simples) + [cd.simples[0]]
    cert = wedderburn_certificate(h, mods, jacobson_radical(h).dim)
    assert not cert.ok


def test_one_dims_match_dual_grouplikes():
    from hopfkit.hopf import Element, dual

    h, cd = build("h8p", p=3, alpha=1)
    d = dual(h)
    one_dims = [m for m in cd.simples if m.dim == 1]
    chars = [Element(d, [m.action[i].entries[0][0] for i in range(h.dim)])
             for m in one_dims]
    assert all(c.is_grouplike() for c in chars)
    assert len({tuple(c.coeffs) for c in chars}) == len(chars) == 6


def test_wedderburn_h8p_p5():
    h, cd = build("h8p", p=5, alpha=1)
    rad = jacobson_radical(h).dim
    assert rad == 10
    cert = wedderburn_certificate(h, cd.simples, rad)
    assert cert.ok
    assert cert.profile == [1] * 10 + [2] * 5
