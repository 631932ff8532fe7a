import itertools

import pytest

from conftest import build
from hopfkit.cyclotomic import CycNumber, root_of_unity
from hopfkit.hopf import tr_s_squared
from hopfkit.linalg import Matrix
from hopfkit.ydnichols import (
    YDDatum,
    bosonize,
    braid_equation_check,
    braiding,
    diagonal_type,
    named_datum,
    nichols_dims,
    q_binomial,
    q_factorial,
    q_int,
    symmetrizer,
    symmetrizer_direct,
    validate_yd_datum,
    verify_yd,
    yd_module_gamma4p,
)


def test_q_integers():
    minus1 = CycNumber.from_rational(1, -1)
    assert q_int(2, minus1).is_zero()
    two = CycNumber.from_rational(1, 2)
    assert q_int(3, CycNumber.one(1)) == 3
    assert q_int(3, two) == 7


def test_q_binomial_against_product_formula():
    for n_root in (3, 4, 5):
        q = root_of_unity(n_root, 1)
        for n in range(6):
            for i in range(n + 1):
                denom = q_factorial(i, q) * q_factorial(n - i, q)
                if denom.is_zero():
                    continue
                assert q_binomial(n, i, q) == q_factorial(n, q) / denom


def test_q_binomial_edges():
    q = root_of_unity(3, 1)
    for n in range(5):
        assert q_binomial(n, 0, q).is_one()
        assert q_binomial(n, n, q).is_one()
    assert q_binomial(2, 1, CycNumber.from_rational(1, -1)).is_zero()


def test_yd_modules_gamma20():
    for spec, rep, dim in [
        (("y", 1), ("psi", 1), 4),
        (("y", 1), ("psi", 0), 4),
        (("x", 1), ("chi", 1), 5),
        (("x", 2), ("chi", 3), 5),
        (("trivial",), ("alpha", 0), 1),
        (("trivial",), ("beta", 1), 4),
    ]:
        m = yd_module_gamma4p(5, spec, rep)
        assert m.dim == dim
        ok, why = verify_yd(m)
        assert ok, (m.label, why)
        c = braiding(m)
        assert braid_equation_check(c, m.dim)


def test_literal_remark_action_fails_yd():
    m = yd_module_gamma4p(5, ("x", 1), ("chi", 1), literal_action=True)
    ok, _ = verify_yd(m)
    assert not ok


def test_diagonal_braiding_formula():
    m = yd_module_gamma4p(5, ("y", 1), ("psi", 1))
    qm = diagonal_type(m)
    assert qm is not None
    z5 = root_of_unity(20, 4)
    for r in range(4):
        for t in range(4):
            assert qm[r][t] == z5 ** pow(2, (r + 4 - t) % 4, 5)


def test_trivial_class_is_flip():
    m = yd_module_gamma4p(5, ("trivial",), ("beta", 1))
    qm = diagonal_type(m)
    assert qm is not None
    assert all(q.is_one() for row in qm for q in row)


def test_braiding_invertible():
    from hopfkit.linalg import rank

    m = yd_module_gamma4p(5, ("x", 1), ("chi", 2))
    c = braiding(m)
    assert rank(c) == m.dim ** 2


def test_named_data_validate():
    for name in ("fun-dic", "a4p-chi2", "a4p-chi3", "c2"):
        d = named_datum(name, 3)
        ok, why = validate_yd_datum(d)
        assert ok, (name, why)


def test_flipped_fun_dic_datum_fails():
    d = named_datum("fun-dic", 3)
    flipped = [CycNumber.one(d.L.conductor)] * d.L.dim
    ok, _ = validate_yd_datum(YDDatum(d.L, d.g, flipped, d.q))
    assert not ok


def test_exactly_two_data_on_a4p():
    """Enumerate all (group-like, character) pairs over the quad family."""
    h, cd = build("a4p", p=3)
    group = cd.extra["group"]
    minus_one = CycNumber.from_rational(h.conductor, -1)
    valid = []
    for g in cd.grouplikes:
        for a_val, s_val in itertools.product((1, -1), repeat=2):
            chi = [CycNumber.from_rational(h.conductor, (a_val ** i) * (s_val ** (2 * k + e)))
                   for (i, k, e) in group.elements]
            d = YDDatum(h, g, chi, minus_one)
            ok, _ = validate_yd_datum(d)
            if ok:
                valid.append((tuple(g.coeffs), a_val, s_val))
    assert len(valid) == 2


def test_no_quantum_line_datum_on_b4p():
    h, cd = build("b4p", p=3)
    group = cd.extra["group"]
    minus_one = CycNumber.from_rational(h.conductor, -1)
    count = 0
    for g in cd.grouplikes:
        for t_val, r_val in itertools.product((1, -1), repeat=2):
            chi = []
            for (k, e) in group.elements:
                chi.append(CycNumber.from_rational(h.conductor, (r_val ** k) * (t_val ** e)))
            ok, _ = validate_yd_datum(YDDatum(h, g, chi, minus_one))
            count += ok
    assert count == 0


def test_bosonize_c2_is_sweedler():
    b = bosonize(named_datum("c2", 3))
    t, _ = build("taft", n=2)
    assert b.same_tensors(t)


def test_bosonize_fun_dic_is_h8p_alpha0():
    b = bosonize(named_datum("fun-dic", 3))
    h0, _ = build("h8p", p=3, alpha=0)
    assert b.same_tensors(h0)
    assert b.dim == 24


def test_bosonize_a4p():
    b = bosonize(named_datum("a4p-chi2", 3))
    assert b.dim == 24
    assert tr_s_squared(b).is_zero()


def test_quantum_line_ranks():
    minus1 = Matrix(1, 1, 2, [[CycNumber.from_rational(2, -1)]])
    rep = nichols_dims(minus1, 1)
    assert rep.ranks == [1, 1, 0] and rep.total_dim == 2
    for n in (2, 3, 4, 6):
        c = Matrix(1, 1, n, [[root_of_unity(n, 1)]])
        rep = nichols_dims(c, 1)
        assert rep.truncated and rep.total_dim == n
    one = Matrix(1, 1, 1, [[CycNumber.one(1)]])
    rep = nichols_dims(one, 1, cutoff=8)
    assert not rep.truncated
    assert rep.ranks == [1] * 9


def test_symmetrizer_matches_direct_enumeration():
    # independence of the reduced-word route, checked at degree 3
    m = yd_module_gamma4p(5, ("y", 1), ("psi", 1))
    c = braiding(m)
    v = m.dim
    for n in (2, 3):
        assert symmetrizer(c, v, n) == symmetrizer_direct(c, v, n)


def test_nichols_rank_one_dim_grows_polynomially():
    m = yd_module_gamma4p(5, ("y", 1), ("psi", 0))
    c = braiding(m)
    rep = nichols_dims(c, 4, cutoff=2)
    # q_ii = 1 everywhere, so no truncation can appear
    assert not rep.truncated
    assert rep.ranks[0] == 1 and rep.ranks[1] == 4


def test_bad_braiding_rejected():
    # a diagonal with distinct entries cannot satisfy the braid equation
    c = Matrix(4, 4, 1)
    for i in range(4):
        c.entries[i][i] = CycNumber.from_rational(1, i + 1)
    with pytest.raises(ValueError):
        nichols_dims(c, 2, cutoff=2)


def test_memory_guard():
    m = yd_module_gamma4p(5, ("x", 1), ("chi", 1))
    c = braiding(m)
    rep = nichols_dims(c, 5, cutoff=4, guard_mb=1)
    assert rep.guard_hit


def test_rank_two_exterior_braiding():
    # diagonal type with q_ii = -1, q_12 q_21 = 1: the symmetrizer ranks are
    # those of the exterior algebra on two generators
    c = Matrix(4, 4, 2)
    minus = CycNumber.from_rational(2, -1)
    one = CycNumber.one(2)
    c.entries[0][0] = minus          # e1 (x) e1
    c.entries[2][1] = one            # e1 (x) e2 -> e2 (x) e1
    c.entries[1][2] = one
    c.entries[3][3] = minus
    rep = nichols_dims(c, 2, cutoff=4)
    assert rep.ranks == [1, 2, 1, 0]
    assert rep.truncated and rep.total_dim == 4
