"""Constructors for every Hopf algebra family in the toolkit.

Each constructor returns (HopfAlgebraData, CandidateData).  The sidecar holds
*claims* only: group-like candidates, simple-module candidates, matrix-block
candidates for the coradical accounting, and expected invariant numbers.  None
of it is trusted; the invariants and repsolver engines re-verify everything
before a certificate is issued.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from .cyclotomic import CycNumber, root_of_unity
from .groups import (
    FiniteGroup,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    gamma4p_group,
    product_of_cyclics,
    quaternion_group,
)
from .hopf import Element, HopfAlgebraData, dual, tensor_product
from .linalg import Matrix
from .presentation import Presentation, group_algebra_hopf, realize_on_group
from .repsolver import RepModule, module_from_gen_mats

HALF = Fraction(1, 2)


@dataclass
class CandidateData:
    """Claimed data for one catalog member; always re-verified downstream."""

    grouplikes: list = dc_field(default_factory=list)   # Elements
    grouplike_labels: list = dc_field(default_factory=list)
    skew_witness: tuple | None = None                   # (g, h, x) with Dx = x(x)g + h(x)x
    simples: list = dc_field(default_factory=list)      # RepModule over H
    dual_blocks: list = dc_field(default_factory=list)  # [m11,m12,m21,m22] Elements
    expected: dict = dc_field(default_factory=dict)
    extra: dict = dc_field(default_factory=dict)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _require_odd_prime(p):
    if not _is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")


# ---------------------------------------------------------------------------
# group algebras and their duals
# ---------------------------------------------------------------------------


def build_group(spec) -> FiniteGroup:
    kind = spec[0]
    if kind == "cyclic":
        return cyclic_group(spec[1])
    if kind == "product":
        return product_of_cyclics(list(spec[1]))
    if kind == "dihedral":
        return dihedral_group(spec[1])
    if kind == "dicyclic":
        return dicyclic_group(spec[1])
    if kind == "q8":
        return quaternion_group()
    if kind == "gamma4p":
        return gamma4p_group(spec[1])
    raise ValueError(f"unknown group family {kind!r}")


def group_algebra(spec, verify=True):
    group = build_group(spec)
    h = group_algebra_hopf(group)
    if verify:
        _must_verify(h, f"group algebra {group.name}")
    simples = [
        RepModule(rep.label, rep.dim, group.irrep_element_matrices(rep))
        for rep in group.irreps
    ]
    grouplikes = [Element.basis(h, i) for i in range(h.dim)]
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=list(group.labels),
        simples=simples,
        dual_blocks=[],
        expected={
            "dim": h.dim,
            "grouplike_count": h.dim,
            "coradical_dim": h.dim,
            "radical_dim": 0,
            "semisimple": True,
            "chevalley": True,
            "simple_profile": sorted(r.dim for r in group.irreps),
            "distinguished_is_unit": True,
        },
        extra={"group": group},
    )
    return h, cd


def dual_group_algebra(spec, verify=True):
    group = build_group(spec)
    kg = group_algebra_hopf(group)
    h = dual(kg)
    if verify:
        _must_verify(h, f"function algebra on {group.name}")
    # group-likes of k^G are the characters of G
    one_dims = [r for r in group.irreps if r.dim == 1]
    grouplikes = []
    for rep in one_dims:
        mats = group.irrep_element_matrices(rep)
        grouplikes.append(Element(h, [m.entries[0][0] for m in mats]))
    # matrix-coefficient blocks of the higher irreps
    blocks = []
    for rep in group.irreps:
        if rep.dim != 2:
            continue
        mats = group.irrep_element_matrices(rep)
        blocks.append([
            Element(h, [m.entries[u][v] for m in mats])
            for u in range(2) for v in range(2)
        ])
    simples = [
        RepModule(f"ev({group.labels[i]})", 1,
                  [Matrix(1, 1, h.conductor,
                          [[CycNumber.one(h.conductor) if j == i else CycNumber.zero(h.conductor)]])
                   for j in range(h.dim)])
        for i in range(h.dim)
    ]
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=[r.label for r in one_dims],
        simples=simples,
        dual_blocks=blocks,
        expected={
            "dim": h.dim,
            "grouplike_count": len(one_dims),
            "coradical_dim": h.dim,
            "radical_dim": 0,
            "semisimple": True,
            "chevalley": True,
            "simple_profile": [1] * h.dim,
        },
        extra={"group": group},
    )
    return h, cd


def _must_verify(h, what):
    from .hopf import verify_hopf

    rep = verify_hopf(h)
    if not rep.ok:
        raise AssertionError(f"{what} fails Hopf axioms: " + "; ".join(rep.failures))


# ---------------------------------------------------------------------------
# Taft algebras
# ---------------------------------------------------------------------------


def taft(n, k=1, verify=True):
    """T_q of dimension n^2, q = zeta_n^k primitive; basis x^j g^i."""
    if n < 2:
        raise ValueError("need n >= 2")
    from math import gcd

    if gcd(k, n) != 1:
        raise ValueError("q selector must give a primitive n-th root")
    conductor = n
    q = root_of_unity(n, k)
    X, G = 0, 1
    monomials = [(X,) * j + (G,) * i for j in range(n) for i in range(n)]
    rules = [
        ((G, X), [(q, (X, G))]),
        ((X,) * n, []),
        ((G,) * n, [(CycNumber.one(n), ())]),
    ]
    pres = Presentation(["x", "g"], conductor, monomials, rules)
    idx = pres.index
    one = CycNumber.one(conductor)

    def unit_at(*word):
        return {idx[tuple(word)]: one}

    g_vec = unit_at(G)
    x_vec = unit_at(X)
    gen_delta = {
        G: _outer(g_vec, g_vec),
        X: _merge(_outer(x_vec, unit_at()), _outer(g_vec, x_vec)),
    }
    gen_eps = {G: one, X: CycNumber.zero(conductor)}
    gen_s = {
        G: pres.normal_form_word((G,) * (n - 1)),
        X: _neg(pres.normal_form_word((G,) * (n - 1) + (X,))),
    }
    h = pres.realize(gen_delta, gen_eps, gen_s, skip_verify=not verify)
    grouplikes = [Element.basis(h, idx[(G,) * i]) for i in range(n)]
    simples = []
    for m in range(n):
        gen_mats = {
            "x": Matrix(1, 1, conductor),
            "g": Matrix(1, 1, conductor, [[root_of_unity(n, m)]]),
        }
        words = [["x"] * j + ["g"] * i for j in range(n) for i in range(n)]
        simples.append(module_from_gen_mats(1, conductor, words, gen_mats, f"chi{m}"))
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=[h.labels[idx[(G,) * i]] for i in range(n)],
        skew_witness=(Element.unit(h), grouplikes[1], Element.basis(h, idx[(X,)])),
        simples=simples,
        expected={
            "dim": n * n,
            "grouplike_count": n,
            "coradical_dim": n,
            "radical_dim": n * n - n,
            "semisimple": False,
            "chevalley": True,
            "simple_profile": [1] * n,
        },
    )
    return h, cd


def _outer(u, v):
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            c = a * b
            if not c.is_zero():
                out[(i, j)] = c
    return out


def _merge(*dicts):
    out = {}
    for d in dicts:
        for k, v in d.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _neg(d):
    return {k: -v for k, v in d.items()}


def _scale(d, c):
    return {k: c * v for k, v in d.items() if not (c * v).is_zero()}


# ---------------------------------------------------------------------------
# the four pointed families of dimension 4p
# ---------------------------------------------------------------------------

POINTED4P_VARIANTS = ("a-m10", "a-m10-dual", "a-m11", "h4xcp")


def pointed4p(variant, p, lam_k=1, verify=True):
    """Pointed 4p-dimensional algebras with group-likes of order 2p."""
    _require_odd_prime(p)
    if variant == "h4xcp":
        return _h4_tensor_kcp(p, verify=verify)
    conductor = 2 * p
    one = CycNumber.one(conductor)
    G, X = 0, 1
    monomials = [(G,) * i + (X,) * e for i in range(2 * p) for e in (0, 1)]
    if variant == "a-m10":
        xx_rule = []
        swap_coeff = -one
        delta_twist = 1  # g (x) x
    elif variant == "a-m10-dual":
        from math import gcd

        if gcd(lam_k, 2 * p) != 1:
            raise ValueError("lambda selector must give a primitive 2p-th root")
        lam = root_of_unity(conductor, lam_k)
        xx_rule = []
        swap_coeff = lam.inverse()
        delta_twist = p  # g^p (x) x
    elif variant == "a-m11":
        xx_rule = [(one, (G, G)), (-one, ())]
        swap_coeff = -one
        delta_twist = 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rules = [
        ((X, G), [(swap_coeff, (G, X))]),
        ((X, X), xx_rule),
        ((G,) * (2 * p), [(one, ())]),
    ]
    pres = Presentation(["g", "x"], conductor, monomials, rules)
    idx = pres.index
    g_vec = {idx[(G,)]: one}
    x_vec = {idx[(X,)]: one}
    twist_vec = {idx[(G,) * delta_twist]: one}
    gen_delta = {
        G: _outer(g_vec, g_vec),
        X: _merge(_outer(x_vec, {idx[()]: one}), _outer(twist_vec, x_vec)),
    }
    gen_eps = {G: one, X: CycNumber.zero(conductor)}
    gen_s = {
        G: {idx[(G,) * (2 * p - 1)]: one},
        X: _neg(pres.normal_form_word((G,) * (2 * p - delta_twist) + (X,))),
    }
    h = pres.realize(gen_delta, gen_eps, gen_s, skip_verify=not verify)
    grouplikes = [Element.basis(h, idx[(G,) * i]) for i in range(2 * p)]
    words = [["g"] * i + ["x"] * e for i in range(2 * p) for e in (0, 1)]
    simples = _pointed4p_simples(variant, p, conductor, words)
    # machine-verified via the right-integral formula (lam = x*, so
    # a = lam(x_2) x_1 lands on the Delta-twist group-like of x)
    dist = {"a-m10": 1, "a-m10-dual": p, "a-m11": 1}[variant]
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=[h.labels[idx[(G,) * i]] for i in range(2 * p)],
        skew_witness=(Element.unit(h), Element.basis(h, idx[(G,) * delta_twist]),
                      Element.basis(h, idx[(X,)])),
        simples=simples,
        expected={
            "dim": 4 * p,
            "grouplike_count": 2 * p,
            "coradical_dim": 2 * p,
            # the variant with x^2 = g^2 - 1 is not basic: its radical is the
            # complement of 2 lines + (p-1) matrix blocks, hence dimension 2
            "radical_dim": 2 if variant == "a-m11" else 2 * p,
            "semisimple": False,
            "chevalley": True,
            "simple_profile": sorted(m.dim for m in simples),
            "s4_is_id": True,
            "distinguished_grouplike": dist,  # index into grouplikes = power of g
        },
    )
    return h, cd


def _pointed4p_simples(variant, p, conductor, words):
    zero1 = Matrix(1, 1, conductor)
    simples = []
    if variant in ("a-m10", "a-m10-dual"):
        for m in range(2 * p):
            gm = Matrix(1, 1, conductor, [[root_of_unity(conductor, m)]])
            simples.append(module_from_gen_mats(1, conductor, words, {"g": gm, "x": zero1}, f"chi{m}"))
        return simples
    # a-m11: two characters (g -> +-1 with g^2 = 1 forced by x^2 = g^2 - 1)
    for s, lab in ((0, "triv"), (p, "sgn")):
        gm = Matrix(1, 1, conductor, [[root_of_unity(conductor, s)]])
        simples.append(module_from_gen_mats(1, conductor, words, {"g": gm, "x": zero1}, lab))
    one = CycNumber.one(conductor)
    for k in range(1, p):
        mu = root_of_unity(conductor, k)
        gm = Matrix(2, 2, conductor)
        gm.entries[0][0] = mu
        gm.entries[1][1] = -mu
        xm = Matrix(2, 2, conductor)
        xm.entries[0][1] = mu * mu - one
        xm.entries[1][0] = one
        simples.append(module_from_gen_mats(2, conductor, words, {"g": gm, "x": xm}, f"V{k}"))
    return simples


def _h4_tensor_kcp(p, verify=True):
    t, tcd = taft(2, verify=verify)
    c, _ = group_algebra(("cyclic", p), verify=verify)
    h = tensor_product(t, c)
    if verify:
        _must_verify(h, "H4 tensor kC_p")
    # tensor basis index (taft i, cyclic a) -> i*p + a; taft grouplikes at 0, 1
    grouplikes = []
    labels = []
    for i in (0, 1):
        for a in range(p):
            grouplikes.append(Element.basis(h, i * p + a))
            labels.append(h.labels[i * p + a])
    conductor = h.conductor
    zero1 = Matrix(1, 1, conductor)
    # taft2 basis order is x^j g^i, so tensor index order is ((j,i),a)
    words = []
    for j in (0, 1):
        for i in (0, 1):
            for a in range(p):
                words.append(["x"] * j + ["h"] * i + ["c"] * a)
    simples = []
    for s in (0, 1):
        for m in range(p):
            mats = {
                "x": zero1,
                "h": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, (-1) ** s)]]),
                "c": Matrix(1, 1, conductor, [[root_of_unity(conductor, m * (conductor // p))]]),
            }
            simples.append(module_from_gen_mats(1, conductor, words, mats, f"chi({s},{m})"))
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=labels,
        skew_witness=(Element.unit(h), Element.basis(h, 1 * p), Element.basis(h, 2 * p)),
        simples=simples,
        expected={
            "dim": 4 * p,
            "grouplike_count": 2 * p,
            "coradical_dim": 2 * p,
            "radical_dim": 2 * p,
            "semisimple": False,
            "chevalley": True,
            "simple_profile": [1] * (2 * p),
            "s4_is_id": True,
            "distinguished_grouplike": p,  # index of h (x) 1 in the grouplike list
        },
    )
    return h, cd


# ---------------------------------------------------------------------------
# the semisimple twisted families on dihedral-type groups
# ---------------------------------------------------------------------------


def _c2xdp_group(p):
    """C_2 x D_p with letters a, s+, s-; elements a^i (s+s-)^k s+^e."""
    elements = [(i, k, e) for i in (0, 1) for k in range(p) for e in (0, 1)]

    def label(t):
        i, k, e = t
        parts = []
        if i:
            parts.append("a")
        if k:
            parts.append(f"r^{k}" if k > 1 else "r")
        if e:
            parts.append("s")
        return "*".join(parts) if parts else "1"

    def mult(g, h):
        i, k, e = g
        i2, k2, e2 = h
        return ((i + i2) % 2, (k + (k2 if e == 0 else -k2)) % p, (e + e2) % 2)

    return FiniteGroup(
        name=f"C2xD{p}",
        elements=elements,
        labels=[label(t) for t in elements],
        mult_fn=mult,
        identity=(0, 0, 0),
        generators={"a": (1, 0, 0), "s+": (0, 0, 1), "s-": (0, (p - 1) % p, 1)},
        word_fn=lambda t: ["a"] * t[0] + ["s+", "s-"] * t[1] + ["s+"] * t[2],
        conductor=4 * p,
    )


def _d2p_group(n_half_order):
    """D_m for m = n_half_order: r^m = t^2 = 1; letters s+ = t, s- = t r."""
    m = n_half_order
    elements = [(k, e) for k in range(m) for e in (0, 1)]

    def label(t):
        k, e = t
        parts = []
        if k:
            parts.append(f"r^{k}" if k > 1 else "r")
        if e:
            parts.append("s")
        return "*".join(parts) if parts else "1"

    def mult(g, h):
        k, e = g
        k2, e2 = h
        return ((k + (k2 if e == 0 else -k2)) % m, (e + e2) % 2)

    return FiniteGroup(
        name=f"D{m}",
        elements=elements,
        labels=[label(t) for t in elements],
        mult_fn=mult,
        identity=(0, 0),
        generators={"s+": (0, 1), "s-": ((m - 1) % m, 1)},
        word_fn=lambda t: ["s+", "s-"] * t[0] + ["s+"] * t[1],
        conductor=lcm(4, m),
    )


def _twisted_quad_images(group, conductor, a_elem):
    """Coalgebra images shared by the twisted families built on a, s+, s-."""
    one = CycNumber.one(conductor)
    half = CycNumber.from_rational(conductor, HALF)
    idx = group.index
    splus = group.generators["s+"]
    sminus = group.generators["s-"]

    def e_times(bit, elem):
        # e_bit * elem as a sparse vector; a is central in all these groups
        sign = one if bit == 0 else -one
        return {idx[elem]: half, idx[group.mult(a_elem, elem)]: sign * half}

    gen_delta = {}
    gen_s = {}
    for name, this, that in (("s+", splus, sminus), ("s-", sminus, splus)):
        gen_delta[name] = _merge(
            _outer({idx[this]: one}, e_times(0, this)),
            _outer({idx[that]: one}, e_times(1, this)),
        )
        gen_s[name] = _merge(e_times(0, this), e_times(1, that))
    a_vec = {idx[a_elem]: one}
    gen_delta["a"] = _outer(a_vec, a_vec)
    gen_s["a"] = dict(a_vec)
    gen_eps = {"a": one, "s+": one, "s-": one}
    return gen_delta, gen_eps, gen_s


def _idempotent_twisted_grouplike(h, idx_w, idx_aw, sign):
    """(e_0 + sign*sqrt(-1)*e_1) * w as an Element."""
    conductor = h.conductor
    half = CycNumber.from_rational(conductor, HALF)
    im = root_of_unity(conductor, conductor // 4)
    coeffs = [h.zero()] * h.dim
    coeffs[idx_w] = half + sign * im * half
    coeffs[idx_aw] = half - sign * im * half
    return Element(h, coeffs)


def a4p(p, verify=True):
    """Semisimple self-dual family on C_2 x D_p; (s+s-)^p = 1."""
    _require_odd_prime(p)
    group = _c2xdp_group(p)
    conductor = 4 * p
    gen_delta, gen_eps, gen_s = _twisted_quad_images(group, conductor, (1, 0, 0))
    h = realize_on_group(group, conductor, gen_delta, gen_eps, gen_s, skip_verify=not verify)
    idx = group.index
    k0 = (p - 1) // 2
    w = (0, k0, 1)  # s_+(p), the middle reflection
    grouplikes = [
        Element.unit(h),
        Element.basis(h, idx[(1, 0, 0)]),
        Element.basis(h, idx[w]),
        Element.basis(h, idx[(1, k0, 1)]),
    ]
    simples = _quad_family_simples_c2xdp(group, p, conductor)
    blocks = _quad_family_blocks(h, idx_of=lambda k, e: idx[(0, k % p, e)],
                                 a_of=lambda k, e: idx[(1, k % p, e)],
                                 rot_pairs=[(k, p - k) for k in range(1, (p + 1) // 2)],
                                 refl_pairs=[(k, (p - 1 - k) % p) for k in range(0, (p - 1) // 2)])
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=["1", "a", "s+(p)", "a*s+(p)"],
        simples=simples,
        dual_blocks=blocks,
        expected={
            "dim": 4 * p,
            "grouplike_count": 4,
            "grouplike_orders": [1, 2, 2, 2],
            "coradical_dim": 4 * p,
            "radical_dim": 0,
            "semisimple": True,
            "chevalley": True,
            "simple_profile": sorted(m.dim for m in simples),
        },
        extra={"group": group},
    )
    return h, cd


def b4p(p, verify=True):
    """Semisimple self-dual family on D_2p; (s+s-)^p = a."""
    _require_odd_prime(p)
    group = _d2p_group(2 * p)
    conductor = 4 * p
    a_elem = (p, 0)
    gen_delta, gen_eps, gen_s = _twisted_quad_images(group, conductor, a_elem)
    h = realize_on_group(group, conductor, gen_delta, gen_eps, gen_s, skip_verify=not verify)
    idx = group.index
    k0 = (p - 1) // 2
    grouplikes = [
        Element.unit(h),
        Element.basis(h, idx[a_elem]),
        _idempotent_twisted_grouplike(h, idx[(k0, 1)], idx[(k0 + p, 1)], +1),
        _idempotent_twisted_grouplike(h, idx[(k0, 1)], idx[(k0 + p, 1)], -1),
    ]
    simples = _quad_family_simples_d2p(group, 2 * p, conductor)
    blocks = _quad_family_blocks(h, idx_of=lambda k, e: idx[(k % (2 * p), e)],
                                 a_of=lambda k, e: idx[((k + p) % (2 * p), e)],
                                 rot_pairs=[(k, 2 * p - k) for k in range(1, (p + 1) // 2)],
                                 refl_pairs=[(k, (-k - 1) % (2 * p)) for k in range(0, (p - 1) // 2)])
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=["1", "a", "gamma+", "gamma-"],
        simples=simples,
        dual_blocks=blocks,
        expected={
            "dim": 4 * p,
            "grouplike_count": 4,
            "grouplike_orders": [1, 2, 4, 4],
            "coradical_dim": 4 * p,
            "radical_dim": 0,
            "semisimple": True,
            "chevalley": True,
            "simple_profile": sorted(m.dim for m in simples),
        },
        extra={"group": group},
    )
    return h, cd


def b8(verify=True):
    """The 8-dimensional Kac-Paljutkin algebra: D_4 with (s+s-)^2 = a."""
    group = _d2p_group(4)
    conductor = 4
    a_elem = (2, 0)
    gen_delta, gen_eps, gen_s = _twisted_quad_images(group, conductor, a_elem)
    h = realize_on_group(group, conductor, gen_delta, gen_eps, gen_s, skip_verify=not verify)
    idx = group.index
    grouplikes = [
        Element.unit(h),
        Element.basis(h, idx[a_elem]),
        _idempotent_twisted_grouplike(h, idx[(1, 0)], idx[(3, 0)], +1),
        _idempotent_twisted_grouplike(h, idx[(1, 0)], idx[(3, 0)], -1),
    ]
    simples = _quad_family_simples_d2p(group, 4, conductor)
    blocks = _quad_family_blocks(h, idx_of=lambda k, e: idx[(k % 4, e)],
                                 a_of=lambda k, e: idx[((k + 2) % 4, e)],
                                 rot_pairs=[],
                                 refl_pairs=[(0, 3)])
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=["1", "a", "gamma+", "gamma-"],
        simples=simples,
        dual_blocks=blocks,
        expected={
            "dim": 8,
            "grouplike_count": 4,
            "grouplike_orders": [1, 2, 2, 2],
            "coradical_dim": 8,
            "radical_dim": 0,
            "semisimple": True,
            "chevalley": True,
            "simple_profile": [1, 1, 1, 1, 2],
        },
        extra={"group": group},
    )
    return h, cd


def _quad_family_simples_c2xdp(group, p, conductor):
    words = [group.word(g) for g in group.elements]
    simples = []
    for alpha in (1, -1):
        for tau in (1, -1):
            mats = {
                "a": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, alpha)]]),
                "s+": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, tau)]]),
                "s-": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, tau)]]),
            }
            simples.append(module_from_gen_mats(1, conductor, words, mats, f"chi(a={alpha},s={tau})"))
    flip = Matrix(2, 2, conductor, [[CycNumber.zero(conductor), CycNumber.one(conductor)],
                                    [CycNumber.one(conductor), CycNumber.zero(conductor)]])
    for alpha in (1, -1):
        amat = Matrix.identity(2, conductor).scale(CycNumber.from_rational(conductor, alpha))
        for m in range(1, (p + 1) // 2):
            zp = root_of_unity(conductor, 4 * m)        # zeta_p^m
            zpin = root_of_unity(conductor, 4 * (p - m))
            sminus = Matrix(2, 2, conductor)
            sminus.entries[0][1] = zpin
            sminus.entries[1][0] = zp
            mats = {"a": amat, "s+": flip, "s-": sminus}
            simples.append(module_from_gen_mats(2, conductor, words, mats, f"rho(a={alpha},m={m})"))
    return simples


def _quad_family_simples_d2p(group, m_order, conductor):
    words = [group.word(g) for g in group.elements]
    step = conductor // m_order
    simples = []
    for rho in (1, -1):
        for tau in (1, -1):
            mats = {
                "s+": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, tau)]]),
                "s-": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, tau * rho)]]),
            }
            simples.append(module_from_gen_mats(1, conductor, words, mats, f"chi(r={rho},t={tau})"))
    flip = Matrix(2, 2, conductor, [[CycNumber.zero(conductor), CycNumber.one(conductor)],
                                    [CycNumber.one(conductor), CycNumber.zero(conductor)]])
    for m in range(1, m_order // 2):
        z = root_of_unity(conductor, step * m)
        zin = root_of_unity(conductor, step * (m_order - m))
        sminus = Matrix(2, 2, conductor)
        sminus.entries[0][1] = zin
        sminus.entries[1][0] = z
        simples.append(module_from_gen_mats(2, conductor, words, {"s+": flip, "s-": sminus}, f"rho{m}"))
    return simples


def _quad_family_blocks(h, idx_of, a_of, rot_pairs, refl_pairs):
    """Matrix-coalgebra candidates [[e0 u, e1 v],[e1 u, e0 v]] on rotation and
    reflection pairs (u, v) = (r^k t^e, r^k' t^e)."""
    half = CycNumber.from_rational(h.conductor, HALF)

    def e_vec(bit, i_plain, i_a):
        coeffs = [h.zero()] * h.dim
        coeffs[i_plain] = half
        coeffs[i_a] = half if bit == 0 else -half
        return Element(h, coeffs)

    blocks = []
    for e, pairs in ((0, rot_pairs), (1, refl_pairs)):
        for k, k2 in pairs:
            u, ua = idx_of(k, e), a_of(k, e)
            v, va = idx_of(k2, e), a_of(k2, e)
            blocks.append([
                e_vec(0, u, ua), e_vec(1, v, va),
                e_vec(1, u, ua), e_vec(0, v, va),
            ])
    return blocks


# ---------------------------------------------------------------------------
# the function algebra on the dicyclic group, presented by a and x
# ---------------------------------------------------------------------------


def _fun_dic_presentation(p):
    conductor = 4 * p
    one = CycNumber.one(conductor)
    A, X = 0, 1
    monomials = [(A,) * i + (X,) * j for i in (0, 1) for j in range(2 * p)]
    rules = [
        ((A, A), [(one, ())]),
        ((X, A), [(one, (A, X))]),
        ((X,) * (2 * p), [(one, ())]),
    ]
    return Presentation(["a", "x"], conductor, monomials, rules)


def _fun_dic_images(pres, p):
    conductor = pres.conductor
    one = CycNumber.one(conductor)
    idx = pres.index
    A, X = 0, 1
    half = CycNumber.from_rational(conductor, HALF)
    a_vec = {idx[(A,)]: one}
    x_vec = {idx[(X,)]: one}

    def e_times_x_power(bit, j):
        j %= 2 * p
        sign = one if bit == 0 else -one
        return {idx[(X,) * j]: half, idx[(A,) + (X,) * j]: sign * half}

    gen_delta = {
        A: _outer(a_vec, a_vec),
        X: _merge(
            _outer(x_vec, e_times_x_power(0, 1)),
            _outer({idx[(A,) + (X,) * (2 * p - 1)]: one}, e_times_x_power(1, 1)),
        ),
    }
    gen_eps = {A: one, X: one}
    # the minus sign on the e_1 part is forced by m(S (x) id)Delta = u eps
    gen_s = {A: dict(a_vec),
             X: _merge(e_times_x_power(0, 2 * p - 1), _neg(e_times_x_power(1, 1)))}
    return gen_delta, gen_eps, gen_s


def _dic_fun_grouplikes(h, p, x_pow_index):
    """1, g, a, a*g with g = (e0 + sqrt(-1) e1) x^p."""
    conductor = h.conductor
    half = CycNumber.from_rational(conductor, HALF)
    im = root_of_unity(conductor, p)  # zeta_{4p}^p = sqrt(-1)
    idx_xp = x_pow_index(0, p)
    idx_axp = x_pow_index(1, p)
    g = [h.zero()] * h.dim
    g[idx_xp] = half + im * half
    g[idx_axp] = half - im * half
    g3 = [h.zero()] * h.dim
    g3[idx_xp] = half - im * half
    g3[idx_axp] = half + im * half
    a = [h.zero()] * h.dim
    a[x_pow_index(1, 0)] = h.one()
    return [Element.unit(h), Element(h, g), Element(h, a), Element(h, g3)]


def _dic_fun_blocks(h, p, x_pow_index):
    conductor = h.conductor
    half = CycNumber.from_rational(conductor, HALF)

    def e_vec(bit, j, sign=1):
        j %= 2 * p
        coeffs = [h.zero()] * h.dim
        s = CycNumber.from_rational(conductor, sign)
        coeffs[x_pow_index(0, j)] = s * half
        coeffs[x_pow_index(1, j)] = s * half if bit == 0 else -(s * half)
        return Element(h, coeffs)

    blocks = []
    for j in range(1, p):
        blocks.append([
            e_vec(0, j), e_vec(1, -j, (-1) ** j),
            e_vec(1, j), e_vec(0, -j),
        ])
    return blocks


def fun_dic(p, verify=True):
    """The commutative function algebra on the dicyclic group of order 4p."""
    _require_odd_prime(p)
    pres = _fun_dic_presentation(p)
    gen_delta, gen_eps, gen_s = _fun_dic_images(pres, p)
    h = pres.realize(gen_delta, gen_eps, gen_s, skip_verify=not verify)
    conductor = pres.conductor
    idx = pres.index
    A, X = 0, 1

    def x_pow_index(i, j):
        return idx[(A,) * i + (X,) * (j % (2 * p))]

    grouplikes = _dic_fun_grouplikes(h, p, x_pow_index)
    words = [["a"] * i + ["x"] * j for i in (0, 1) for j in range(2 * p)]
    xi = root_of_unity(conductor, 2)  # zeta_{2p}
    simples = []
    for i in (0, 1):
        for j in range(2 * p):
            mats = {
                "a": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, (-1) ** i)]]),
                "x": Matrix(1, 1, conductor, [[xi ** j]]),
            }
            simples.append(module_from_gen_mats(1, conductor, words, mats, f"V({i},{j})"))
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=["1", "g", "a", "a*g"],
        simples=simples,
        dual_blocks=_dic_fun_blocks(h, p, x_pow_index),
        expected={
            "dim": 4 * p,
            "grouplike_count": 4,
            "grouplike_orders": [1, 2, 4, 4],
            "coradical_dim": 4 * p,
            "radical_dim": 0,
            "semisimple": True,
            "chevalley": True,
            "commutative": True,
            "simple_profile": [1] * (4 * p),
        },
    )
    return h, cd


# ---------------------------------------------------------------------------
# the nonsemisimple, nonpointed, nonbasic family of dimension 8p
# ---------------------------------------------------------------------------


def h8p(p, alpha=1, verify=True):
    """Dimension 8p: the function algebra on Dic_p extended by z, z^2 = alpha(a-1).

    Basis ordered z^e a^i x^j (z-major), which makes the alpha = 0 member
    literally equal to the quantum-line bosonization over fun_dic(p).
    """
    _require_odd_prime(p)
    if alpha not in (0, 1):
        raise ValueError("alpha is normalized to 0 or 1")
    conductor = 4 * p
    one = CycNumber.one(conductor)
    Z, A, X = 0, 1, 2
    monomials = [(Z,) * e + (A,) * i + (X,) * j
                 for e in (0, 1) for i in (0, 1) for j in range(2 * p)]
    zz_rule = [] if alpha == 0 else [(one, (A,)), (-one, ())]
    rules = [
        ((A, A), [(one, ())]),
        ((X,) * (2 * p), [(one, ())]),
        ((A, Z), [(one, (Z, A))]),
        ((X, Z), [(-one, (Z, X))]),
        ((X, A), [(one, (A, X))]),
        ((Z, Z), zz_rule),
    ]
    pres = Presentation(["z", "a", "x"], conductor, monomials, rules)
    idx = pres.index

    def x_pow_index(i, j):
        return idx[(A,) * i + (X,) * (j % (2 * p))]

    half = CycNumber.from_rational(conductor, HALF)
    im = root_of_unity(conductor, p)
    a_vec = {idx[(A,)]: one}
    x_vec = {idx[(X,)]: one}
    z_vec = {idx[(Z,)]: one}
    g_vec = {x_pow_index(0, p): half + im * half, x_pow_index(1, p): half - im * half}
    g3_vec = {x_pow_index(0, p): half - im * half, x_pow_index(1, p): half + im * half}

    def e_times_x_power(bit, j):
        j %= 2 * p
        sign = one if bit == 0 else -one
        return {x_pow_index(0, j): half, x_pow_index(1, j): sign * half}

    gen_delta = {
        A: _outer(a_vec, a_vec),
        X: _merge(
            _outer(x_vec, e_times_x_power(0, 1)),
            _outer({x_pow_index(1, 2 * p - 1): one}, e_times_x_power(1, 1)),
        ),
        Z: _merge(_outer(g_vec, z_vec), _outer(z_vec, {idx[()]: one})),
    }
    gen_eps = {A: one, X: one, Z: CycNumber.zero(conductor)}
    # S(z) = -g^{-1} z = -g^3 z, and z anticommutes with g^3, so S(z) = z g^3
    s_z: dict[int, CycNumber] = {}
    for k, c in g3_vec.items():
        word = (Z,) + pres.normal_monomials[k]
        for kk, cc in pres.normal_form_word(word).items():
            s_z[kk] = s_z.get(kk, CycNumber.zero(conductor)) + c * cc
    gen_s = {
        A: dict(a_vec),
        X: _merge(e_times_x_power(0, 2 * p - 1), _neg(e_times_x_power(1, 1))),
        Z: {k: v for k, v in s_z.items() if not v.is_zero()},
    }
    h = pres.realize(gen_delta, gen_eps, gen_s, skip_verify=not verify)

    grouplikes = _dic_fun_grouplikes(h, p, x_pow_index)
    words = [["z"] * e + ["a"] * i + ["x"] * j
             for e in (0, 1) for i in (0, 1) for j in range(2 * p)]
    xi = root_of_unity(conductor, 2)
    simples = []
    extra = {}
    zero1 = Matrix(1, 1, conductor)
    if alpha == 1:
        for j in range(2 * p):
            mats = {
                "z": zero1,
                "a": Matrix(1, 1, conductor, [[one]]),
                "x": Matrix(1, 1, conductor, [[xi ** j]]),
            }
            simples.append(module_from_gen_mats(1, conductor, words, mats, f"W{j}"))
        u_all = []
        for i in range(2 * p):
            amat = Matrix.identity(2, conductor).scale(-one)
            xmat = Matrix(2, 2, conductor)
            xmat.entries[0][0] = xi ** i
            xmat.entries[1][1] = -(xi ** i)
            zmat = Matrix(2, 2, conductor)
            zmat.entries[0][1] = CycNumber.from_rational(conductor, -2)
            zmat.entries[1][0] = one
            mod = module_from_gen_mats(2, conductor, words,
                                       {"z": zmat, "a": amat, "x": xmat}, f"U{i}")
            u_all.append(mod)
            if i < p:
                simples.append(mod)
        extra["u_all"] = u_all
        radical_dim = 2 * p
        profile = [1] * (2 * p) + [2] * p
        dual_gl = 2 * p
        dual_corad = 6 * p
    else:
        # the unlifted biproduct: z generates a square-zero ideal of dim 4p,
        # so the simples are exactly the characters of the coradical
        for i in (0, 1):
            for j in range(2 * p):
                mats = {
                    "z": zero1,
                    "a": Matrix(1, 1, conductor, [[CycNumber.from_rational(conductor, (-1) ** i)]]),
                    "x": Matrix(1, 1, conductor, [[xi ** j]]),
                }
                simples.append(module_from_gen_mats(1, conductor, words, mats, f"V({i},{j})"))
        radical_dim = 4 * p
        profile = [1] * (4 * p)
        dual_gl = 4 * p
        dual_corad = 4 * p
    cd = CandidateData(
        grouplikes=grouplikes,
        grouplike_labels=["1", "g", "a", "a*g"],
        skew_witness=(Element.unit(h), grouplikes[1], Element.basis(h, idx[(Z,)])),
        simples=simples,
        dual_blocks=_dic_fun_blocks(h, p, x_pow_index),
        expected={
            "dim": 8 * p,
            "grouplike_count": 4,
            "grouplike_orders": [1, 2, 4, 4],
            "coradical_dim": 4 * p,
            "radical_dim": radical_dim,
            "semisimple": False,
            "chevalley": True,
            "simple_profile": profile,
            "dual_grouplike_count": dual_gl,
            "dual_coradical_dim": dual_corad,
            "coradical_span_indices": list(range(4 * p)),
        },
        extra=extra,
    )
    return h, cd


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


def _group_spec_from_params(params):
    kind = params.get("group", "cyclic")
    if kind == "cyclic":
        return ("cyclic", int(params["n"]))
    if kind == "product":
        ns = [int(x) for x in str(params["ns"]).split(",")]
        return ("product", tuple(ns))
    if kind in ("dihedral", "dicyclic"):
        return (kind, int(params["n"]))
    if kind == "q8":
        return ("q8",)
    if kind == "gamma4p":
        return ("gamma4p", int(params["p"]))
    raise ValueError(f"unknown group kind {kind!r}")


def build_family(name, params, verify=True):
    """CLI entry: family name + parameter dict -> (HopfAlgebraData, CandidateData)."""
    if name == "c_n":
        return group_algebra(("cyclic", int(params["n"])), verify=verify)
    if name == "product":
        ns = [int(x) for x in str(params["ns"]).split(",")]
        return group_algebra(("product", tuple(ns)), verify=verify)
    if name == "dihedral":
        return group_algebra(("dihedral", int(params["n"])), verify=verify)
    if name == "dicyclic":
        return group_algebra(("dicyclic", int(params["n"])), verify=verify)
    if name == "q8":
        return group_algebra(("q8",), verify=verify)
    if name == "gamma4p":
        return group_algebra(("gamma4p", int(params["p"])), verify=verify)
    if name == "dual-group":
        return dual_group_algebra(_group_spec_from_params(params), verify=verify)
    if name == "taft":
        return taft(int(params["n"]), int(params.get("q_power", 1)), verify=verify)
    if name in POINTED4P_VARIANTS:
        return pointed4p(name, int(params["p"]), int(params.get("lambda_power", 1)), verify=verify)
    if name == "a4p":
        return a4p(int(params["p"]), verify=verify)
    if name == "b4p":
        return b4p(int(params["p"]), verify=verify)
    if name == "b8":
        return b8(verify=verify)
    if name == "fun-dic":
        return fun_dic(int(params["p"]), verify=verify)
    if name == "h8p":
        return h8p(int(params["p"]), int(params.get("alpha", 1)), verify=verify)
    raise ValueError(f"unknown family {name!r}")


FAMILY_NAMES = [
    "c_n", "product", "dihedral", "dicyclic", "q8", "gamma4p", "dual-group",
    "taft", "a-m10", "a-m10-dual", "a-m11", "h4xcp", "a4p", "b4p", "b8",
    "fun-dic", "h8p",
]
