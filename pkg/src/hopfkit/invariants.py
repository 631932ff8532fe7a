"""Certified invariants: radical, coradical filtration, group-likes,
skew-primitives, integrals, distinguished group-like, Chevalley property,
coinvariants.

Group-likes are never enumerated from scratch (that is a polynomial system);
candidates come from the catalog sidecar and completeness is certified by
matching the coradical dimension against the verified simple modules of the
dual algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycNumber
from .hopf import Element, HopfAlgebraData, dual, is_semisimple, tr_s_squared
from .linalg import EchelonBasis, Matrix, Subspace, bilinear_closure, nullspace
from .repsolver import RepModule, wedderburn_certificate


# ---------------------------------------------------------------------------
# radical and coradical
# ---------------------------------------------------------------------------


def jacobson_radical(h: HopfAlgebraData) -> Subspace:
    """Radical of the regular-representation trace form (characteristic zero).

    The result is post-verified to be a nilpotent two-sided ideal rather than
    trusting the trace-form theorem blindly.
    """
    n = h.dim
    # sparse left-multiplication tables: L[i] as list of (row, col, coeff)
    sparse = []
    for i in range(n):
        entries = []
        for j in range(n):
            for k, c in h.mult[i][j].items():
                entries.append((k, j, c))
        sparse.append(entries)
    lookup = [dict(((r, c), v) for r, c, v in ent) for ent in sparse]
    gram = Matrix(n, n, h.conductor)
    for i in range(n):
        for j in range(i, n):
            t = h.zero()
            lj = lookup[j]
            for (a, b, c) in sparse[i]:
                other = lj.get((b, a))
                if other is not None:
                    t = t + c * other
            gram.entries[i][j] = t
            gram.entries[j][i] = t
    rad = nullspace(gram)
    _post_verify_radical(h, rad)
    return rad


def _post_verify_radical(h: HopfAlgebraData, rad: Subspace):
    basis = rad.basis()
    for v in basis:
        vd = _vec_to_dict(v)
        for i in range(h.dim):
            left = h.mult_dict(h.basis_dict(i), vd)
            right = h.mult_dict(vd, h.basis_dict(i))
            if not rad.contains(_dict_to_vec(h, left)) or not rad.contains(_dict_to_vec(h, right)):
                raise AssertionError("trace-form radical is not an ideal (arithmetic bug)")
    power = rad
    for _ in range(h.dim + 1):
        if power.dim == 0:
            return
        power = _product_space(h, power, rad)
    raise AssertionError("trace-form radical is not nilpotent (arithmetic bug)")


def _vec_to_dict(v):
    return {i: c for i, c in enumerate(v) if not c.is_zero()}


def _dict_to_vec(h, d):
    out = [h.zero()] * h.dim
    for i, c in d.items():
        out[i] = c
    return out


def _product_space(h: HopfAlgebraData, u: Subspace, v: Subspace) -> Subspace:
    eb = EchelonBasis(h.dim, h.conductor)
    vds = [_vec_to_dict(x) for x in v.basis()]
    for a in u.basis():
        ad = _vec_to_dict(a)
        for bd in vds:
            eb.add(_dict_to_vec(h, h.mult_dict(ad, bd)))
    return Subspace(h.dim, h.conductor, eb)


def coradical(h: HopfAlgebraData, dual_h: HopfAlgebraData | None = None) -> Subspace:
    """Annihilator of the Jacobson radical of the dual algebra."""
    dual_h = dual_h or dual(h)
    jd = jacobson_radical(dual_h)
    return _annihilator(h, jd)


def _annihilator(h: HopfAlgebraData, functional_space: Subspace) -> Subspace:
    rows = functional_space.basis()
    if not rows:
        return Subspace.full(h.dim, h.conductor)
    m = Matrix(len(rows), h.dim, h.conductor, rows)
    return nullspace(m)


def coradical_filtration(h: HopfAlgebraData, dual_h: HopfAlgebraData | None = None) -> list[Subspace]:
    """H_n = (J(H*)^(n+1))-perp, ascending until it reaches H."""
    dual_h = dual_h or dual(h)
    j = jacobson_radical(dual_h)
    out = []
    power = j
    while True:
        layer = _annihilator(h, power)
        out.append(layer)
        if layer.dim == h.dim:
            return out
        power = _product_space(dual_h, power, j)


def chevalley_check(h: HopfAlgebraData, h0: Subspace | None = None):
    """True iff the coradical is a Hopf subalgebra; returns (flag, witness)."""
    h0 = h0 if h0 is not None else coradical(h)
    if not h0.contains(h.unit):
        return False, "coradical does not contain 1"
    closed = bilinear_closure(
        h0, lambda u, v: _dict_to_vec(h, h.mult_dict(_vec_to_dict(u), _vec_to_dict(v))))
    if closed.dim != h0.dim:
        return False, f"coradical not closed under product (closure dim {closed.dim})"
    for v in h0.basis():
        if not h0.contains(h.antipode.apply(v)):
            return False, "coradical not closed under the antipode"
    return True, "coradical contains 1, closed under product and antipode"


# ---------------------------------------------------------------------------
# group-like certification
# ---------------------------------------------------------------------------


@dataclass
class GrouplikeCertificate:
    ok: bool
    count: int = 0
    orders: list = field(default_factory=list)
    coradical_dim: int = 0
    block_dims: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def grouplike_module(h: HopfAlgebraData, g: Element) -> RepModule:
    """The 1-dimensional module of the dual algebra carried by a group-like."""
    mats = [Matrix(1, 1, h.conductor, [[c]]) for c in g.coeffs]
    return RepModule("k_g", 1, mats)


def module_matrix_coefficients(dual_h: HopfAlgebraData, module: RepModule) -> list:
    """Matrix-coefficient functionals of a module, as elements of the dual.

    Returns [c_00, c_01, ..., c_dd] row-major; these span a simple
    subcoalgebra of dual_h exactly when the module is simple.
    """
    out = []
    for u in range(module.dim):
        for v in range(module.dim):
            out.append(Element(dual_h, [a.entries[u][v] for a in module.action]))
    return out


def dual_module_from_block(h: HopfAlgebraData, block: list) -> RepModule:
    """2x2 matrix-coalgebra candidate -> module over dual(h).

    block = [m11, m12, m21, m22] with expected Delta(m_uv) = sum m_uw (x) m_wv;
    the module axioms verified downstream are equivalent to that identity.
    """
    mats = []
    for i in range(h.dim):
        m = Matrix(2, 2, h.conductor)
        for u in range(2):
            for v in range(2):
                m.entries[u][v] = block[2 * u + v].coeffs[i]
        mats.append(m)
    return RepModule("block", 2, mats)


def verify_grouplikes(h: HopfAlgebraData, candidates, dual_blocks,
                      dual_h: HopfAlgebraData | None = None,
                      coradical_dim: int | None = None) -> GrouplikeCertificate:
    failures = []
    for idx, g in enumerate(candidates):
        if not g.is_grouplike():
            return GrouplikeCertificate(False, failures=[f"candidate {idx} is not group-like"])
    seen = set()
    for g in candidates:
        key = tuple(g.coeffs)
        if key in seen:
            failures.append("duplicate group-like candidates")
        seen.add(key)
    # closure under multiplication (a finite cancellative table is a group)
    for a in candidates:
        for b in candidates:
            if tuple((a * b).coeffs) not in seen:
                failures.append("candidate set not closed under multiplication")
                break
        else:
            continue
        break
    if h.unit not in [list(g.coeffs) for g in candidates]:
        failures.append("unit missing from candidate set")
    orders = sorted(g.order(16 * h.dim) or -1 for g in candidates)
    if failures:
        return GrouplikeCertificate(False, len(candidates), orders, failures=failures)

    dual_h = dual_h or dual(h)
    if coradical_dim is None:
        coradical_dim = _annihilator(h, jacobson_radical(dual_h)).dim
    modules = []
    for i, g in enumerate(candidates):
        m = grouplike_module(h, g)
        m.label = f"k_g{i}"
        modules.append(m)
    blocks = []
    for i, blk in enumerate(dual_blocks):
        m = dual_module_from_block(h, blk)
        m.label = f"block{i}"
        blocks.append(m)
    cert = wedderburn_certificate(dual_h, modules + blocks,
                                  radical_dim=dual_h.dim - coradical_dim)
    if not cert.ok:
        return GrouplikeCertificate(False, len(candidates), orders, coradical_dim,
                                    [m.dim for m in blocks],
                                    failures=["dual Wedderburn stage failed"] + cert.details)
    total = len(candidates) + sum(m.dim * m.dim for m in blocks)
    if total != coradical_dim:
        return GrouplikeCertificate(False, len(candidates), orders, coradical_dim,
                                    [m.dim for m in blocks],
                                    failures=[f"|G| + sum d^2 = {total} != coradical {coradical_dim}"])
    return GrouplikeCertificate(True, len(candidates), orders, coradical_dim,
                                [m.dim for m in blocks])


# ---------------------------------------------------------------------------
# skew-primitives
# ---------------------------------------------------------------------------


def skew_primitive_space(h: HopfAlgebraData, g: Element, k: Element,
                         convention: str = "x-first") -> Subspace:
    """Solutions of Delta x = x (x) g + k (x) x (or the mirrored convention).

    The trivial line k(k - g) always lies inside when g != k; callers use
    dim > 1 as the nontriviality flag.
    """
    n = h.dim
    rows: dict[tuple, list] = {}

    def touch(key):
        row = rows.get(key)
        if row is None:
            row = [h.zero()] * n
            rows[key] = row
        return row

    for i in range(n):
        for (a, b, c) in h.comult[i]:
            touch((a, b))[i] = touch((a, b))[i] + c
    for i in range(n):
        if convention == "x-first":
            for b, gb in enumerate(g.coeffs):
                if not gb.is_zero():
                    touch((i, b))[i] = touch((i, b))[i] - gb
            for a, ka in enumerate(k.coeffs):
                if not ka.is_zero():
                    touch((a, i))[i] = touch((a, i))[i] - ka
        else:
            for b, gb in enumerate(g.coeffs):
                if not gb.is_zero():
                    touch((b, i))[i] = touch((b, i))[i] - gb
            for a, ka in enumerate(k.coeffs):
                if not ka.is_zero():
                    touch((i, a))[i] = touch((i, a))[i] - ka
    mat_rows = [r for r in rows.values() if any(not c.is_zero() for c in r)]
    m = Matrix(len(mat_rows), n, h.conductor, mat_rows)
    return nullspace(m)


# ---------------------------------------------------------------------------
# integrals and the distinguished group-like
# ---------------------------------------------------------------------------


def integrals(h: HopfAlgebraData):
    """(left, right) integral subspaces; each must be one-dimensional."""
    n = h.dim
    left_rows = []
    right_rows = []
    for i in range(n):
        for coord in range(n):
            lrow = [h.zero()] * n
            rrow = [h.zero()] * n
            for j in range(n):
                c = h.mult[i][j].get(coord)
                if c is not None:
                    lrow[j] = lrow[j] + c
                c2 = h.mult[j][i].get(coord)
                if c2 is not None:
                    rrow[j] = rrow[j] + c2
            eps_i = h.counit[i]
            if not eps_i.is_zero():
                lrow[coord] = lrow[coord] - eps_i
                rrow[coord] = rrow[coord] - eps_i
            left_rows.append(lrow)
            right_rows.append(rrow)
    left = nullspace(Matrix(len(left_rows), n, h.conductor, left_rows))
    right = nullspace(Matrix(len(right_rows), n, h.conductor, right_rows))
    if left.dim != 1 or right.dim != 1:
        raise AssertionError(
            f"integral spaces must be one-dimensional, got {left.dim}/{right.dim}")
    return left, right


def distinguished_grouplike(h: HopfAlgebraData, dual_h: HopfAlgebraData | None = None) -> Element:
    """a = lam(v)^-1 lam(v_2) v_1 for a right integral lam of the dual."""
    dual_h = dual_h or dual(h)
    _, right = integrals(dual_h)
    lam = right.basis()[0]
    pivot = None
    for i, c in enumerate(lam):
        if not c.is_zero():
            pivot = i
            break
    assert pivot is not None
    acc = {}
    for (j, k, c) in h.comult[pivot]:
        if not lam[k].is_zero():
            v = c * lam[k]
            acc[j] = acc.get(j, h.zero()) + v
    scale = lam[pivot].inverse()
    out = Element.from_dict(h, {j: scale * v for j, v in acc.items() if not v.is_zero()})
    if not out.is_grouplike():
        raise AssertionError("distinguished group-like formula returned a non-group-like")
    return out


# ---------------------------------------------------------------------------
# coinvariants of a Hopf algebra map
# ---------------------------------------------------------------------------


def verify_hopf_map(h: HopfAlgebraData, target: HopfAlgebraData, pi: Matrix):
    """pi must be an algebra and coalgebra map; returns (ok, first failure)."""
    if pi.apply(h.unit) != target.unit:
        return False, "pi(1) != 1"
    for i in range(h.dim):
        pii = pi.col(i)
        di = {}
        for (j, k, c) in h.comult[i]:
            pj = pi.col(j)
            pk = pi.col(k)
            for a, ca in enumerate(pj):
                if ca.is_zero():
                    continue
                for b, cb in enumerate(pk):
                    if not cb.is_zero():
                        key = (a, b)
                        v = di.get(key, h.zero()) + c * ca * cb
                        if v.is_zero():
                            di.pop(key, None)
                        else:
                            di[key] = v
        if di != target.delta_dict(_vec_to_dict(pii)):
            return False, f"pi is not a coalgebra map at {h.labels[i]}"
        eps_pi = target.counit_of(_vec_to_dict(pii))
        if eps_pi != h.counit[i]:
            return False, f"counit not preserved at {h.labels[i]}"
        for j in range(h.dim):
            lhs = pi.apply(_dict_to_vec(h, h.mult[i][j]))
            rhs = _dict_to_vec(target, target.mult_dict(
                _vec_to_dict(pi.col(i)), _vec_to_dict(pi.col(j))))
            if lhs != rhs:
                return False, f"pi is not an algebra map at ({h.labels[i]}, {h.labels[j]})"
    return True, None


def coinvariants(h: HopfAlgebraData, target: HopfAlgebraData, pi: Matrix) -> Subspace:
    """{v : (id (x) pi) Delta v = v (x) 1_target}; pi is checked first."""
    ok, why = verify_hopf_map(h, target, pi)
    if not ok:
        raise ValueError(f"projection is not a Hopf algebra map: {why}")
    n = h.dim
    rows: dict[tuple, list] = {}

    def touch(key):
        row = rows.get(key)
        if row is None:
            row = [h.zero()] * n
            rows[key] = row
        return row

    for i in range(n):
        for (j, k, c) in h.comult[i]:
            for b, cb in enumerate(pi.col(k)):
                if not cb.is_zero():
                    row = touch((j, b))
                    row[i] = row[i] + c * cb
    for i in range(n):
        for b, ub in enumerate(target.unit):
            if not ub.is_zero():
                row = touch((i, b))
                row[i] = row[i] - ub
    mat_rows = [r for r in rows.values() if any(not c.is_zero() for c in r)]
    return nullspace(Matrix(len(mat_rows), n, h.conductor, mat_rows))


# ---------------------------------------------------------------------------
# the aggregated report
# ---------------------------------------------------------------------------


@dataclass
class InvariantReport:
    dim: int
    conductor: int
    radical_dim: int
    coradical_dim: int
    filtration_dims: list
    grouplike_count: int
    grouplike_orders: list
    tr_s2: CycNumber
    semisimple: bool
    cosemisimple: bool
    chevalley: bool
    chevalley_witness: str
    antipode_order: int | None
    s_squared_order: int | None
    distinguished_grouplike_index: int | None
    distinguished_grouplike_label: str | None
    skew_primitive_dims: dict
    certificates: dict

    def claims(self):
        """Flat list of (claim id, value) pairs for table rendering."""
        out = [
            ("dim", self.dim),
            ("radical_dim", self.radical_dim),
            ("coradical_dim", self.coradical_dim),
            ("filtration_dims", self.filtration_dims),
            ("grouplike_count", self.grouplike_count),
            ("grouplike_orders", self.grouplike_orders),
            ("semisimple", self.semisimple),
            ("cosemisimple", self.cosemisimple),
            ("chevalley", self.chevalley),
            ("antipode_order", self.antipode_order),
            ("s_squared_order", self.s_squared_order),
        ]
        out.extend(sorted(self.certificates.items()))
        return out


def invariant_report(h: HopfAlgebraData, cd=None) -> InvariantReport:
    from .hopf import antipode_order, s_squared_order

    dual_h = dual(h)
    rad = jacobson_radical(h)
    rad_dual = jacobson_radical(dual_h)
    h0 = _annihilator(h, rad_dual)
    filtration = coradical_filtration(h, dual_h)
    chev, chev_wit = chevalley_check(h, h0)
    trs2 = tr_s_squared(h)
    # independent route for the dual coradical: radical of the double dual
    dual_corad = _annihilator(dual_h, jacobson_radical(dual(dual_h))).dim
    certs = {
        "coradical_plus_dual_radical": h0.dim + rad_dual.dim == h.dim,
        "dual_coradical_plus_radical": dual_corad + rad.dim == h.dim,
        "semisimple_routes_agree": (rad.dim == 0) == (not trs2.is_zero()),
        "cosemisimple_routes_agree": (rad_dual.dim == 0) == (len(filtration) == 1),
    }
    glcount = 0
    orders = []
    dist_idx = None
    dist_label = None
    skew_dims = {}
    if cd is not None:
        cert = verify_grouplikes(h, cd.grouplikes, cd.dual_blocks, dual_h, h0.dim)
        certs["grouplike_certificate"] = cert.ok
        glcount = cert.count
        orders = cert.orders
        certs["grouplike_count_divides_dim"] = cert.count > 0 and h.dim % cert.count == 0
        dist = distinguished_grouplike(h, dual_h)
        for i, g in enumerate(cd.grouplikes):
            if g.coeffs == dist.coeffs:
                dist_idx = i
                if i < len(cd.grouplike_labels):
                    dist_label = cd.grouplike_labels[i]
                break
        certs["distinguished_in_grouplikes"] = dist_idx is not None
        if cd.skew_witness is not None:
            g_el, k_el, x_el = cd.skew_witness
            sp = skew_primitive_space(h, g_el, k_el)
            skew_dims["witness_pair"] = sp.dim
            certs["skew_witness_in_space"] = sp.contains(x_el.coeffs)
            certs["skew_witness_nontrivial"] = sp.dim > 1
    integrals(h)  # raises if not one-dimensional
    certs["integral_spaces_one_dimensional"] = True
    return InvariantReport(
        dim=h.dim,
        conductor=h.conductor,
        radical_dim=rad.dim,
        coradical_dim=h0.dim,
        filtration_dims=[s.dim for s in filtration],
        grouplike_count=glcount,
        grouplike_orders=orders,
        tr_s2=trs2,
        semisimple=is_semisimple(h),
        cosemisimple=rad_dual.dim == 0,
        chevalley=chev,
        chevalley_witness=chev_wit,
        antipode_order=antipode_order(h),
        s_squared_order=s_squared_order(h),
        distinguished_grouplike_index=dist_idx,
        distinguished_grouplike_label=dist_label,
        skew_primitive_dims=skew_dims,
        certificates=certs,
    )
