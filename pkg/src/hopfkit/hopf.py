"""Finite-dimensional Hopf algebras as exact structure tensors.

A HopfAlgebraData holds multiplication (dense table of sparse coefficient
dicts), comultiplication (sparse triple lists), unit, counit and the antipode
matrix, all over one cyclotomic conductor.  Constructors are expected to run
verify_hopf(); the verifiers here are the soundness backstop for every
generator-and-relations construction in the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cyclotomic import CycNumber, embed
from .linalg import Matrix, solve

MAX_FAILURES = 5


@dataclass
class VerifyReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        return VerifyReport(self.ok and other.ok, self.failures + other.failures)


class HopfAlgebraData:
    __slots__ = ("dim", "conductor", "labels", "mult", "unit", "comult", "counit", "antipode")

    def __init__(self, dim, conductor, labels, mult, unit, comult, counit, antipode):
        self.dim = dim
        self.conductor = conductor
        self.labels = list(labels)
        # mult[i][j]: dict index -> CycNumber, zero entries omitted
        self.mult = mult
        self.unit = list(unit)  # dense coefficient vector
        # comult[i]: sorted list of (j, k, CycNumber)
        self.comult = [sorted(tr, key=lambda t: (t[0], t[1])) for tr in comult]
        self.counit = list(counit)
        self.antipode = antipode  # Matrix, column j = S(e_j)

    # -- small helpers ---------------------------------------------------

    def zero(self) -> CycNumber:
        return CycNumber.zero(self.conductor)

    def one(self) -> CycNumber:
        return CycNumber.one(self.conductor)

    def basis_dict(self, i: int) -> dict:
        return {i: self.one()}

    def unit_dict(self) -> dict:
        return {i: c for i, c in enumerate(self.unit) if not c.is_zero()}

    def mult_dict(self, u: dict, v: dict) -> dict:
        out: dict[int, CycNumber] = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                ab = a * b
                if ab.is_zero():
                    continue
                for k, c in row[j].items():
                    s = out.get(k)
                    s = c * ab if s is None else s + c * ab
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def delta_dict(self, u: dict) -> dict:
        out: dict[tuple[int, int], CycNumber] = {}
        for i, a in u.items():
            for (j, k, c) in self.comult[i]:
                key = (j, k)
                s = out.get(key)
                s = c * a if s is None else s + c * a
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def tensor_mult(self, t1: dict, t2: dict) -> dict:
        """Componentwise product on H (x) H for sparse tensor dicts."""
        out: dict[tuple[int, int], CycNumber] = {}
        for (a, b), c1 in t1.items():
            rowa = self.mult[a]
            rowb = self.mult[b]
            for (c, d), c2 in t2.items():
                cc = c1 * c2
                if cc.is_zero():
                    continue
                left = rowa[c]
                right = rowb[d]
                for x, cx in left.items():
                    for y, cy in right.items():
                        v = cc * cx * cy
                        if v.is_zero():
                            continue
                        key = (x, y)
                        s = out.get(key)
                        s = v if s is None else s + v
                        if s.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = s
        return out

    def counit_of(self, u: dict) -> CycNumber:
        e = self.zero()
        for i, a in u.items():
            e = e + self.counit[i] * a
        return e

    def antipode_dict(self, u: dict) -> dict:
        out: dict[int, CycNumber] = {}
        col = self.antipode.entries
        for j, a in u.items():
            for i in range(self.dim):
                c = col[i][j]
                if c.is_zero():
                    continue
                v = c * a
                s = out.get(i)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    def left_mult_matrix(self, u: dict) -> Matrix:
        m = Matrix(self.dim, self.dim, self.conductor)
        for j in range(self.dim):
            col = self.mult_dict(u, self.basis_dict(j))
            for i, c in col.items():
                m.entries[i][j] = c
        return m

    def right_mult_matrix(self, u: dict) -> Matrix:
        m = Matrix(self.dim, self.dim, self.conductor)
        for j in range(self.dim):
            col = self.mult_dict(self.basis_dict(j), u)
            for i, c in col.items():
                m.entries[i][j] = c
        return m

    # -- structural equality ----------------------------------------------

    def same_tensors(self, other: "HopfAlgebraData") -> bool:
        """Bit-exact structure comparison, ignoring labels."""
        if self.dim != other.dim or self.conductor != other.conductor:
            return False
        if self.unit != other.unit or self.counit != other.counit:
            return False
        for i in range(self.dim):
            if self.comult[i] != other.comult[i]:
                return False
            for j in range(self.dim):
                if self.mult[i][j] != other.mult[i][j]:
                    return False
        return self.antipode == other.antipode

    def label_of(self, i: int) -> str:
        return self.labels[i]

    def __repr__(self):
        return f"HopfAlgebraData(dim {self.dim}, conductor {self.conductor})"


class Element:
    """Vector in a fixed HopfAlgebraData basis."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: HopfAlgebraData, coeffs):
        coeffs = list(coeffs)
        assert len(coeffs) == parent.dim
        self.parent = parent
        self.coeffs = coeffs

    @staticmethod
    def from_dict(parent: HopfAlgebraData, d: dict) -> "Element":
        v = [parent.zero()] * parent.dim
        for i, c in d.items():
            v[i] = c
        return Element(parent, v)

    @staticmethod
    def basis(parent: HopfAlgebraData, i: int) -> "Element":
        return Element.from_dict(parent, {i: parent.one()})

    @staticmethod
    def unit(parent: HopfAlgebraData) -> "Element":
        return Element(parent, parent.unit)

    def as_dict(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if not c.is_zero()}

    def __add__(self, other: "Element") -> "Element":
        return Element(self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.parent, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Element(self.parent, [-a for a in self.coeffs])

    def scale(self, c) -> "Element":
        return Element(self.parent, [c * a for a in self.coeffs])

    def __mul__(self, other: "Element") -> "Element":
        return Element.from_dict(self.parent, self.parent.mult_dict(self.as_dict(), other.as_dict()))

    def __pow__(self, n: int) -> "Element":
        out = Element.unit(self.parent)
        base = self
        if n < 0:
            inv = self.inverse()
            if inv is None:
                raise ValueError("element is not invertible")
            base, n = inv, -n
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def inverse(self):
        """Two-sided inverse by linear solve, or None."""
        h = self.parent
        left = h.left_mult_matrix(self.as_dict())
        x = solve(left, h.unit)
        if x is None:
            return None
        cand = Element(h, x)
        if (cand * self).coeffs != h.unit:
            return None
        return cand

    def eps(self) -> CycNumber:
        return self.parent.counit_of(self.as_dict())

    def delta(self) -> dict:
        return self.parent.delta_dict(self.as_dict())

    def antipode(self) -> "Element":
        return Element.from_dict(self.parent, self.parent.antipode_dict(self.as_dict()))

    def is_grouplike(self) -> bool:
        d = self.as_dict()
        if not self.eps().is_one():
            return False
        expected = {}
        for i, a in d.items():
            for j, b in d.items():
                ab = a * b
                if not ab.is_zero():
                    expected[(i, j)] = ab
        return self.parent.delta_dict(d) == expected

    def order(self, bound: int = 10_000):
        """Multiplicative order, or None past the bound."""
        acc = self
        unit = self.parent.unit
        for n in range(1, bound + 1):
            if acc.coeffs == unit:
                return n
            acc = acc * self
        return None

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.parent is other.parent and self.coeffs == other.coeffs

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                terms.append(f"({c})*{self.parent.labels[i]}")
        return " + ".join(terms) if terms else "0"


# -- verifiers -----------------------------------------------------------


def verify_algebra(h: HopfAlgebraData) -> VerifyReport:
    failures = []
    unit = h.unit_dict()
    for j in range(h.dim):
        ej = h.basis_dict(j)
        if h.mult_dict(unit, ej) != ej:
            failures.append(f"left unit law fails at {h.labels[j]}")
        if h.mult_dict(ej, unit) != ej:
            failures.append(f"right unit law fails at {h.labels[j]}")
        if len(failures) >= MAX_FAILURES:
            return VerifyReport(False, failures)
    for i in range(h.dim):
        for j in range(h.dim):
            eij = h.mult[i][j]
            for k in range(h.dim):
                lhs = h.mult_dict(eij, h.basis_dict(k))
                rhs = h.mult_dict(h.basis_dict(i), h.mult[j][k])
                if lhs != rhs:
                    failures.append(
                        f"associativity fails at ({h.labels[i]}, {h.labels[j]}, {h.labels[k]})"
                    )
                    if len(failures) >= MAX_FAILURES:
                        return VerifyReport(False, failures)
    return VerifyReport(not failures, failures)


def verify_coalgebra(h: HopfAlgebraData) -> VerifyReport:
    failures = []
    for i in range(h.dim):
        d = h.comult[i]
        # (Delta (x) id) Delta vs (id (x) Delta) Delta
        lhs: dict[tuple, CycNumber] = {}
        rhs: dict[tuple, CycNumber] = {}
        for (j, k, c) in d:
            for (a, b, c2) in h.comult[j]:
                key = (a, b, k)
                v = lhs.get(key, h.zero()) + c * c2
                if v.is_zero():
                    lhs.pop(key, None)
                else:
                    lhs[key] = v
            for (a, b, c2) in h.comult[k]:
                key = (j, a, b)
                v = rhs.get(key, h.zero()) + c * c2
                if v.is_zero():
                    rhs.pop(key, None)
                else:
                    rhs[key] = v
        if lhs != rhs:
            failures.append(f"coassociativity fails at {h.labels[i]}")
        # counit laws
        left = {}
        right = {}
        for (j, k, c) in d:
            v = left.get(k, h.zero()) + c * h.counit[j]
            if v.is_zero():
                left.pop(k, None)
            else:
                left[k] = v
            w = right.get(j, h.zero()) + c * h.counit[k]
            if w.is_zero():
                right.pop(j, None)
            else:
                right[j] = w
        if left != h.basis_dict(i) or right != h.basis_dict(i):
            failures.append(f"counit law fails at {h.labels[i]}")
        if len(failures) >= MAX_FAILURES:
            return VerifyReport(False, failures)
    return VerifyReport(not failures, failures)


def verify_bialgebra(h: HopfAlgebraData) -> VerifyReport:
    failures = []
    unit = h.unit_dict()
    d1 = h.delta_dict(unit)
    expected = {}
    for i, a in unit.items():
        for j, b in unit.items():
            v = a * b
            if not v.is_zero():
                expected[(i, j)] = v
    if d1 != expected:
        failures.append("Delta(1) != 1 (x) 1")
    if not h.counit_of(unit).is_one():
        failures.append("eps(1) != 1")
    for i in range(h.dim):
        di = h.delta_dict(h.basis_dict(i))
        for j in range(h.dim):
            prod = h.mult[i][j]
            if h.counit_of(prod) != h.counit[i] * h.counit[j]:
                failures.append(f"eps not multiplicative at ({h.labels[i]}, {h.labels[j]})")
            dj = h.delta_dict(h.basis_dict(j))
            if h.delta_dict(prod) != h.tensor_mult(di, dj):
                failures.append(f"Delta not multiplicative at ({h.labels[i]}, {h.labels[j]})")
            if len(failures) >= MAX_FAILURES:
                return VerifyReport(False, failures)
    return VerifyReport(not failures, failures)


def verify_antipode(h: HopfAlgebraData) -> VerifyReport:
    failures = []
    unit = h.unit_dict()
    for i in range(h.dim):
        lhs: dict[int, CycNumber] = {}
        rhs: dict[int, CycNumber] = {}
        for (j, k, c) in h.comult[i]:
            sj = h.antipode_dict({j: c})
            for x, cx in h.mult_dict(sj, h.basis_dict(k)).items():
                v = lhs.get(x, h.zero()) + cx
                if v.is_zero():
                    lhs.pop(x, None)
                else:
                    lhs[x] = v
            sk = h.antipode_dict({k: c})
            for x, cx in h.mult_dict(h.basis_dict(j), sk).items():
                v = rhs.get(x, h.zero()) + cx
                if v.is_zero():
                    rhs.pop(x, None)
                else:
                    rhs[x] = v
        target = {k: v * h.counit[i] for k, v in unit.items() if not (v * h.counit[i]).is_zero()}
        if lhs != target:
            failures.append(f"antipode law m(S (x) id)Delta fails at {h.labels[i]}")
        if rhs != target:
            failures.append(f"antipode law m(id (x) S)Delta fails at {h.labels[i]}")
        if len(failures) >= MAX_FAILURES:
            return VerifyReport(False, failures)
    return VerifyReport(not failures, failures)


def verify_hopf(h: HopfAlgebraData) -> VerifyReport:
    rep = verify_algebra(h)
    rep = rep.merge(verify_coalgebra(h))
    if rep.ok:
        rep = rep.merge(verify_bialgebra(h))
        rep = rep.merge(verify_antipode(h))
    return rep


# -- constructions --------------------------------------------------------


def dual(h: HopfAlgebraData) -> HopfAlgebraData:
    """Dual Hopf algebra on the dual basis: all structure tensors transposed."""
    zero = h.zero()
    mult = [[{} for _ in range(h.dim)] for _ in range(h.dim)]
    for i in range(h.dim):
        for (j, k, c) in h.comult[i]:
            mult[j][k][i] = mult[j][k].get(i, zero) + c
    for row in mult:
        for d in row:
            for k in [k for k, v in d.items() if v.is_zero()]:
                del d[k]
    comult = [[] for _ in range(h.dim)]
    for i in range(h.dim):
        for j in range(h.dim):
            for k, c in h.mult[i][j].items():
                comult[k].append((i, j, c))
    labels = [lb[:-1] if lb.endswith("*") else lb + "*" for lb in h.labels]
    return HopfAlgebraData(
        dim=h.dim,
        conductor=h.conductor,
        labels=labels,
        mult=mult,
        unit=list(h.counit),
        comult=comult,
        counit=list(h.unit),
        antipode=h.antipode.transpose(),
    )


def _embed_vec(vec, conductor):
    return [embed(c, conductor) for c in vec]


def change_conductor(h: HopfAlgebraData, conductor: int) -> HopfAlgebraData:
    if conductor == h.conductor:
        return h
    if conductor % h.conductor != 0:
        raise ValueError("can only embed into a multiple of the conductor")
    mult = [
        [{k: embed(c, conductor) for k, c in h.mult[i][j].items()} for j in range(h.dim)]
        for i in range(h.dim)
    ]
    comult = [[(j, k, embed(c, conductor)) for (j, k, c) in tr] for tr in h.comult]
    anti = Matrix(h.dim, h.dim, conductor,
                  [[embed(c, conductor) for c in row] for row in h.antipode.entries])
    return HopfAlgebraData(h.dim, conductor, h.labels, mult,
                           _embed_vec(h.unit, conductor), comult,
                           _embed_vec(h.counit, conductor), anti)


def tensor_product(a: HopfAlgebraData, b: HopfAlgebraData) -> HopfAlgebraData:
    """Componentwise Hopf structure on the tensor basis, index i*dim(b)+j."""
    conductor = a.conductor * b.conductor // gcd(a.conductor, b.conductor)
    a = change_conductor(a, conductor)
    b = change_conductor(b, conductor)
    dim = a.dim * b.dim

    def idx(i, j):
        return i * b.dim + j

    mult = [[None] * dim for _ in range(dim)]
    for i1 in range(a.dim):
        for j1 in range(b.dim):
            for i2 in range(a.dim):
                for j2 in range(b.dim):
                    d = {}
                    for k1, c1 in a.mult[i1][i2].items():
                        for k2, c2 in b.mult[j1][j2].items():
                            v = c1 * c2
                            if not v.is_zero():
                                d[idx(k1, k2)] = v
                    mult[idx(i1, j1)][idx(i2, j2)] = d
    comult = []
    for i in range(a.dim):
        for j in range(b.dim):
            tr = []
            for (x1, y1, c1) in a.comult[i]:
                for (x2, y2, c2) in b.comult[j]:
                    v = c1 * c2
                    if not v.is_zero():
                        tr.append((idx(x1, x2), idx(y1, y2), v))
            comult.append(tr)
    unit = [a.unit[i] * b.unit[j] for i in range(a.dim) for j in range(b.dim)]
    counit = [a.counit[i] * b.counit[j] for i in range(a.dim) for j in range(b.dim)]
    from .linalg import kron

    anti = kron(a.antipode, b.antipode)
    labels = [f"{la}(x){lb}" for la in a.labels for lb in b.labels]
    return HopfAlgebraData(dim, conductor, labels, mult, unit, comult, counit, anti)


# -- semisimplicity and antipode order ------------------------------------


def tr_s_squared(h: HopfAlgebraData) -> CycNumber:
    return (h.antipode * h.antipode).trace()


def is_semisimple(h: HopfAlgebraData) -> bool:
    # Larson-Radford in characteristic zero
    return not tr_s_squared(h).is_zero()


def antipode_order(h: HopfAlgebraData, bound: int | None = None):
    """Least n >= 1 with S^n = id, or None past the bound."""
    if bound is None:
        bound = 16 * h.dim
    acc = h.antipode
    for n in range(1, bound + 1):
        if acc.is_identity():
            return n
        acc = acc * h.antipode
    return None


def s_squared_order(h: HopfAlgebraData, bound: int | None = None):
    if bound is None:
        bound = 16 * h.dim
    s2 = h.antipode * h.antipode
    acc = s2
    for n in range(1, bound + 1):
        if acc.is_identity():
            return n
        acc = acc * s2
    return None
