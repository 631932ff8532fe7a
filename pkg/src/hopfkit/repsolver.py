"""Module verification and Wedderburn-style completeness certificates.

Nothing here decomposes anything: candidate simple modules come in from the
catalog (or a JSON sidecar) and exact linear algebra judges them.  Simplicity
uses the Burnside span criterion, which is sufficient over any field; numbers
are closed by the dimension count sum(d_i^2) = dim H - dim J(H).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycNumber
from .hopf import HopfAlgebraData
from .linalg import Matrix, Subspace, nullspace, rank


@dataclass
class RepModule:
    label: str
    dim: int
    action: list  # Matrix per basis element of the algebra

    def gen_trace(self, i: int) -> CycNumber:
        return self.action[i].trace()


def module_from_gen_mats(dim, conductor, basis_words, gen_mats, label) -> RepModule:
    """Expand generator matrices along each basis element's word."""
    action = []
    for word in basis_words:
        m = Matrix.identity(dim, conductor)
        for letter in word:
            m = m * gen_mats[letter]
        action.append(m)
    return RepModule(label, dim, action)


def verify_module(h: HopfAlgebraData, m: RepModule):
    """Action respects every structure constant; returns (ok, first failure)."""
    if len(m.action) != h.dim:
        return False, "action list length != algebra dimension"
    unit_mat = Matrix(m.dim, m.dim, h.conductor)
    for i, c in enumerate(h.unit):
        if not c.is_zero():
            unit_mat = unit_mat + m.action[i].scale(c)
    if not unit_mat.is_identity():
        return False, "unit does not act as identity"
    for i in range(h.dim):
        ai = m.action[i]
        for j in range(h.dim):
            lhs = ai * m.action[j]
            rhs = Matrix(m.dim, m.dim, h.conductor)
            for k, c in h.mult[i][j].items():
                rhs = rhs + m.action[k].scale(c)
            if lhs != rhs:
                return False, f"action breaks at pair ({h.labels[i]}, {h.labels[j]})"
    return True, None


def is_simple_certified(h: HopfAlgebraData, m: RepModule) -> bool:
    """Burnside: image of the algebra spans the full matrix algebra."""
    vecs = [[mat.entries[r][c] for r in range(m.dim) for c in range(m.dim)]
            for mat in m.action]
    span = Subspace.from_vectors(m.dim * m.dim, h.conductor, vecs)
    return span.dim == m.dim * m.dim


def hom_space(h: HopfAlgebraData, m: RepModule, n: RepModule) -> Subspace:
    """Intertwiners phi with phi . m(e_i) = n(e_i) . phi, as vec(phi) subspace."""
    nm = n.dim * m.dim
    rows = []
    zero = CycNumber.zero(h.conductor)
    for i in range(h.dim):
        a = m.action[i]
        b = n.action[i]
        # equation block: phi a - b phi = 0; unknowns phi[r][c], vec index r*m.dim+c
        for r in range(n.dim):
            for c in range(m.dim):
                row = [zero] * nm
                for k in range(m.dim):
                    row[r * m.dim + k] = row[r * m.dim + k] + a.entries[k][c]
                for k in range(n.dim):
                    row[k * m.dim + c] = row[k * m.dim + c] - b.entries[r][k]
                rows.append(row)
    mat = Matrix(len(rows), nm, h.conductor, rows)
    return nullspace(mat)


def are_isomorphic(h: HopfAlgebraData, m: RepModule, n: RepModule) -> bool:
    if m.dim != n.dim:
        return False
    hs = hom_space(h, m, n)
    for v in hs.basis():
        phi = Matrix(n.dim, m.dim, h.conductor,
                     [[v[r * m.dim + c] for c in range(m.dim)] for r in range(n.dim)])
        if rank(phi) == m.dim:
            return True
    return False


@dataclass
class WedderburnCertificate:
    ok: bool
    profile: list[int] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def wedderburn_certificate(h: HopfAlgebraData, modules, radical_dim: int) -> WedderburnCertificate:
    """All four stages: verify, certify simple, pairwise non-iso, dimension count."""
    details = []
    for m in modules:
        ok, why = verify_module(h, m)
        if not ok:
            return WedderburnCertificate(False, [], [f"{m.label}: {why}"])
        if not is_simple_certified(h, m):
            return WedderburnCertificate(False, [], [f"{m.label}: Burnside span too small"])
    for i in range(len(modules)):
        for j in range(i + 1, len(modules)):
            a, b = modules[i], modules[j]
            if a.dim == b.dim and are_isomorphic(h, a, b):
                return WedderburnCertificate(False, [], [f"{a.label} isomorphic to {b.label}"])
    total = sum(m.dim * m.dim for m in modules)
    target = h.dim - radical_dim
    if total != target:
        return WedderburnCertificate(
            False, sorted(m.dim for m in modules),
            [f"sum d^2 = {total} but dim - radical = {target}"])
    # characters of the certified simples must be linearly independent
    char_rows = [[m.gen_trace(i) for i in range(h.dim)] for m in modules]
    char_rank = rank(Matrix(len(modules), h.dim, h.conductor, char_rows))
    if char_rank != len(modules):
        details.append("character matrix rank too small")
        return WedderburnCertificate(False, sorted(m.dim for m in modules), details)
    return WedderburnCertificate(True, sorted(m.dim for m in modules), details)
