"""Structure constants from generators and relations.

Each catalog family ships a hand-written rewriting system whose rules are
confluent by inspection; soundness is not proved here but enforced after the
fact, because realize() runs the full Hopf verifier on its output.  Rewriting
works on words over the generator alphabet; a rule maps a forbidden factor to
a linear combination of words.
"""

from __future__ import annotations

from .cyclotomic import CycNumber
from .hopf import HopfAlgebraData, verify_hopf
from .linalg import Matrix

STEP_GUARD = 20_000


class RewriteError(RuntimeError):
    pass


class Presentation:
    """Alphabet + normal monomials + rewrite rules, all over one conductor."""

    def __init__(self, generators, conductor, normal_monomials, rules, labels=None):
        self.generators = list(generators)
        self.conductor = conductor
        self.normal_monomials = [tuple(w) for w in normal_monomials]
        self.index = {w: i for i, w in enumerate(self.normal_monomials)}
        if len(self.index) != len(self.normal_monomials):
            raise ValueError("duplicate normal monomials")
        # rules: (pattern tuple, [(CycNumber, replacement word tuple), ...])
        self.rules = [(tuple(p), [(c, tuple(w)) for c, w in repl]) for p, repl in rules]
        self.labels = labels or [self._default_label(w) for w in self.normal_monomials]
        self._memo: dict[tuple, dict] = {}
        self._mult = None
        # words longer than this can never reduce to the basis; a growing rule
        # set trips this long before the step guard does
        longest = max((len(w) for w in self.normal_monomials), default=0)
        longest_rule = max((len(w) for _, repl in self.rules for _, w in repl), default=0)
        self._max_len = 3 * max(longest, longest_rule, 1) + 8

    @property
    def dim(self):
        return len(self.normal_monomials)

    def _default_label(self, word):
        if not word:
            return "1"
        out = []
        for letter in word:
            name = self.generators[letter]
            if out and out[-1][0] == name:
                out[-1] = (name, out[-1][1] + 1)
            else:
                out.append((name, 1))
        return "".join(n if e == 1 else f"{n}^{e}" for n, e in out)

    def _first_match(self, word):
        for pos in range(len(word)):
            for pattern, repl in self.rules:
                if word[pos:pos + len(pattern)] == pattern:
                    return pos, pattern, repl
        return None

    def normal_form_word(self, word) -> dict:
        """Fixed point of leftmost rewriting: word -> {monomial index: coeff}."""
        word = tuple(word)
        cached = self._memo.get(word)
        if cached is not None:
            return dict(cached)
        one = CycNumber.one(self.conductor)
        current = {word: one}
        out: dict[int, CycNumber] = {}
        steps = 0
        while current:
            steps += 1
            if steps > STEP_GUARD:
                raise RewriteError(f"rewriting did not terminate on {word}")
            nxt: dict[tuple, CycNumber] = {}
            for w, c in current.items():
                hit = self._memo.get(w)
                if hit is not None:
                    for i, nc in hit.items():
                        _acc(out, i, nc * c)
                    continue
                m = self._first_match(w)
                if m is None:
                    i = self.index.get(w)
                    if i is None:
                        raise RewriteError(f"irreducible word {w} is not a declared normal monomial")
                    _acc(out, i, c)
                else:
                    pos, pattern, repl = m
                    for rc, rw in repl:
                        neww = w[:pos] + rw + w[pos + len(pattern):]
                        if len(neww) > self._max_len:
                            raise RewriteError(f"rewriting grows without bound on {word}")
                        _acc(nxt, neww, c * rc)
            current = nxt
        self._memo[word] = dict(out)
        return out

    def normal_form(self, combo) -> dict:
        """Accepts a word, or a list of (coeff, word) pairs."""
        if combo and isinstance(combo[0], (int,)):
            return self.normal_form_word(tuple(combo))
        if not combo:
            return self.normal_form_word(())
        out: dict[int, CycNumber] = {}
        for c, w in combo:
            for i, v in self.normal_form_word(tuple(w)).items():
                _acc(out, i, c * v)
        return {i: v for i, v in out.items() if not v.is_zero()}

    def to_json(self) -> dict:
        """Documentation dump of the rule set (not a parser input)."""
        from .cyclotomic import cyc_to_json

        def word_str(w):
            return "".join(self.generators[i] for i in w) or "1"

        return {
            "generators": list(self.generators),
            "conductor": self.conductor,
            "normal_monomials": [word_str(w) for w in self.normal_monomials],
            "rules": [
                {"pattern": word_str(p),
                 "replacement": [{"coeff": cyc_to_json(c), "word": word_str(w)}
                                 for c, w in repl]}
                for p, repl in self.rules
            ],
        }

    def mult_table(self):
        if self._mult is None:
            n = self.dim
            self._mult = [[self.normal_form_word(self.normal_monomials[i] + self.normal_monomials[j])
                           for j in range(n)] for i in range(n)]
        return self._mult

    def realize(self, gen_delta, gen_eps, gen_s, skip_verify=False) -> HopfAlgebraData:
        """Extend generator images to the whole basis and assemble the Hopf data.

        gen_delta[g] is a sparse tensor dict over basis-index pairs, gen_eps[g]
        a CycNumber, gen_s[g] a sparse basis-index dict.  Output must pass
        verify_hopf; that is the well-definedness check for the rule set.
        """
        mult = self.mult_table()
        unit_idx = self.index[()]
        words = [[letter for letter in w] for w in self.normal_monomials]
        h = assemble_hopf(
            dim=self.dim, conductor=self.conductor, labels=self.labels, mult=mult,
            unit_index=unit_idx, basis_words=words,
            gen_delta=gen_delta, gen_eps=gen_eps, gen_s=gen_s,
        )
        if not skip_verify:
            rep = verify_hopf(h)
            if not rep.ok:
                raise ValueError("realized presentation fails Hopf axioms: " + "; ".join(rep.failures))
        return h


def _acc(d, key, v):
    s = d.get(key)
    s = v if s is None else s + v
    if s.is_zero():
        d.pop(key, None)
    else:
        d[key] = s


def _mult_dicts(mult, conductor, u, v):
    out: dict[int, CycNumber] = {}
    for i, a in u.items():
        row = mult[i]
        for j, b in v.items():
            ab = a * b
            if ab.is_zero():
                continue
            for k, c in row[j].items():
                _acc(out, k, c * ab)
    return out


def _tensor_mult(mult, conductor, t1, t2):
    out: dict[tuple, CycNumber] = {}
    for (a, b), c1 in t1.items():
        for (c, d), c2 in t2.items():
            cc = c1 * c2
            if cc.is_zero():
                continue
            for x, cx in mult[a][c].items():
                for y, cy in mult[b][d].items():
                    _acc(out, (x, y), cc * cx * cy)
    return out


def assemble_hopf(dim, conductor, labels, mult, unit_index, basis_words,
                  gen_delta, gen_eps, gen_s) -> HopfAlgebraData:
    """Multiplicative extension of Delta and eps, anti-multiplicative of S."""
    one = CycNumber.one(conductor)
    zero = CycNumber.zero(conductor)
    unit_vec = [zero] * dim
    unit_vec[unit_index] = one

    comult = []
    counit = [zero] * dim
    anti = Matrix(dim, dim, conductor)
    unit_tensor = {(unit_index, unit_index): one}
    unit_dict = {unit_index: one}
    for i, word in enumerate(basis_words):
        t = unit_tensor
        e = one
        s = unit_dict
        for letter in word:
            t = _tensor_mult(mult, conductor, t, gen_delta[letter])
            e = e * gen_eps[letter]
        for letter in reversed(word):
            s = _mult_dicts(mult, conductor, s, gen_s[letter])
        comult.append([(j, k, c) for (j, k), c in t.items()])
        counit[i] = e
        for r, c in s.items():
            anti.entries[r][i] = c
    return HopfAlgebraData(dim, conductor, labels, mult, unit_vec, comult, counit, anti)


def group_mult_table(group, conductor):
    """Multiplication tensor of the group algebra (basis = group elements)."""
    one = CycNumber.one(conductor)
    n = group.order
    table = [[None] * n for _ in range(n)]
    for i, g in enumerate(group.elements):
        for j, h in enumerate(group.elements):
            table[i][j] = {group.index[group.mult(g, h)]: one}
    return table


def group_algebra_hopf(group, conductor=None) -> HopfAlgebraData:
    """k[G]: Delta g = g (x) g, eps = 1, S = inversion."""
    conductor = conductor or group.conductor
    mult = group_mult_table(group, conductor)
    one = CycNumber.one(conductor)
    zero = CycNumber.zero(conductor)
    n = group.order
    unit = [zero] * n
    unit[group.index[group.identity]] = one
    comult = [[(i, i, one)] for i in range(n)]
    counit = [one] * n
    anti = Matrix(n, n, conductor)
    for i, g in enumerate(group.elements):
        anti.entries[group.index[group.inv(g)]][i] = one
    return HopfAlgebraData(n, conductor, list(group.labels), mult, unit, comult, counit, anti)


def realize_on_group(group, conductor, gen_delta, gen_eps, gen_s,
                     skip_verify=False) -> HopfAlgebraData:
    """Group-algebra multiplication with a twisted coalgebra structure.

    The coalgebra maps are extended along each element's generator word, so
    well-definedness rests on verify_hopf exactly as for rewriting systems.
    """
    mult = group_mult_table(group, conductor)
    words = [group.word(g) for g in group.elements]
    h = assemble_hopf(
        dim=group.order, conductor=conductor, labels=list(group.labels), mult=mult,
        unit_index=group.index[group.identity], basis_words=words,
        gen_delta=gen_delta, gen_eps=gen_eps, gen_s=gen_s,
    )
    if not skip_verify:
        rep = verify_hopf(h)
        if not rep.ok:
            raise ValueError("twisted group coalgebra fails Hopf axioms: " + "; ".join(rep.failures))
    return h
