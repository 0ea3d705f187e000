"""Noncommutative rewriting for group-plus-skew-primitive presentations.

Words are tuples of letter indices over the alphabet h_1 < ... < h_sigma <
a_1 < ... < a_theta.  The rules push group letters left, sort both blocks,
and truncate powers; every rule strictly decreases the monomial order that
compares a-parts by length-then-lex first, then whole words the same way,
so rewriting terminates.  Overlap checking emits the scalar constraints that
make the reduction system confluent.
"""

from __future__ import annotations

from itertools import product

from .abelian import evaluate
from .cyclotomic import Cyclotomic, order as _order

_ONE = Cyclotomic(1)
_ZERO = Cyclotomic(0)


class ScalarPoly:
    """Sparse polynomial over Q(zeta) in named commuting indeterminates."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        object.__setattr__(self, "terms", dict(terms or {}))

    def __setattr__(self, name, value):
        raise AttributeError("ScalarPoly values are immutable")

    @classmethod
    def constant(cls, c):
        c = c if isinstance(c, Cyclotomic) else Cyclotomic(c)
        return cls({} if c.is_zero else {(): c})

    @classmethod
    def variable(cls, name):
        return cls({((name, 1),): _ONE})

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return self.terms == {(): _ONE} or (
            len(self.terms) == 1 and () in self.terms and self.terms[()].is_one
        )

    def variables(self):
        out = set()
        for mono in self.terms:
            out.update(v for v, _ in mono)
        return out

    def max_exponent(self):
        return max((e for mono in self.terms for _, e in mono), default=0)

    @staticmethod
    def _coerce(value):
        if isinstance(value, ScalarPoly):
            return value
        if isinstance(value, (Cyclotomic, int)):
            return ScalarPoly.constant(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, _ZERO) + c
            if s.is_zero:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return ScalarPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                c = c1 * c2
                s = terms.get(mono, _ZERO) + c
                if s.is_zero:
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return ScalarPoly(terms)

    __rmul__ = __mul__

    def substitute(self, assignment):
        """Evaluate at {variable: Cyclotomic}; all variables must be given."""
        total = _ZERO
        for mono, c in self.terms.items():
            value = c
            for v, e in mono:
                value = value * assignment[v] ** e
            total = total + value
        return total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in mono
            )
            parts.append(f"({c})*{body}" if body else f"({c})")
        return " + ".join(parts)


def _merge_monomials(m1, m2):
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class Presentation:
    """Rewriting presentation of a lifted algebra over a finite abelian group."""

    def __init__(self, group, gs, chis, mus, lams, symbolic=False):
        self.group = group
        self.sigma = group.rank
        self.theta = len(gs)
        self.gs = tuple(gs)
        self.chis = tuple(chis)
        self.qs = tuple(evaluate(chi, g) for chi, g in zip(chis, gs))
        self.orders = []
        for i, q in enumerate(self.qs):
            n = _order(q)
            if n is None or n < 2:
                raise ValueError(f"q_{i} must be a root of unity different from 1")
            self.orders.append(n)
        self.orders = tuple(self.orders)
        self.symbolic = symbolic
        if symbolic:
            self.one = ScalarPoly.constant(1)
            self.mus = tuple(ScalarPoly.variable(f"mu{i}") for i in range(self.theta))
            self.lams = {
                (i, j): ScalarPoly.variable(f"lam{i}_{j}")
                for i in range(self.theta)
                for j in range(i + 1, self.theta)
            }
        else:
            self.one = _ONE
            self.mus = tuple(_as_cyc(m) for m in mus)
            self.lams = {}
            for i in range(self.theta):
                for j in range(i + 1, self.theta):
                    self.lams[(i, j)] = _as_cyc((lams or {}).get((i, j), 0))
        self._nf_cache = {}
        self._confluent = None

    # -- letters -----------------------------------------------------------

    def h_letter(self, ell):
        return ell

    def a_letter(self, i):
        return self.sigma + i

    def is_a(self, letter):
        return letter >= self.sigma

    def group_word(self, g):
        """The sorted h-word for a group element in exponent normal form."""
        out = []
        for ell, n in enumerate(g.exponents):
            out.extend([ell] * n)
        return tuple(out)

    def scalar(self, c):
        return ScalarPoly.constant(c) if self.symbolic else _as_cyc(c)

    # -- single rewrite step -------------------------------------------------

    def _match(self, w, p):
        """Rule matching at position p, or None; fixed priority for determinism."""
        x = w[p]
        if self.is_a(x):
            i = x - self.sigma
            N = self.orders[i]
            if p + N <= len(w) and all(w[p + t] == x for t in range(1, N)):
                return ("a_power", i, N)
            if p + 1 < len(w):
                y = w[p + 1]
                if not self.is_a(y):
                    return ("a_h", i, y)
                if y < x:
                    return ("a_pair", y - self.sigma, i)
        else:
            M = self.group.factors[x]
            if p + M <= len(w) and all(w[p + t] == x for t in range(1, M)):
                return ("h_power", x, M)
            if p + 1 < len(w) and not self.is_a(w[p + 1]) and w[p + 1] < x:
                return ("h_swap", w[p + 1], x)
        return None

    def _apply(self, w, p, match):
        """Rewrite w at position p; returns list of (coefficient, word)."""
        kind = match[0]
        if kind == "h_power":
            _, ell, M = match
            return [(self.one, w[:p] + w[p + M:])]
        if kind == "h_swap":
            t, ell = match[1], match[2]
            return [(self.one, w[:p] + (t, ell) + w[p + 2:])]
        if kind == "a_h":
            i, ell = match[1], match[2]
            c = evaluate(self.chis[i], self.group.generator(ell)).inverse()
            return [(self.scalar(c), w[:p] + (w[p + 1], w[p]) + w[p + 2:])]
        if kind == "a_power":
            _, i, N = match
            mu = self.mus[i]
            rest = w[:p] + w[p + N:]
            gN = self.gs[i] ** N
            out = [(mu, rest)]
            if not gN.is_identity:
                out.append((-mu, w[:p] + self.group_word(gN) + w[p + N:]))
            else:
                out = [(mu - mu, rest)] if self.symbolic else [(self.scalar(0), rest)]
            return out
        if kind == "a_pair":
            i, j = match[1], match[2]
            lam = self.lams[(i, j)]
            q = evaluate(self.chis[i], self.gs[j])
            swapped = w[:p] + (self.a_letter(i), self.a_letter(j)) + w[p + 2:]
            out = [(self.scalar(q), swapped)]
            gij = self.gs[i] * self.gs[j]
            rest = w[:p] + w[p + 2:]
            out.append((lam, rest))
            if not gij.is_identity:
                out.append((-lam, w[:p] + self.group_word(gij) + w[p + 2:]))
            else:
                out[-1] = (lam - lam, rest)
            return out
        raise AssertionError(f"unknown rule {kind}")

    def _find_redex(self, w):
        for p in range(len(w)):
            m = self._match(w, p)
            if m is not None:
                return p, m
        return None

    # -- normal forms ---------------------------------------------------------

    def normal_form(self, target):
        """Normal form of a word or a {word: scalar} combination."""
        if isinstance(target, tuple):
            combo = {target: self.one}
        else:
            combo = target
        out = {}
        for w, c in combo.items():
            if _scalar_is_zero(c):
                continue
            for m, d in self._nf_word(w).items():
                _accumulate(out, m, c * d)
        return out

    def _nf_word(self, w):
        cache = self._nf_cache
        stack = [w]
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            redex = self._find_redex(top)
            if redex is None:
                cache[top] = {top: self.one}
                stack.pop()
                continue
            p, m = redex
            expansion = self._apply(top, p, m)
            pending = [w2 for _, w2 in expansion if w2 not in cache]
            if pending:
                stack.extend(pending)
                continue
            out = {}
            for coeff, w2 in expansion:
                if _scalar_is_zero(coeff):
                    continue
                for mono, c in cache[w2].items():
                    _accumulate(out, mono, coeff * c)
            cache[top] = out
            stack.pop()
        return cache[w]

    def reduction_steps(self, w, bound=None):
        """Count single steps along the deterministic strategy; assert the bound."""
        steps = 0
        combos = {w: self.one}
        if bound is None:
            bound = 4 * (len(w) + 2) ** 3 + 100
        while True:
            for word in combos:
                redex = self._find_redex(word)
                if redex is not None:
                    break
            else:
                return steps
            p, m = redex
            expansion = self._apply(word, p, m)
            coeff = combos.pop(word)
            for c, w2 in expansion:
                _accumulate(combos, w2, coeff * c)
            steps += 1
            if steps > bound:
                raise AssertionError("reduction exceeded termination bound")

    def irreducible_words(self):
        """All normal-form monomials, lexicographic in exponent vectors."""
        ranges = [range(m) for m in self.group.factors]
        ranges += [range(n) for n in self.orders]
        out = []
        for exps in product(*ranges):
            word = []
            for letter, e in enumerate(exps):
                word.extend([letter] * e)
            out.append(tuple(word))
        return out


def _as_cyc(c):
    return c if isinstance(c, Cyclotomic) else Cyclotomic(c)


def _scalar_is_zero(c):
    return c.is_zero


def _accumulate(out, key, value):
    prev = out.get(key)
    total = value if prev is None else prev + value
    if _scalar_is_zero(total):
        out.pop(key, None)
    else:
        out[key] = total


class OverlapCase:
    """One overlap diagram: two one-step reductions of the same word."""

    __slots__ = ("family", "indices", "word", "residual")

    def __init__(self, family, indices, word, residual):
        self.family = family
        self.indices = indices
        self.word = word
        self.residual = residual

    @property
    def resolved(self):
        return not self.residual

    def __repr__(self):
        state = "resolved" if self.resolved else "UNRESOLVED"
        return f"OverlapCase({self.family}{self.indices}: {state})"


class OverlapReport:
    """Outcome of checking all overlap families of a presentation."""

    def __init__(self, cases):
        self.cases = cases

    @property
    def confluent(self):
        return all(c.resolved for c in self.cases)

    def unresolved(self):
        return [c for c in self.cases if not c.resolved]

    def residual_polys(self):
        """All (family, indices, monomial, scalar) entries with nonzero scalar."""
        out = []
        for c in self.cases:
            for mono, scalar in sorted(c.residual.items()):
                out.append((c.family, c.indices, mono, scalar))
        return out


def check_overlaps(P):
    """Resolve every overlap family; residuals empty iff locally confluent."""
    cases = []

    def diagram(family, indices, word, first, second):
        left = P.normal_form(_apply_at(P, word, *first))
        right = P.normal_form(_apply_at(P, word, *second))
        residual = dict(left)
        for mono, c in right.items():
            _accumulate(residual, mono, -c)
        cases.append(OverlapCase(family, indices, word, residual))

    sigma, theta = P.sigma, P.theta
    factors = P.group.factors
    # group-only overlaps: always resolve
    for ell in range(sigma):
        M = factors[ell]
        word = (ell,) * (M + 1)
        diagram("group_only", (ell,), word, (0,), (1,))
        for t in range(ell):
            diagram("group_only", (ell, t), (ell,) * M + (t,), (0,), (M - 1,))
            for s in range(t):
                diagram("group_only", (ell, t, s), (ell, t, s), (0,), (1,))
    for i in range(theta):
        a = P.a_letter(i)
        N = P.orders[i]
        for ell in range(sigma):
            M = factors[ell]
            # a_i h^M: swap first vs collapse the h power
            diagram("letter_group_power", (i, ell), (a,) + (ell,) * M, (0,), (1,))
            # a_i h_ell h_t: swap a-h first vs sort the group pair
            for t in range(ell):
                diagram("letter_group_pair", (i, ell, t), (a, ell, t), (0,), (1,))
            # a_i^N h: collapse the a power vs move h through the last letter
            diagram("letter_power_group", (i, ell), (a,) * N + (ell,), (0,), (N - 1,))
        for j in range(i + 1, theta):
            b = P.a_letter(j)
            Nj = P.orders[j]
            # a_j^{N_j} a_i: collapse the power vs commute the pair
            diagram("pair_power_left", (i, j), (b,) * Nj + (a,), (0,), (Nj - 1,))
            # a_j a_i^{N_i}: commute the pair vs collapse the power
            diagram("pair_power_right", (i, j), (b,) + (a,) * N, (0,), (1,))
            # a_j a_i h_ell: commute the pair vs move h through
            for ell in range(sigma):
                diagram("pair_group", (i, j, ell), (b, a, ell), (0,), (1,))
    return OverlapReport(cases)


def _apply_at(P, word, p):
    match = P._match(word, p)
    if match is None:
        raise AssertionError(f"no rule matches {word} at {p}")
    out = {}
    for c, w2 in P._apply(word, p, match):
        _accumulate(out, w2, c)
    return out


def reference_constraints(P):
    """The scalar conditions that compatible data must satisfy.

    Each entry is (name, indices, polynomial-or-scalar that must vanish);
    conditions appear only when their character-side hypothesis holds.
    """
    out = []
    for i in range(P.theta):
        N = P.orders[i]
        g_power = P.gs[i] ** N
        chi_power = P.chis[i] ** N
        if not g_power.is_identity and not chi_power.is_trivial:
            out.append(("power_scalar_vanishes", (i,), P.mus[i]))
    for i in range(P.theta):
        for j in range(i + 1, P.theta):
            lam = P.lams[(i, j)]
            v = evaluate(P.chis[i], P.gs[j])
            for N in {P.orders[j], P.orders[i]}:
                geo = _ZERO
                for t in range(N):
                    geo = geo + v ** t
                if not geo.is_zero:
                    out.append(("pair_scalar_times_sum_vanishes", (i, j), lam * geo))
            gj_pow = P.gs[j] ** P.orders[j]
            if not gj_pow.is_identity and not (v ** P.orders[j]).is_one:
                out.append(("power_scalar_vanishes", (j,), P.mus[j]))
            gi_pow = P.gs[i] ** P.orders[i]
            if not gi_pow.is_identity and not (v ** P.orders[i]).is_one:
                out.append(("power_scalar_vanishes", (i,), P.mus[i]))
            gij = P.gs[i] * P.gs[j]
            chi_prod = P.chis[i] * P.chis[j]
            if not gij.is_identity and not chi_prod.is_trivial:
                out.append(("pair_scalar_vanishes", (i, j), lam))
    return out


def violated_constraints(P):
    """Names of reference conditions a concrete presentation fails."""
    if P.symbolic:
        raise ValueError("violations are only defined for concrete scalars")
    return [
        (name, indices)
        for name, indices, scalar in reference_constraints(P)
        if not scalar.is_zero
    ]


def constraint_sets_equivalent(emitted, reference):
    """Same zero set over assignments mu in {0,1}, lambda in {0,1}.

    All residual and reference polynomials here are multilinear in each
    indeterminate (asserted), so agreement on the grid decides equality of
    the zero sets over the field.
    """
    polys_a = [p for _, _, _, p in emitted] if emitted and len(emitted[0]) == 4 else [
        p for _, _, p in emitted
    ]
    polys_b = [p for _, _, p in reference]
    names = set()
    for p in polys_a + polys_b:
        assert p.max_exponent() <= 1, "constraint polynomial is not multilinear"
        names.update(p.variables())
    names = sorted(names)
    for values in product((Cyclotomic(0), Cyclotomic(1)), repeat=len(names)):
        assignment = dict(zip(names, values))
        zero_a = all(p.substitute(assignment).is_zero for p in polys_a)
        zero_b = all(p.substitute(assignment).is_zero for p in polys_b)
        if zero_a != zero_b:
            return False
    return True


def irreducible_basis(P):
    """Normal-form monomial basis; requires a confluent presentation."""
    if P._confluent is None:
        P._confluent = check_overlaps(P).confluent
    if not P._confluent:
        raise ValueError("presentation is not confluent; no monomial basis")
    return P.irreducible_words()
