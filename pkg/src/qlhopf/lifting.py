"""Liftings of quantum linear spaces: presentation, Hopf structure, predictions."""

from .abelian import AbelianGroup
from .cyclotomic import Cyclotomic, order
from .hopfcore import StructureHopf, is_bialgebra_map
from .qls import QLSDatum, group_element_name
from .rewrite import Presentation, check_overlaps

_ONE = Cyclotomic(1)
_ZERO = Cyclotomic(0)


class CompatibleDatum:
    """Quantum linear space datum with lifting scalars mu_i and lambda_ij."""

    __slots__ = ("datum", "mus", "lams")

    def __init__(self, datum, mus, lams=None):
        self.datum = datum
        self.mus = tuple(_cyc(m) for m in mus)
        table = {}
        for (i, j), value in (lams or {}).items():
            if not 0 <= i < j < datum.theta:
                raise ValueError(f"lambda index pair {(i, j)} out of range")
            value = _cyc(value)
            if not value.is_zero:
                table[(i, j)] = value
        self.lams = table

    @property
    def group(self):
        return self.datum.group

    def lam(self, i, j):
        return self.lams.get((i, j), _ZERO)

    def presentation(self, symbolic=False):
        return Presentation(self.group, self.datum.gs, self.datum.chis,
                            self.mus, self.lams, symbolic=symbolic)

    def __repr__(self):
        return f"CompatibleDatum({self.datum!r}, mus={self.mus}, lams={self.lams})"


def _cyc(c):
    return c if isinstance(c, Cyclotomic) else Cyclotomic(c)


def validate_compatible(datum, mus, lams=None):
    """A validated compatible datum, or the list of violations."""
    cd = CompatibleDatum(datum, mus, lams)
    violations = []
    for i, mu in enumerate(cd.mus):
        if not (mu.is_zero or mu.is_one):
            violations.append(("mu_value", i))
            continue
        if mu.is_one:
            g_power = datum.gs[i] ** datum.orders[i]
            chi_power = datum.chis[i] ** datum.orders[i]
            if g_power.is_identity or not chi_power.is_trivial:
                violations.append(("power_scalar", i))
    for (i, j), lam in sorted(cd.lams.items()):
        if (datum.gs[i] * datum.gs[j]).is_identity or not (datum.chis[i] * datum.chis[j]).is_trivial:
            violations.append(("pair_scalar", i, j))
    # A nonzero lambda pins down the partner's character; two distinct partners
    # force q_t^2 = 1, impossible at odd order.
    for t in range(datum.theta):
        partners = sorted(
            {j for (i, j) in cd.lams if i == t} | {i for (i, j) in cd.lams if j == t}
        )
        if len(partners) > 1 and datum.orders[t] % 2 == 1:
            violations.append(("shared_partner", t, tuple(partners)))
    return violations if violations else cd


def _word_name(group, sigma, word):
    hexps = [0] * sigma
    a_counts = {}
    for letter in word:
        if letter < sigma:
            hexps[letter] += 1
        else:
            a_counts[letter - sigma] = a_counts.get(letter - sigma, 0) + 1
    parts = []
    g = group.element(tuple(hexps))
    if not g.is_identity:
        parts.append(group_element_name(g))
    for i in sorted(a_counts):
        e = a_counts[i]
        parts.append(f"a{i + 1}" if e == 1 else f"a{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def build_lifting(cd, check=True):
    """The lifted Hopf algebra of a compatible datum, by rewriting to normal form."""
    if check:
        result = validate_compatible(cd.datum, cd.mus, cd.lams)
        if not isinstance(result, CompatibleDatum):
            raise ValueError(f"incompatible datum: {result}")
    datum = cd.datum
    group = datum.group
    P = cd.presentation()
    if check and not check_overlaps(P).confluent:
        raise RuntimeError("rewriting system failed to resolve an overlap")

    words = P.irreducible_words()
    index = {w: i for i, w in enumerate(words)}
    sigma = group.rank
    names = tuple(_word_name(group, sigma, w) for w in words)

    def to_vector(combo):
        out = {}
        for w, c in combo.items():
            k = index[w]
            val = out.get(k, _ZERO) + c
            if val.is_zero:
                out.pop(k, None)
            else:
                out[k] = val
        return out

    mult = {}
    for i, w1 in enumerate(words):
        for j, w2 in enumerate(words):
            mult[(i, j)] = to_vector(P.normal_form(w1 + w2))

    gwords = [P.group_word(g) for g in datum.gs]
    comult = {}
    for idx, w in enumerate(words):
        terms = {((), ()): _ONE}
        for letter in w:
            new = {}
            for (l, r), c in terms.items():
                if letter < sigma:
                    _bump(new, (l + (letter,), r + (letter,)), c)
                else:
                    i = letter - sigma
                    _bump(new, (l + (letter,), r), c)
                    _bump(new, (l + gwords[i], r + (letter,)), c)
            terms = new
        vec = {}
        for (l, r), c in terms.items():
            for wl, cl in P.normal_form(l).items():
                for wr, cr in P.normal_form(r).items():
                    _bump(vec, (index[wl], index[wr]), c * cl * cr)
        comult[idx] = vec

    counit = {i: _ONE for i, w in enumerate(words)
              if all(letter < sigma for letter in w)}

    inv_words = [P.group_word(group.generator(ell).inverse()) for ell in range(sigma)]
    ginv_words = [P.group_word(g.inverse()) for g in datum.gs]
    antipode = {}
    for idx, w in enumerate(words):
        sign = _ONE
        image = ()
        for letter in reversed(w):
            if letter < sigma:
                image += inv_words[letter]
            else:
                sign = -sign
                image += ginv_words[letter - sigma] + (letter,)
        vec = {}
        for wl, c in P.normal_form(image).items():
            _bump(vec, index[wl], sign * c)
        antipode[idx] = vec

    unit = {index[()]: _ONE}
    return StructureHopf(names, mult, comult, unit, counit, antipode)


def _bump(table, key, value):
    val = table.get(key, _ZERO) + value
    if val.is_zero:
        table.pop(key, None)
    else:
        table[key] = val


class FiltrationPrediction:
    """Coradical filtration dimensions and the skew-primitive dimension table."""

    def __init__(self, dims, skew_dims):
        self.dims = tuple(dims)
        self.skew_dims = dict(skew_dims)

    def __repr__(self):
        return f"FiltrationPrediction(dims={self.dims})"


def predicted_filtration(cd):
    """Closed-form coradical filtration and skew-primitive dimensions of a lifting."""
    datum = cd.datum
    monomials = datum.monomials()
    total = sum(n - 1 for n in datum.orders)
    size = datum.group.order
    dims = [size * sum(1 for m in monomials if sum(m) <= n) for n in range(total + 1)]
    skew_dims = {}
    for g in datum.group.elements():
        skew_dims[g] = 1 + sum(1 for gi in datum.gs if gi == g)
    return FiltrationPrediction(dims, skew_dims)


def family_datum(M, N, q, lam):
    """Rank-two compatible datum over Z/MN with chi_1(y) = q and both mu = 1."""
    if M <= 1:
        raise ValueError("M must exceed 1")
    if N <= 2:
        raise ValueError("N must exceed 2")
    q = _cyc(q)
    if order(q) != N:
        raise ValueError("q must be a primitive N-th root of unity")
    k = next(t for t in range(N) if (Cyclotomic.root_of_unity(N) ** t) == q)
    group = AbelianGroup([M * N])
    y = group.element((1,))
    chi1 = group.character((k * M,))
    chi2 = chi1.inverse()
    datum = QLSDatum(group, [y, y], [chi1, chi2])
    return CompatibleDatum(datum, [1, 1], {(0, 1): lam})


def build_family_B(M, N, q, lam):
    """The pointed Hopf algebra of dimension M*N^3 with lifted power and pair relations."""
    return build_lifting(family_datum(M, N, q, lam))


def family_iso(M, N, q, lam, lam2):
    """Whether the family members for lam and lam2 are isomorphic: lam2 in G_N * lam."""
    lam = _cyc(lam)
    lam2 = _cyc(lam2)
    if lam.is_zero or lam2.is_zero:
        return lam.is_zero and lam2.is_zero
    root = Cyclotomic.root_of_unity(N)
    return any(lam2 == (root ** t) * lam for t in range(N))


def automorphisms(M, N, q, lam):
    """All Hopf automorphisms of a family member: verified diagonal maps."""
    H = build_family_B(M, N, q, lam)
    lam = _cyc(lam)
    cd = family_datum(M, N, q, lam)
    words = cd.presentation().irreducible_words()
    root = Cyclotomic.root_of_unity(N)
    out = []
    for s in range(N):
        for t in range(N):
            alpha = root ** s
            beta = root ** t
            if not lam.is_zero and not (alpha * beta).is_one:
                continue
            table = {}
            for idx, w in enumerate(words):
                n1 = sum(1 for letter in w if letter == 1)
                n2 = sum(1 for letter in w if letter == 2)
                table[idx] = {idx: alpha ** n1 * beta ** n2}
            if is_bialgebra_map(H, H, table):
                out.append(table)
    return out


__all__ = [
    "CompatibleDatum", "validate_compatible", "build_lifting",
    "predicted_filtration", "FiltrationPrediction", "family_datum",
    "build_family_B", "family_iso", "automorphisms",
]
