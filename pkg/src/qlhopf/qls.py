"""Quantum linear spaces as braided Hopf algebras, and their bosonization."""

from itertools import product

from .abelian import evaluate
from .cyclotomic import Cyclotomic, order
from .hopfcore import StructureHopf, group_algebra, verify_axioms

_ONE = Cyclotomic(1)
_ZERO = Cyclotomic(0)


class QLSDatum:
    """Finite abelian group with elements g_i and characters chi_i in general position."""

    __slots__ = ("group", "theta", "gs", "chis", "qs", "orders")

    def __init__(self, group, gs, chis):
        gs = tuple(gs)
        chis = tuple(chis)
        if len(gs) != len(chis):
            raise ValueError("need one character per group element")
        qs = tuple(evaluate(chi, g) for chi, g in zip(chis, gs))
        orders = []
        for i, q in enumerate(qs):
            if q.is_one:
                raise ValueError(f"diagonal scalar q_{i} must differ from 1")
            orders.append(order(q))
        self.group = group
        self.theta = len(gs)
        self.gs = gs
        self.chis = chis
        self.qs = qs
        self.orders = tuple(orders)

    @property
    def dimension(self):
        out = 1
        for n in self.orders:
            out *= n
        return out

    def monomials(self):
        """Exponent tuples below the order bound, lexicographic."""
        return list(product(*(range(n) for n in self.orders)))

    def pair_violations(self):
        """Index pairs where chi_j(g_i) * chi_i(g_j) != 1."""
        out = []
        for i in range(self.theta):
            for j in range(i + 1, self.theta):
                c = evaluate(self.chis[j], self.gs[i]) * evaluate(self.chis[i], self.gs[j])
                if not c.is_one:
                    out.append((i, j))
        return out

    def __repr__(self):
        return f"QLSDatum(theta={self.theta}, orders={self.orders})"


def validate_datum(group, gs, chis):
    """A validated datum, or the list of violations, each naming its indices."""
    violations = []
    gs = tuple(gs)
    chis = tuple(chis)
    for i, (g, chi) in enumerate(zip(gs, chis)):
        if evaluate(chi, g).is_one:
            violations.append(("diagonal", i))
    if not violations:
        datum = QLSDatum(group, gs, chis)
        violations.extend(("pair", i, j) for i, j in datum.pair_violations())
        if not violations:
            return datum
    return violations


def _monomial_name(exps):
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def group_element_name(g):
    parts = []
    single = len(g.exponents) == 1
    for ell, e in enumerate(g.exponents):
        stem = "y" if single else f"y{ell + 1}"
        if e == 1:
            parts.append(stem)
        elif e > 1:
            parts.append(f"{stem}^{e}")
    return "*".join(parts) if parts else "e"


def build_qls(datum, check=True):
    """The braided Hopf algebra with relations x_i^{N_i} = 0, x_i x_j = chi_j(g_i) x_j x_i."""
    if check:
        bad = datum.pair_violations()
        if bad:
            raise ValueError(f"datum violates the pair condition at {bad}")
    group = datum.group
    theta = datum.theta
    orders = datum.orders
    monomials = datum.monomials()
    index = {m: i for i, m in enumerate(monomials)}
    names = tuple(_monomial_name(m) for m in monomials)

    # chi_u(g_v), the factor picked up when x_u moves left past x_v.
    cross = [[evaluate(datum.chis[u], datum.gs[v]) for v in range(theta)] for u in range(theta)]

    mult = {}
    for i, a in enumerate(monomials):
        for j, b in enumerate(monomials):
            total = tuple(x + y for x, y in zip(a, b))
            if any(t >= n for t, n in zip(total, orders)):
                mult[(i, j)] = {}
                continue
            c = _ONE
            for u in range(theta):
                if not b[u]:
                    continue
                for v in range(u + 1, theta):
                    if a[v]:
                        c = c * cross[u][v] ** (a[v] * b[u])
            mult[(i, j)] = {index[total]: c}

    degrees = []
    characters = []
    for m in monomials:
        g = group.identity()
        chi = group.trivial_character()
        for i, e in enumerate(m):
            g = g * datum.gs[i] ** e
            chi = chi * datum.chis[i] ** e
        degrees.append(g)
        characters.append(chi)

    def tensor_mult(x, y):
        # (a (x) b)(c (x) d) = chi_c(deg b) * ac (x) bd on basis tensors.
        out = {}
        for (i, j), c in x.items():
            for (k, l), dcf in y.items():
                factor = c * dcf * evaluate(characters[k], degrees[j])
                for r, cr in mult[(i, k)].items():
                    for s, cs in mult[(j, l)].items():
                        key = (r, s)
                        val = out.get(key, _ZERO) + factor * cr * cs
                        if val.is_zero:
                            out.pop(key, None)
                        else:
                            out[key] = val
        return out

    zero_idx = index[tuple([0] * theta)]
    gen_comult = []
    for i in range(theta):
        e_i = tuple(1 if t == i else 0 for t in range(theta))
        gen_comult.append({(index[e_i], zero_idx): _ONE, (zero_idx, index[e_i]): _ONE})

    comult_vecs = [None] * len(monomials)
    comult_vecs[zero_idx] = {(zero_idx, zero_idx): _ONE}
    for idx, m in enumerate(monomials):
        if idx == zero_idx:
            continue
        last = max(i for i, e in enumerate(m) if e)
        prev = tuple(e - 1 if i == last else e for i, e in enumerate(m))
        comult_vecs[idx] = tensor_mult(comult_vecs[index[prev]], gen_comult[last])

    comult = {i: vec for i, vec in enumerate(comult_vecs)}
    unit = {zero_idx: _ONE}
    counit = {zero_idx: _ONE}

    # Antipode by convolution inversion, ascending total degree.
    antipode = {}
    order_by_degree = sorted(range(len(monomials)), key=lambda i: sum(monomials[i]))
    for idx in order_by_degree:
        if idx == zero_idx:
            antipode[zero_idx] = {zero_idx: _ONE}
            continue
        acc = {}
        for (l, r), c in comult_vecs[idx].items():
            if l == idx:
                continue
            for k, ck in antipode[l].items():
                for s, cs in mult[(k, r)].items():
                    val = acc.get(s, _ZERO) + c * ck * cs
                    if val.is_zero:
                        acc.pop(s, None)
                    else:
                        acc[s] = val
        antipode[idx] = {s: -c for s, c in acc.items()}

    return StructureHopf(names, mult, comult, unit, counit, antipode,
                         kind="braided", group=group, degrees=degrees,
                         characters=characters)


def verify_braided(R):
    """Exact braided-bialgebra, homogeneity, and antipode verification."""
    if R.kind != "braided":
        raise ValueError("expected a braided algebra")
    return verify_axioms(R)


def bosonize(R):
    """The ordinary Hopf algebra on R # k(group), smash product and smash coproduct."""
    if R.kind != "braided":
        raise ValueError("bosonization needs a braided algebra")
    if R.antipode is None:
        raise ValueError("bosonization needs the antipode table")
    group = R.group
    elements = list(group.elements())
    el_index = {g: i for i, g in enumerate(elements)}
    m = len(elements)
    dim = R.dim * m

    def pair(r, t):
        return r * m + t

    names = tuple(f"{R.names[r]}#{group_element_name(g)}"
                  for r in range(R.dim) for g in elements)

    mult = {}
    for r in range(R.dim):
        for t, gamma in enumerate(elements):
            for s in range(R.dim):
                # (r # gamma)(s # delta) = chi_s(gamma) * rs # gamma delta
                factor = evaluate(R.characters[s], gamma)
                base = R.mult.get((r, s), {})
                for u, delta in enumerate(elements):
                    tu = el_index[gamma * delta]
                    mult[(pair(r, t), pair(s, u))] = {
                        pair(k, tu): factor * c for k, c in base.items()
                    }

    comult = {}
    for r in range(R.dim):
        legs = R.comult.get(r, {})
        for t, gamma in enumerate(elements):
            vec = {}
            for (l, rr), c in legs.items():
                key = (pair(l, el_index[R.degrees[rr] * gamma]), pair(rr, t))
                val = vec.get(key, _ZERO) + c
                if val.is_zero:
                    vec.pop(key, None)
                else:
                    vec[key] = val
            comult[pair(r, t)] = vec

    counit = {}
    for r, c in R.counit.items():
        for t in range(m):
            counit[pair(r, t)] = c

    # S(r # gamma) = (1 # (deg(r) gamma)^{-1}) (S_R(r) # e)
    antipode = {}
    for r in range(R.dim):
        for t, gamma in enumerate(elements):
            inv = (R.degrees[r] * gamma).inverse()
            ti = el_index[inv]
            vec = {}
            for k, c in R.antipode.get(r, {}).items():
                vec[pair(k, ti)] = c * evaluate(R.characters[k], inv)
            antipode[pair(r, t)] = vec

    unit_r = list(R.unit)
    if len(unit_r) != 1:
        raise ValueError("braided unit must be a single basis vector")
    unit = {pair(unit_r[0], el_index[group.identity()]): R.unit[unit_r[0]]}

    return StructureHopf(names, mult, comult, unit, counit, antipode)


def qls_over_group_algebra(datum, check=True):
    """Bosonization of the datum's quantum linear space in one step."""
    return bosonize(build_qls(datum, check=check))


__all__ = [
    "QLSDatum", "validate_datum", "build_qls", "verify_braided", "bosonize",
    "group_element_name", "qls_over_group_algebra",
]
