"""Census of dimension p^3 pointed Hopf algebras, rank search, shape enumeration."""

from .abelian import AbelianGroup, evaluate
from .cyclotomic import Cyclotomic, order
from .hopfcore import invariant_record
from .isosearch import find_isomorphism
from .lifting import CompatibleDatum, build_lifting, validate_compatible
from .qls import QLSDatum, validate_datum

_ONE = Cyclotomic(1)


class CensusEntry:
    """One constructed algebra with its label, datum, and invariant fingerprint."""

    __slots__ = ("label", "kind", "params", "datum", "algebra", "record")

    def __init__(self, label, kind, params, datum, algebra, record=None):
        self.label = label
        self.kind = kind
        self.params = dict(params)
        self.datum = datum
        self.algebra = algebra
        self.record = record

    def __repr__(self):
        return "CensusEntry(%r, dim=%d)" % (self.label, self.algebra.dim)


def _check_odd_prime(p):
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p ** 0.5) + 1, 2)):
        raise ValueError("census requires an odd prime")


def build_p3_list(p, q_exponents=None, ms=None, with_records=True):
    """Construct the six families of dimension p^3 pointed Hopf algebras."""
    _check_odd_prime(p)
    qs = list(q_exponents) if q_exponents is not None else list(range(1, p))
    mlist = list(ms) if ms is not None else list(range(1, p))
    p2 = p * p
    entries = []

    def add(label, kind, params, cd):
        algebra = build_lifting(cd)
        record = invariant_record(algebra) if with_records else None
        entries.append(CensusEntry(label, kind, params, cd, algebra, record))

    Gpp = AbelianGroup([p, p])
    Gp2 = AbelianGroup([p2])
    Gp = AbelianGroup([p])
    for j in qs:
        # (a) nilpotent generator over Z/p x Z/p, character on the first factor
        datum = QLSDatum(Gpp, [Gpp.element((p - 1, 0))], [Gpp.character((j, 0))])
        add("(a) q=zeta_%d^%d" % (p, j), "a", {"q_exp": j},
            CompatibleDatum(datum, [0]))
    for j in qs:
        # (b) order-p^2 character: chi(y) is the principal p-th root of q
        datum = QLSDatum(Gp2, [Gp2.element(((-p) % p2,))], [Gp2.character((j,))])
        add("(b) q=zeta_%d^%d" % (p, j), "b", {"q_exp": j},
            CompatibleDatum(datum, [0]))
    for j in qs:
        # (c) order-p character on Z/p^2 with nilpotent generator
        datum = QLSDatum(Gp2, [Gp2.element((p2 - 1,))], [Gp2.character((p * j,))])
        add("(c) q=zeta_%d^%d" % (p, j), "c", {"q_exp": j},
            CompatibleDatum(datum, [0]))
    for j in qs:
        # (d) same datum as (c) but with the non-trivial power relation
        datum = QLSDatum(Gp2, [Gp2.element((p2 - 1,))], [Gp2.character((p * j,))])
        add("(d) q=zeta_%d^%d" % (p, j), "d", {"q_exp": j},
            CompatibleDatum(datum, [1]))
    for j in qs:
        # (e) two generators at y^-1 with characters q^2, q^-2 and linking scalar -1
        ginv = Gp.element((p - 1,))
        datum = QLSDatum(Gp, [ginv, ginv],
                         [Gp.character((2 * j % p,)), Gp.character(((-2 * j) % p,))])
        add("(e) q=zeta_%d^%d" % (p, j), "e", {"q_exp": j},
            CompatibleDatum(datum, [0, 0], {(0, 1): -1}))
    for j in qs:
        for m in mlist:
            # (f) generators at y^-1 and y^m with characters q, q^m; no linking
            datum = QLSDatum(Gp, [Gp.element((p - 1,)), Gp.element((m % p,))],
                             [Gp.character((j,)), Gp.character((j * m % p,))])
            add("(f) q=zeta_%d^%d m=%d" % (p, j, m), "f", {"q_exp": j, "m": m},
                CompatibleDatum(datum, [0, 0]))
    return entries


def distinguish(entries):
    """Pairwise distinct/isomorphic/undecided matrix with witnesses."""
    n = len(entries)
    matrix = [[("same", "")] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = entries[i], entries[j]
            if a.record is None or b.record is None:
                raise ValueError("distinguish requires invariant records")
            diffs = a.record.differences(b.record)
            if diffs:
                cell = ("distinct", diffs[0])
            else:
                res = find_isomorphism(a.algebra, b.algebra)
                if res.status == "isomorphism":
                    cell = ("isomorphic", "verified map")
                elif res.status == "no_isomorphism":
                    cell = ("distinct", "isomorphism search")
                else:
                    cell = ("undecided", res.detail)
            matrix[i][j] = cell
            matrix[j][i] = cell
    return matrix


class ThetaResult:
    """Maximal datum rank found for a group, with a validated witness."""

    __slots__ = ("theta", "exact", "witness", "vertex_count")

    def __init__(self, theta, exact, witness, vertex_count):
        self.theta = theta
        self.exact = exact
        self.witness = witness
        self.vertex_count = vertex_count

    def __repr__(self):
        bound = "=" if self.exact else ">="
        return "ThetaResult(theta %s %d)" % (bound, self.theta)


def theta_search(group, max_rank=8, order_bound=64):
    """Largest rank of a valid datum over the group, via maximum clique."""
    if group.order > order_bound:
        raise ValueError("group order exceeds the configured search bound")
    verts = []
    for g in group.elements():
        for chi in group.characters():
            q = evaluate(chi, g)
            if not q.is_one:
                verts.append((g, chi, q))
    if not verts:
        return ThetaResult(0, True, None, 0)

    for g, chi, q in verts:
        if (q * q).is_one:
            # a self-compatible slot repeats freely, so only a lower bound exists
            witness = validate_datum(group, [g] * max_rank, [chi] * max_rank)
            return ThetaResult(max_rank, False, witness, len(verts))

    n = len(verts)
    adj = [set() for _ in range(n)]
    for i in range(n):
        gi, ci, _ = verts[i]
        for j in range(i + 1, n):
            gj, cj, _ = verts[j]
            if (evaluate(ci, gj) * evaluate(cj, gi)).is_one:
                adj[i].add(j)
                adj[j].add(i)

    best = []

    def expand(clique, cand):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        if len(best) >= max_rank or not cand:
            return
        # greedy coloring gives the branch-and-bound ceiling
        ordered = sorted(cand, key=lambda v: -len(adj[v] & cand))
        classes = []
        colors = {}
        for v in ordered:
            for ci, cl in enumerate(classes):
                if not (cl & adj[v]):
                    cl.add(v)
                    colors[v] = ci + 1
                    break
            else:
                classes.append({v})
                colors[v] = len(classes)
        for v in sorted(cand, key=lambda v: colors[v], reverse=True):
            if len(clique) + colors[v] <= len(best):
                return
            expand(clique + [v], cand & adj[v])
            cand = cand - {v}
            if len(best) >= max_rank:
                return

    expand([], set(range(n)))
    theta = len(best)
    witness = None
    if theta:
        witness = validate_datum(group, [verts[i][0] for i in best],
                                 [verts[i][1] for i in best])
        if not isinstance(witness, QLSDatum):
            raise ValueError("clique produced an invalid datum")
    return ThetaResult(theta, theta < max_rank, witness, n)


def _prime_power(index):
    root = int(round(index ** 0.5))
    if root * root == index and root > 1:
        _check_odd_prime(root)
        return root, 2
    _check_odd_prime(index)
    return index, 1


def enumerate_theorem_0_2(group, index, lam_values=(0, 1), g_exponents=None,
                          chi_exponents=None, group_isomorphism=True,
                          max_dimension=162):
    """All liftings of the given index over the group, tagged by relation shape."""
    p, e = _prime_power(index)
    if group.order * index > max_dimension:
        raise ValueError("requested enumeration exceeds the dimension bound")
    gs = [g for g in group.elements()
          if g_exponents is None or g.exponents in set(g_exponents)]
    chis = [c for c in group.characters()
            if chi_exponents is None or c.exponents in set(chi_exponents)]
    entries = []

    def add(shape, slots, mus, lams):
        datum = validate_datum(group, [s[0] for s in slots], [s[1] for s in slots])
        if not isinstance(datum, QLSDatum):
            return
        cd = validate_compatible(datum, mus, lams)
        if not isinstance(cd, CompatibleDatum):
            return
        algebra = build_lifting(cd)
        record = invariant_record(algebra) if group_isomorphism else None
        bits = " ".join("g%d=%r chi%d=%r" % (t + 1, s[0].exponents, t + 1,
                                             s[1].exponents)
                        for t, s in enumerate(slots))
        label = "(%s) %s mu=%r lam=%r" % (shape, bits, tuple(mus),
                                          sorted(lams.items()) if lams else [])
        entries.append(CensusEntry(label, shape, {"mus": tuple(mus)},
                                   cd, algebra, record))

    for g in gs:
        for chi in chis:
            q = evaluate(chi, g)
            if q.is_one or order(q) != index:
                continue
            shape = "A" if e == 1 else "B1"
            mu_opts = [0]
            if not (g ** index).is_identity and (chi ** index).is_trivial:
                mu_opts.append(1)
            for mu in mu_opts:
                add(shape, [(g, chi)], [mu], None)

    if e == 2:
        verts = []
        for g in gs:
            for chi in chis:
                q = evaluate(chi, g)
                if not q.is_one and order(q) == p:
                    verts.append((g, chi))
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                g1, c1 = verts[i]
                g2, c2 = verts[j]
                if not (evaluate(c1, g2) * evaluate(c2, g1)).is_one:
                    continue
                mu_opts = []
                for g, chi in ((g1, c1), (g2, c2)):
                    opts = [0]
                    if not (g ** p).is_identity and (chi ** p).is_trivial:
                        opts.append(1)
                    mu_opts.append(opts)
                lam_opts = [None]
                if not (g1 * g2).is_identity and (c1 * c2).is_trivial:
                    for v in lam_values:
                        lv = v if isinstance(v, Cyclotomic) else Cyclotomic(v)
                        if not lv.is_zero:
                            lam_opts.append(lv)
                for m1 in mu_opts[0]:
                    for m2 in mu_opts[1]:
                        for lam in lam_opts:
                            lams = None if lam is None else {(0, 1): lam}
                            add("B2", [(g1, c1), (g2, c2)], [m1, m2], lams)

    classes = _iso_classes(entries) if group_isomorphism else ()
    return entries, classes


def _iso_classes(entries):
    classes = []
    for idx, entry in enumerate(entries):
        placed = False
        for cls in classes:
            rep = entries[cls[0]]
            if rep.record != entry.record:
                continue
            if find_isomorphism(rep.algebra, entry.algebra).found:
                cls.append(idx)
                placed = True
                break
        if not placed:
            classes.append([idx])
    return tuple(tuple(c) for c in classes)


__all__ = [
    "CensusEntry", "build_p3_list", "distinguish",
    "ThetaResult", "theta_search", "enumerate_theorem_0_2",
]
