"""Bounded isomorphism search between pointed Hopf algebras generated in degree one."""

from .abelian import automorphisms
from .cyclotomic import Cyclotomic
from .hopfcore import grouplikes, is_bialgebra_map, skew_primitives
from .rewrite import ScalarPoly

_ZERO = Cyclotomic(0)
_ONE = Cyclotomic(1)
_SP0 = ScalarPoly()


class IsoResult:
    """Outcome of an isomorphism search, carrying any verified maps."""

    __slots__ = ("status", "table", "maps", "detail")

    def __init__(self, status, table=None, maps=(), detail=""):
        self.status = status
        self.table = table
        self.maps = tuple(maps)
        self.detail = detail

    @property
    def found(self):
        return self.status == "isomorphism"

    def __repr__(self):
        return "IsoResult(%r, maps=%d, detail=%r)" % (
            self.status, len(self.maps), self.detail)


def find_isomorphism(A, B, bound=128, node_cap=20000):
    """Search for a Hopf isomorphism A -> B; any returned map is re-verified."""
    maps, complete, detail = _search(A, B, want_all=False, gauge=True,
                                     bound=bound, node_cap=node_cap)
    if maps:
        return IsoResult("isomorphism", table=maps[0], maps=maps, detail=detail)
    if complete:
        return IsoResult("no_isomorphism", detail=detail)
    return IsoResult("bound_exceeded", detail=detail)


def find_isomorphisms_all(A, B, bound=128, node_cap=20000):
    """Enumerate all Hopf isomorphisms A -> B; no free scalars are gauge-fixed."""
    maps, complete, detail = _search(A, B, want_all=True, gauge=False,
                                     bound=bound, node_cap=node_cap)
    if not complete:
        return IsoResult("bound_exceeded", table=maps[0] if maps else None,
                         maps=maps, detail=detail)
    if maps:
        return IsoResult("isomorphism", table=maps[0], maps=maps, detail=detail)
    return IsoResult("no_isomorphism", detail=detail)


def _search(A, B, want_all, gauge, bound, node_cap):
    if A.kind != "ordinary" or B.kind != "ordinary":
        raise ValueError("isomorphism search expects ordinary Hopf algebra data")
    if A.dim != B.dim:
        return [], True, "dimensions differ"
    ra = grouplikes(A)
    rb = grouplikes(B)
    if not (ra.complete and rb.complete):
        return [], False, "group-like enumeration incomplete"
    if ra.invariant_factors != rb.invariant_factors:
        return [], True, "group-like invariants differ"
    slots_a = _slot_table(A, ra)
    slots_b = _slot_table(B, rb)
    if sorted(d for d, _ in slots_a.values()) != sorted(d for d, _ in slots_b.values()):
        return [], True, "skew-primitive eigenspace profile differs"

    if ra.count <= 1:
        sigmas = [None]
        F = None
    else:
        F = ra.group()
        try:
            sigmas = list(automorphisms(F, bound=bound))
        except ValueError:
            return [], False, "group automorphism enumeration exceeded bound"
        sigmas.sort(key=lambda s: 0 if s.is_identity() else 1)
    exp_to_b = {rb.exponents[i]: i for i in range(rb.count)}

    results = []
    seen = set()
    complete = True
    for sigma in sigmas:
        if sigma is None:
            elem_map = tuple(range(ra.count))

            def chi_map(exps):
                return exps
        else:
            sig_inv = sigma.inverse()
            elem_map = tuple(
                exp_to_b[tuple(sigma.apply(F.element(e)).exponents)]
                for e in ra.exponents)

            def chi_map(exps, _inv=sig_inv):
                return tuple(_inv.apply_character(F.character(exps)).exponents)

        pairing = []
        for key in sorted(slots_a):
            gi, chi_exps = key
            target = (elem_map[gi], chi_map(chi_exps))
            hit = slots_b.get(target)
            if hit is None or hit[0] != slots_a[key][0]:
                pairing = None
                break
            pairing.append((slots_a[key], hit))
        if pairing is None:
            continue

        var_names = []
        gen_pairs = []
        for (dim_a, basis_a), (dim_b, basis_b) in pairing:
            for va in basis_a:
                img = {}
                for vb in basis_b:
                    name = "al%d" % len(var_names)
                    var_names.append(name)
                    pv = ScalarPoly.variable(name)
                    for j, cj in dict(vb).items():
                        img[j] = img.get(j, _SP0) + pv * cj
                gen_pairs.append((dict(va), img))

        rows = {}
        equations = []
        eq_seen = set()
        frontier = []
        for i in range(ra.count):
            bimg = {j: ScalarPoly.constant(c)
                    for j, c in rb.vector(elem_map[i]).items()}
            added = _insert(rows, dict(ra.vector(i)), bimg, equations, eq_seen)
            if added is not None:
                frontier.append(added)
        for avec, img in gen_pairs:
            added = _insert(rows, dict(avec), dict(img), equations, eq_seen)
            if added is not None:
                frontier.append(added)

        prod_gens = []
        for gidx in ra.generators:
            bimg = {j: ScalarPoly.constant(c)
                    for j, c in rb.vector(elem_map[gidx]).items()}
            prod_gens.append((dict(ra.vector(gidx)), bimg))
        prod_gens.extend(gen_pairs)

        while frontier:
            fresh = []
            for arow, brow in frontier:
                for gvec, gimg in prod_gens:
                    pa = A.multiply(arow, gvec)
                    pb = _sym_mult(B, brow, gimg)
                    added = _insert(rows, pa, pb, equations, eq_seen)
                    if added is not None:
                        fresh.append(added)
            frontier = fresh

        if len(rows) < A.dim:
            # generators plus group-likes failed to span: outside the searched family
            complete = False
            continue

        sols, sol_complete = _solve_constraints(equations, var_names, gauge, node_cap)
        if not sol_complete:
            complete = False

        sym_table = {i: _express(rows, i) for i in range(A.dim)}
        for assign in sols:
            table = {}
            for i in range(A.dim):
                conc = {}
                for j, poly in sym_table[i].items():
                    val = poly.substitute(assign)
                    if not val.is_zero:
                        conc[j] = val
                table[i] = conc
            if not _invertible(table, A.dim):
                continue
            if not is_bialgebra_map(A, B, table):
                continue
            key = tuple(sorted((i, tuple(sorted(row.items())))
                               for i, row in table.items()))
            if key in seen:
                continue
            seen.add(key)
            results.append(table)
            if not want_all:
                return results, complete, "verified against structure constants"

    detail = "searched %d group automorphism candidate(s)" % len(sigmas)
    return results, complete, detail


def _slot_table(H, report):
    """Skew-primitive eigencomponents that carry generators, keyed (g, character)."""
    slots = {}
    unit = H.unit
    for gi in range(report.count):
        rep = skew_primitives(H, report.vector(gi), unit, report)
        for chi, dim_c, basis in rep.components:
            if chi.is_trivial and dim_c == 1:
                continue  # the line through g - 1, already determined by the group map
            slots[(gi, tuple(chi.exponents))] = (dim_c, basis)
    return slots


def _insert(rows, vec, img, equations, eq_seen):
    """Insert a (source, symbolic image) pair into a triangular row set."""
    vec = {i: c for i, c in vec.items() if not c.is_zero}
    img = {j: p for j, p in img.items() if not p.is_zero}
    while vec:
        p = min(vec)
        if p not in rows:
            inv = vec[p].inverse()
            row = {i: inv * c for i, c in vec.items()}
            rimg = {j: q * inv for j, q in img.items() if not (q * inv).is_zero}
            rows[p] = (row, rimg)
            return rows[p]
        c = vec.pop(p)
        row, rimg = rows[p]
        for i, ci in row.items():
            if i == p:
                continue
            s = vec.get(i, _ZERO) - c * ci
            if s.is_zero:
                vec.pop(i, None)
            else:
                vec[i] = s
        for j, q in rimg.items():
            s = img.get(j, _SP0) - q * c
            if s.is_zero:
                img.pop(j, None)
            else:
                img[j] = s
    for q in img.values():
        eq = _normalize_eq(q)
        if eq not in eq_seen:
            eq_seen.add(eq)
            equations.append(eq)
    return None


def _normalize_eq(poly):
    mono = min(poly.terms)
    return poly * poly.terms[mono].inverse()


def _sym_mult(B, x, y):
    out = {}
    for i, ci in x.items():
        for j, cj in y.items():
            coeff = ci * cj
            if coeff.is_zero:
                continue
            for k, ck in B.mult.get((i, j), {}).items():
                s = out.get(k, _SP0) + coeff * ck
                if s.is_zero:
                    out.pop(k, None)
                else:
                    out[k] = s
    return out


def _express(rows, i):
    """Write basis vector i in terms of the triangular rows; return its image."""
    vec = {i: _ONE}
    img = {}
    while vec:
        p = min(vec)
        c = vec.pop(p)
        row, rimg = rows[p]
        for q, cq in row.items():
            if q == p:
                continue
            s = vec.get(q, _ZERO) - c * cq
            if s.is_zero:
                vec.pop(q, None)
            else:
                vec[q] = s
        for j, pj in rimg.items():
            s = img.get(j, _SP0) + pj * c
            if s.is_zero:
                img.pop(j, None)
            else:
                img[j] = s
    return img


def _partial_sub(poly, assign):
    terms = {}
    for mono, c in poly.terms.items():
        value = c
        rest = []
        for v, e in mono:
            if v in assign:
                value = value * assign[v] ** e
            else:
                rest.append((v, e))
        if value.is_zero:
            continue
        key = tuple(rest)
        s = terms.get(key, _ZERO) + value
        if s.is_zero:
            terms.pop(key, None)
        else:
            terms[key] = s
    return ScalarPoly(terms)


def _nth_roots(s, k):
    """All solutions of x^k = s when s is a root of unity; None when unknown."""
    if k == 1:
        return [s]
    root = s._as_root()
    if root is None:
        return None
    sign, level, j = root
    if sign < 0:
        level, j = 2 * level, (2 * j + level) % (2 * level)
    big = k * level
    return [Cyclotomic.root_of_unity(big, (j + t * level) % big) for t in range(k)]


def _binomial_roots(eq, var, state):
    """Roots of a one-variable equation with at most two monomials."""
    items = sorted(eq.terms.items(), key=lambda kv: kv[0])
    if len(items) == 1:
        return []  # c * var^n = 0 forces var = 0, never invertible
    (m0, c0), (m1, c1) = items
    e0 = dict(m0).get(var, 0)
    e1 = dict(m1).get(var, 0)
    if e0 == e1:
        return []
    if e0 > e1:
        e0, c0, e1, c1 = e1, c1, e0, c0
    # var^(e1 - e0) = -c0 / c1 after cancelling the invertible var^e0
    roots = _nth_roots(-c0 / c1, e1 - e0)
    if roots is None:
        state["complete"] = False
        return []
    return roots


def _solve_constraints(equations, variables, gauge, node_cap):
    """Enumerate scalar assignments satisfying the collected equations."""
    sols = []
    state = {"nodes": 0, "complete": True}

    def walk(assign, polys):
        if state["nodes"] >= node_cap:
            state["complete"] = False
            return
        state["nodes"] += 1
        pending = []
        for p in polys:
            q = _partial_sub(p, assign)
            if q.is_zero:
                continue
            if not q.variables():
                return  # nonzero constant: contradiction
            pending.append(q)
        free = [v for v in variables if v not in assign]
        if not free:
            sols.append(dict(assign))
            return
        target = None
        for q in pending:
            vs = q.variables()
            if len(vs) == 1 and len(q.terms) <= 2:
                target = (q, next(iter(vs)))
                break
        if target is None:
            if gauge:
                # unconstrained scale on a generator: pin it and verify concretely
                nxt = dict(assign)
                nxt[free[0]] = _ONE
                state["complete"] = False
                walk(nxt, pending)
            else:
                state["complete"] = False
            return
        q, v = target
        for root in _binomial_roots(q, v, state):
            nxt = dict(assign)
            nxt[v] = root
            walk(nxt, pending)

    walk({}, list(equations))
    return sols, state["complete"]


def _invertible(table, dim):
    tri = {}
    filled = 0
    for i in range(dim):
        vec = dict(table.get(i, {}))
        while vec:
            p = min(vec)
            if p not in tri:
                inv = vec[p].inverse()
                tri[p] = {q: inv * c for q, c in vec.items()}
                filled += 1
                break
            c = vec.pop(p)
            for q, cq in tri[p].items():
                if q == p:
                    continue
                s = vec.get(q, _ZERO) - c * cq
                if s.is_zero:
                    vec.pop(q, None)
                else:
                    vec[q] = s
    return filled == dim


__all__ = ["IsoResult", "find_isomorphism", "find_isomorphisms_all"]
