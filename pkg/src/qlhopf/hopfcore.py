"""Finite-dimensional Hopf algebras as exact sparse structure constants."""

from math import gcd

from .abelian import AbelianGroup, evaluate
from .cyclotomic import Cyclotomic
from .exactla import Subspace, algebra_radical, kernel, rref, solve, vec_clean, vec_sub

_ZERO = Cyclotomic(0)
_ONE = Cyclotomic(1)


def _acc(dst, key, value):
    total = dst.get(key, _ZERO) + value
    if total.is_zero:
        dst.pop(key, None)
    else:
        dst[key] = total


def _freeze(vec):
    return tuple(sorted(vec_clean(vec).items()))


def _clean_table(table):
    out = {}
    for key, row in table.items():
        row = vec_clean(row)
        if row:
            out[key] = row
    return out


class StructureHopf:
    """Hopf algebra (ordinary or braided diagonal) given by sparse tables."""

    __slots__ = (
        "names", "mult", "comult", "unit", "counit", "antipode",
        "kind", "group", "degrees", "characters",
    )

    def __init__(self, names, mult, comult, unit, counit, antipode=None,
                 kind="ordinary", group=None, degrees=None, characters=None):
        if kind not in ("ordinary", "braided"):
            raise ValueError("kind must be 'ordinary' or 'braided'")
        if kind == "braided" and (group is None or degrees is None or characters is None):
            raise ValueError("braided algebras need group, degrees, and characters")
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "mult", _clean_table(mult))
        object.__setattr__(self, "comult", _clean_table(comult))
        object.__setattr__(self, "unit", vec_clean(unit))
        object.__setattr__(self, "counit", vec_clean(counit))
        object.__setattr__(
            self, "antipode", None if antipode is None else _clean_table(antipode)
        )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "degrees", None if degrees is None else tuple(degrees))
        object.__setattr__(
            self, "characters", None if characters is None else tuple(characters)
        )

    def __setattr__(self, name, value):
        raise AttributeError("StructureHopf values are immutable")

    @property
    def dim(self):
        return len(self.names)

    def basis_vector(self, i):
        return {i: _ONE}

    def multiply(self, u, v):
        out = {}
        for i, ci in u.items():
            if ci.is_zero:
                continue
            for j, cj in v.items():
                row = self.mult.get((i, j))
                if not row:
                    continue
                c = ci * cj
                for k, ck in row.items():
                    _acc(out, k, c * ck)
        return out

    def comultiply(self, u):
        out = {}
        for i, ci in u.items():
            row = self.comult.get(i)
            if not row:
                continue
            for jk, c in row.items():
                _acc(out, jk, ci * c)
        return out

    def counit_of(self, u):
        total = _ZERO
        for i, ci in u.items():
            c = self.counit.get(i)
            if c is not None:
                total = total + ci * c
        return total

    def antipode_of(self, u):
        if self.antipode is None:
            raise ValueError("no antipode table on this algebra")
        out = {}
        for i, ci in u.items():
            row = self.antipode.get(i)
            if not row:
                continue
            for j, cj in row.items():
                _acc(out, j, ci * cj)
        return out

    def field_level(self):
        """Least common cyclotomic level of every structure constant."""
        level = 1
        for row in self.mult.values():
            for c in row.values():
                level = level * c.level // gcd(level, c.level)
        for row in self.comult.values():
            for c in row.values():
                level = level * c.level // gcd(level, c.level)
        for table in (self.unit, self.counit):
            for c in table.values():
                level = level * c.level // gcd(level, c.level)
        if self.antipode is not None:
            for row in self.antipode.values():
                for c in row.values():
                    level = level * c.level // gcd(level, c.level)
        return level

    def braiding_factor(self, left_index, right_index):
        """Scalar picked up when basis element right_index crosses left_index."""
        if self.kind != "braided":
            return _ONE
        return evaluate(self.characters[right_index], self.degrees[left_index])

    def to_json_dict(self):
        data = {
            "field_level": self.field_level(),
            "basis": list(self.names),
            "mult": [
                [i, j, [[k, c.to_json()] for k, c in sorted(row.items())]]
                for (i, j), row in sorted(self.mult.items())
            ],
            "comult": [
                [i, [[j, k, c.to_json()] for (j, k), c in sorted(row.items())]]
                for i, row in sorted(self.comult.items())
            ],
            "counit": [[i, c.to_json()] for i, c in sorted(self.counit.items())],
            "antipode": None if self.antipode is None else [
                [i, [[j, c.to_json()] for j, c in sorted(row.items())]]
                for i, row in sorted(self.antipode.items())
            ],
        }
        if self.kind == "braided":
            data["yd"] = {
                "group": self.group.spec_string(),
                "degrees": [list(g.exponents) for g in self.degrees],
                "characters": [list(chi.exponents) for chi in self.characters],
            }
        return data

    @classmethod
    def from_json_dict(cls, data):
        names = tuple(data["basis"])
        d = len(names)
        mult = {}
        for i, j, row in data["mult"]:
            mult[(i, j)] = {k: Cyclotomic.from_json(c) for k, c in row}
        comult = {}
        for i, row in data["comult"]:
            comult[i] = {(j, k): Cyclotomic.from_json(c) for j, k, c in row}
        counit = {i: Cyclotomic.from_json(c) for i, c in data["counit"]}
        antipode = None
        if data.get("antipode") is not None:
            antipode = {
                i: {j: Cyclotomic.from_json(c) for j, c in row}
                for i, row in data["antipode"]
            }
        yd = data.get("yd")
        kind = "ordinary" if yd is None else "braided"
        group = degrees = characters = None
        if yd is not None:
            group = AbelianGroup.from_spec(yd["group"])
            degrees = [group.element(tuple(e)) for e in yd["degrees"]]
            characters = [group.character(tuple(e)) for e in yd["characters"]]
        unit = _solve_unit(mult, d)
        return cls(names, mult, comult, unit, counit, antipode,
                   kind=kind, group=group, degrees=degrees, characters=characters)

    def __repr__(self):
        return "StructureHopf(dim=%d, kind=%s)" % (self.dim, self.kind)


def _solve_unit(mult, d):
    """Recover the unit vector as the two-sided identity of the mult table."""
    rows = []
    rhs = []
    for i in range(d):
        block = {}
        for s in range(d):
            row = mult.get((s, i))
            if row:
                for r, c in row.items():
                    block.setdefault(r, {})[s] = c
        for r, row in block.items():
            rows.append(row)
            rhs.append(_ONE if r == i else _ZERO)
        if i not in block:
            rows.append({})
            rhs.append(_ONE)
    x = solve(rows, d, rhs)
    if x is None:
        raise ValueError("multiplication table has no unit")
    return vec_clean(x)


def multiply_tensor(H, u, v):
    """Product in H tensor H; the braided rule inserts the crossing scalar."""
    out = {}
    braided = H.kind == "braided"
    for (a, b), c1 in u.items():
        for (x, y), c2 in v.items():
            c = c1 * c2
            if braided:
                c = c * H.braiding_factor(b, x)
            if c.is_zero:
                continue
            left = H.mult.get((a, x))
            if not left:
                continue
            right = H.mult.get((b, y))
            if not right:
                continue
            for r, cr in left.items():
                crr = c * cr
                for s, cs in right.items():
                    _acc(out, (r, s), crr * cs)
    return out


class AxiomReport:
    """Per-axiom verification outcome; failures carry a witnessing tuple."""

    def __init__(self, checks):
        self.checks = dict(checks)

    @property
    def ok(self):
        return all(v is None for v in self.checks.values())

    def failures(self):
        return {k: v for k, v in self.checks.items() if v is not None}

    def __repr__(self):
        bad = self.failures()
        if not bad:
            return "AxiomReport(all %d checks pass)" % len(self.checks)
        return "AxiomReport(failures=%r)" % (bad,)


def verify_axioms(H):
    """Exhaustively check every structure axiom of H over the whole basis."""
    d = H.dim
    checks = {}
    mult = H.mult
    unit = H.unit

    witness = None
    for i in range(d):
        e = H.basis_vector(i)
        if vec_clean(H.multiply(unit, e)) != e or vec_clean(H.multiply(e, unit)) != e:
            witness = (i,)
            break
    checks["unit"] = witness

    witness = None
    for i in range(d):
        for j in range(d):
            w = mult.get((i, j), {})
            for k in range(d):
                lhs = {}
                for t, c in w.items():
                    row = mult.get((t, k))
                    if row:
                        for s, cs in row.items():
                            _acc(lhs, s, c * cs)
                rhs = {}
                for t, c in mult.get((j, k), {}).items():
                    row = mult.get((i, t))
                    if row:
                        for s, cs in row.items():
                            _acc(rhs, s, c * cs)
                if lhs != rhs:
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    checks["associativity"] = witness

    witness = None
    for i in range(d):
        left = {}
        right = {}
        for (j, k), c in H.comult.get(i, {}).items():
            ej = H.counit.get(j)
            if ej is not None:
                _acc(left, k, c * ej)
            ek = H.counit.get(k)
            if ek is not None:
                _acc(right, j, c * ek)
        if left != H.basis_vector(i) or right != H.basis_vector(i):
            witness = (i,)
            break
    checks["counit"] = witness

    witness = None
    for i in range(d):
        lhs = {}
        rhs = {}
        for (j, k), c in H.comult.get(i, {}).items():
            for (a, b), cj in H.comult.get(j, {}).items():
                _acc(lhs, (a, b, k), c * cj)
            for (b, a), ck in H.comult.get(k, {}).items():
                _acc(rhs, (j, b, a), c * ck)
        if lhs != rhs:
            witness = (i,)
            break
    checks["coassociativity"] = witness

    if vec_clean(H.comultiply(unit)) != vec_clean(
        {(i, j): ci * cj for i, ci in unit.items() for j, cj in unit.items()}
    ):
        checks["comult_unit"] = ()
    else:
        checks["comult_unit"] = None
    checks["counit_unit"] = None if H.counit_of(unit).is_one else ()

    law = "comult_multiplicative" if H.kind == "ordinary" else "braided_bialgebra"
    witness = None
    for i in range(d):
        di = H.comult.get(i, {})
        for j in range(d):
            lhs = H.comultiply(mult.get((i, j), {}))
            rhs = multiply_tensor(H, di, H.comult.get(j, {}))
            if lhs != vec_clean(rhs):
                witness = (i, j)
                break
        if witness:
            break
    checks[law] = witness

    witness = None
    for i in range(d):
        ei = H.counit.get(i, _ZERO)
        for j in range(d):
            total = H.counit_of(mult.get((i, j), {}))
            if total != ei * H.counit.get(j, _ZERO):
                witness = (i, j)
                break
        if witness:
            break
    checks["counit_multiplicative"] = witness

    if H.antipode is not None:
        witness = None
        for i in range(d):
            left = {}
            right = {}
            for (j, k), c in H.comult.get(i, {}).items():
                sj = H.antipode.get(j, {})
                for t, ct in sj.items():
                    row = mult.get((t, k))
                    if row:
                        for s, cs in row.items():
                            _acc(left, s, c * ct * cs)
                sk = H.antipode.get(k, {})
                for t, ct in sk.items():
                    row = mult.get((j, t))
                    if row:
                        for s, cs in row.items():
                            _acc(right, s, c * ct * cs)
            target = vec_clean(
                {t: H.counit.get(i, _ZERO) * c for t, c in unit.items()}
            )
            if left != target or right != target:
                witness = (i,)
                break
        checks["antipode"] = witness
    elif H.kind == "ordinary":
        checks["antipode"] = ("missing table",)

    if H.kind == "braided":
        # diagonal modules over an abelian group: the compatibility content
        # is that every table is homogeneous in both degree and character
        witness = None
        for (i, j), row in mult.items():
            for k in row:
                if (H.degrees[k] != H.degrees[i] * H.degrees[j]
                        or H.characters[k] != H.characters[i] * H.characters[j]):
                    witness = (i, j, k)
                    break
            if witness:
                break
        checks["module_algebra_homogeneous"] = witness

        witness = None
        for i, row in H.comult.items():
            for (j, k) in row:
                if (H.degrees[i] != H.degrees[j] * H.degrees[k]
                        or H.characters[i] != H.characters[j] * H.characters[k]):
                    witness = (i, j, k)
                    break
            if witness:
                break
        checks["comodule_coalgebra_homogeneous"] = witness

    return AxiomReport(checks)


def dual(H):
    """Transpose all tables; mult and comult trade places."""
    if H.kind != "ordinary":
        raise ValueError("duality implemented for ordinary Hopf algebras")
    d = H.dim
    mult = {}
    for k, row in H.comult.items():
        for (i, j), c in row.items():
            mult.setdefault((i, j), {})[k] = c
    comult = {}
    for (i, j), row in H.mult.items():
        for k, c in row.items():
            comult.setdefault(k, {})[(i, j)] = c
    antipode = None
    if H.antipode is not None:
        antipode = {}
        for j, row in H.antipode.items():
            for i, c in row.items():
                antipode.setdefault(i, {})[j] = c
    names = tuple(n + "*" for n in H.names)
    return StructureHopf(names, mult, comult, dict(H.counit), dict(H.unit), antipode)


def _dual_mult_table(H):
    table = {}
    for k, row in H.comult.items():
        for (i, j), c in row.items():
            table.setdefault((i, j), {})[k] = c
    return table


def _quotient_images(sub, d):
    """Residue of each coordinate vector modulo sub; support on non-pivots."""
    return [sub.reduce({i: _ONE}) for i in range(d)]


def coradical(H):
    """Largest cosemisimple subcoalgebra: the annihilator of the dual radical."""
    table = _dual_mult_table(H)
    rad = algebra_radical(H.dim, lambda i, j: table.get((i, j), {}))
    return rad.annihilator()


def coradical_filtration(H):
    """Ascending filtration by annihilators of powers of the dual radical.

    Each step is evaluated through the comultiplication: the annihilator of
    J^(n+1) is the preimage under delta of A_0 (x) H + H (x) A_(n-1), so only
    one radical computation is needed.  The returned chain is verified to
    split through all lower tensor levels before being handed back.
    """
    d = H.dim
    chain = [coradical(H)]
    pi0 = _quotient_images(chain[0], d)
    while chain[-1].dim < d:
        prev = chain[-1]
        pip = _quotient_images(prev, d)
        rows = {}
        for k in range(d):
            for (i, j), c in H.comult.get(k, {}).items():
                qi = pi0[i]
                if not qi:
                    continue
                qj = pip[j]
                if not qj:
                    continue
                for r, cr in qi.items():
                    ccr = c * cr
                    for s, cs in qj.items():
                        row = rows.setdefault((r, s), {})
                        _acc(row, k, ccr * cs)
        nxt = kernel([r for r in rows.values() if r], d)
        if not prev <= nxt:
            raise ValueError("filtration step lost lower layer")
        if nxt.dim == prev.dim:
            raise ValueError("coradical filtration stalled below full dimension")
        chain.append(nxt)
    _verify_filtration_splitting(H, chain)
    return chain


def _verify_filtration_splitting(H, chain):
    """Check delta(A_n) lies in the full sum of A_i (x) A_(n-i)."""
    d = H.dim
    tables = [_quotient_images(sub, d) for sub in chain]
    for n in range(1, len(chain)):
        for vec in chain[n].basis():
            delta = H.comultiply(vec)
            for i in range(-1, n + 1):
                j = n - 1 - i
                if i >= len(chain) or j >= len(chain):
                    continue
                acc = {}
                for (a, b), c in delta.items():
                    qa = {a: _ONE} if i < 0 else tables[i][a]
                    if not qa:
                        continue
                    qb = {b: _ONE} if j < 0 else tables[j][b]
                    if not qb:
                        continue
                    for r, cr in qa.items():
                        ccr = c * cr
                        for s, cs in qb.items():
                            _acc(acc, (r, s), ccr * cs)
                if acc:
                    raise ValueError("filtration splitting violated at level %d" % n)


class GrouplikeReport:
    """Group-like elements of a Hopf algebra and the group they form."""

    def __init__(self, elements, invariant_factors, generators, exponents,
                 mult_index, inverse_index, identity_index, orders,
                 coradical_dim, dual_commutative, complete):
        self.elements = tuple(elements)
        self.invariant_factors = tuple(invariant_factors)
        self.generators = tuple(generators)
        self.exponents = tuple(exponents)
        self.mult_index = mult_index
        self.inverse_index = tuple(inverse_index)
        self.identity_index = identity_index
        self.orders = tuple(orders)
        self.coradical_dim = coradical_dim
        self.dual_commutative = dual_commutative
        self.complete = complete

    @property
    def count(self):
        return len(self.elements)

    @property
    def pointed(self):
        return self.count == self.coradical_dim

    def group(self):
        return AbelianGroup(self.invariant_factors or (1,))

    def vector(self, i):
        return dict(self.elements[i])

    def __repr__(self):
        return "GrouplikeReport(count=%d, factors=%r, pointed=%r)" % (
            self.count, self.invariant_factors, self.pointed)


def _diagonal_characters(table, mc):
    """Characters of an algebra whose basis is orthogonal scaled idempotents."""
    for r in range(mc):
        for s in range(mc):
            row = table.get((r, s), {})
            if r != s:
                if row:
                    return None
                continue
            if set(row) - {r}:
                return None
            if row.get(r, _ZERO).is_zero:
                return None
    chars = []
    for r in range(mc):
        c = table[(r, r)][r]
        chars.append(tuple(c if s == r else _ZERO for s in range(mc)))
    return chars


def _characters_of_commutative(table, mc, candidates):
    """All algebra characters with values in the candidate scalar list.

    Returns (characters, complete); complete is False when a joint-eigenspace
    block of dimension above one survives the scan, in which case characters
    outside the candidate value set cannot be ruled out.
    """
    if mc == 0:
        return [], True
    shortcut = _diagonal_characters(table, mc)
    if shortcut is not None:
        return shortcut, True

    def apply_op(r, vec):
        out = {}
        for s, c in vec.items():
            row = table.get((r, s))
            if row:
                for t, ct in row.items():
                    _acc(out, t, c * ct)
        return out

    blocks = [Subspace.full(mc)]
    for r in range(mc):
        if all(b.dim == 1 for b in blocks):
            break
        next_blocks = []
        for blk in blocks:
            if blk.dim == 1:
                next_blocks.append(blk)
                continue
            basis = blk.basis()
            dim_v = len(basis)
            pivots = blk.pivots
            mats = []
            for bv in basis:
                img = apply_op(r, bv)
                if blk.reduce(img):
                    raise ValueError("multiplication operator left its block")
                mats.append({t: img[p] for t, p in enumerate(pivots) if p in img})
            found = []
            used = []
            for lam in candidates:
                rows = []
                for t in range(dim_v):
                    row = {}
                    for s in range(dim_v):
                        c = mats[s].get(t, _ZERO)
                        if s == t:
                            c = c - lam
                        if not c.is_zero:
                            row[s] = c
                    rows.append(row)
                ker = kernel(rows, dim_v)
                if ker.dim:
                    vecs = []
                    for krow in ker.basis():
                        vec = {}
                        for s, c in krow.items():
                            for t, ct in basis[s].items():
                                _acc(vec, t, c * ct)
                        vecs.append(vec)
                    found.append(Subspace(mc, vecs))
                    used.append(lam)
            split = sum(b.dim for b in found)
            if split < dim_v:
                rest = [dict(bv) for bv in basis]
                for lam in used:
                    rest = [vec_sub(apply_op(r, v), {t: lam * c for t, c in v.items()})
                            for v in rest]
                rest_blk = Subspace(mc, rest)
                if rest_blk.dim != dim_v - split:
                    raise ValueError("non-semisimple residue in character scan")
                found.append(rest_blk)
            next_blocks.extend(found)
        blocks = next_blocks

    chars = []
    complete = True
    for blk in blocks:
        if blk.dim != 1:
            complete = False
            continue
        v = blk.basis()[0]
        anchor = min(v)
        scale = v[anchor].inverse()
        vals = []
        ok = True
        for r in range(mc):
            img = apply_op(r, v)
            lam = img.get(anchor, _ZERO) * scale
            if vec_sub(img, {t: lam * c for t, c in v.items()}):
                ok = False
                break
            vals.append(lam)
        if not ok:
            complete = False
            continue
        chars.append(tuple(vals))
    return chars, complete


def _abelian_order_profile(orders):
    """Invariant factors of an abelian group from its element-order counts."""
    n = len(orders)
    exponent = max(orders)
    divs = [k for k in range(1, exponent + 1) if exponent % k == 0]
    profile = {k: sum(1 for o in orders if k % o == 0) for k in divs}

    def chains(m, low):
        if m == 1:
            yield ()
            return
        for dd in range(max(low, 2), m + 1):
            if m % dd == 0 and dd % low == 0:
                for rest in chains(m // dd, dd):
                    yield (dd,) + rest

    matches = []
    for chain in chains(n, 1) if n > 1 else [()]:
        if chain and chain[-1] != exponent:
            continue
        good = all(
            profile[k] == _prod(gcd(dd, k) for dd in chain) for k in divs
        )
        if good:
            matches.append(chain)
    if len(matches) != 1:
        raise ValueError("order profile matched %d groups" % len(matches))
    return matches[0]


def _prod(items):
    out = 1
    for x in items:
        out *= x
    return out


def _realize_generators(factors, orders, mult_index, identity_index):
    """Pick element indices generating the group as the given cyclic product."""
    n = len(orders)

    def closure(gens):
        seen = {identity_index}
        frontier = [identity_index]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = mult_index[cur][g]
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    def search(chosen, size):
        if len(chosen) == len(factors):
            return chosen
        want = factors[len(chosen)]
        for cand in range(n):
            if orders[cand] != want:
                continue
            trial = chosen + [cand]
            if len(closure(trial)) == size * want:
                result = search(trial, size * want)
                if result is not None:
                    return result
        return None

    result = search([], 1)
    if result is None:
        raise ValueError("could not realize the group from its elements")
    return tuple(result)


def grouplikes(H, coradical_space=None):
    """All group-like elements, the group they form, and the pointedness flag."""
    a0 = coradical_space if coradical_space is not None else coradical(H)
    m = a0.dim
    basis = a0.basis()
    pivots = a0.pivots
    pos = {p: t for t, p in enumerate(pivots)}

    b_table = {}
    for t in range(m):
        for (i, j), c in H.comultiply(basis[t]).items():
            u = pos.get(i)
            v = pos.get(j)
            if u is not None and v is not None:
                row = b_table.setdefault((u, v), {})
                _acc(row, t, c)

    commutative = True
    for (u, v), row in b_table.items():
        if b_table.get((v, u), {}) != row:
            commutative = False
            break

    def b_mult(x, y):
        out = {}
        for u, cu in x.items():
            for v, cv in y.items():
                row = b_table.get((u, v))
                if row:
                    c = cu * cv
                    for t, ct in row.items():
                        _acc(out, t, c * ct)
        return out

    if commutative:
        c_table, beta_images, mc = b_table, [{u: _ONE} for u in range(m)], m
    else:
        comm_rows = []
        for u in range(m):
            for v in range(u + 1, m):
                diff = vec_sub(b_table.get((u, v), {}), b_table.get((v, u), {}))
                if diff:
                    comm_rows.append(diff)
        ideal = Subspace(m, comm_rows)
        while True:
            extra = []
            for row in ideal.basis():
                for u in range(m):
                    eu = {u: _ONE}
                    extra.append(b_mult(eu, row))
                    extra.append(b_mult(row, eu))
            grown = ideal.add(Subspace(m, extra))
            if grown.dim == ideal.dim:
                break
            ideal = grown
        nonpiv = sorted(set(range(m)) - set(ideal.pivots))
        mc = len(nonpiv)
        cpos = {p: t for t, p in enumerate(nonpiv)}

        def project(vec):
            red = ideal.reduce(vec)
            return {cpos[i]: c for i, c in red.items()}

        c_table = {}
        for r in range(mc):
            for s in range(mc):
                prod = project(b_mult({nonpiv[r]: _ONE}, {nonpiv[s]: _ONE}))
                if prod:
                    c_table[(r, s)] = prod
        beta_images = [project({u: _ONE}) for u in range(m)]

    level = H.field_level()
    bound = 2 * level // gcd(2 * level, m) * m
    candidates = [_ZERO] + [Cyclotomic.root_of_unity(bound, t) for t in range(bound)]
    c_chars, complete = _characters_of_commutative(c_table, mc, candidates)

    elements = []
    seen = set()
    for vals in c_chars:
        x = {}
        for u in range(m):
            lam = _ZERO
            for r, c in beta_images[u].items():
                lam = lam + c * vals[r]
            if not lam.is_zero:
                for i, ci in basis[u].items():
                    _acc(x, i, lam * ci)
        delta = H.comultiply(x)
        square = {}
        for i, ci in x.items():
            for j, cj in x.items():
                _acc(square, (i, j), ci * cj)
        if delta != square or not H.counit_of(x).is_one:
            raise ValueError("character reconstruction produced a non-group-like")
        frozen = _freeze(x)
        if frozen not in seen:
            seen.add(frozen)
            elements.append(frozen)
    elements.sort(key=lambda el: tuple((i, c.sort_key()) for i, c in el))

    index = {el: i for i, el in enumerate(elements)}
    count = len(elements)
    mult_index = []
    for a in range(count):
        row = []
        va = dict(elements[a])
        for b in range(count):
            prod = _freeze(H.multiply(va, dict(elements[b])))
            if prod not in index:
                raise ValueError("group-likes are not closed under product")
            row.append(index[prod])
        mult_index.append(tuple(row))
    mult_index = tuple(mult_index)

    identity_index = index.get(_freeze(H.unit))
    if identity_index is None and count:
        raise ValueError("unit is not among the group-likes")

    orders = []
    inverse_index = []
    for a in range(count):
        cur = a
        order = 1
        while cur != identity_index:
            cur = mult_index[cur][a]
            order += 1
        orders.append(order)
        inv = identity_index
        for _ in range(order - 1):
            inv = mult_index[inv][a]
        inverse_index.append(inv)

    if count <= 1:
        factors = ()
        generators = ()
        exponents = tuple(() for _ in range(count))
    else:
        factors = _abelian_order_profile(orders)
        generators = _realize_generators(factors, orders, mult_index, identity_index)
        exponents = _element_exponents(factors, generators, mult_index, identity_index)

    return GrouplikeReport(
        elements, factors, generators, exponents, mult_index, inverse_index,
        identity_index, orders, m, commutative, complete)


def _element_exponents(factors, generators, mult_index, identity_index):
    """Exponent tuple of every element with respect to the generator basis."""
    from itertools import product as iproduct

    table = {}
    for combo in iproduct(*(range(f) for f in factors)):
        cur = identity_index
        for g, e in zip(generators, combo):
            for _ in range(e):
                cur = mult_index[cur][g]
        table[cur] = combo
    if len(table) != len(mult_index):
        raise ValueError("generators do not span the group-like group")
    return tuple(table[i] for i in range(len(mult_index)))


class SkewReport:
    """Skew-primitive space for a pair of group-likes, split by characters."""

    def __init__(self, space, components):
        self.space = space
        self.components = tuple(components)

    def __repr__(self):
        return "SkewReport(dim=%d, components=%r)" % (
            self.space.dim, [(repr(c), d) for c, d, _ in self.components])


def skew_primitives(H, g, h, report=None):
    """Solutions of delta(x) = x (x) h + g (x) x, with conjugation eigenspaces."""
    d = H.dim
    g = vec_clean(g)
    h = vec_clean(h)
    rows = {}
    for k in range(d):
        for (i, j), c in H.comult.get(k, {}).items():
            row = rows.setdefault((i, j), {})
            _acc(row, k, c)
    for k in range(d):
        for j, cj in h.items():
            row = rows.setdefault((k, j), {})
            _acc(row, k, -cj)
        for i, ci in g.items():
            row = rows.setdefault((i, k), {})
            _acc(row, k, -ci)
    space = kernel([r for r in rows.values() if r], d)

    components = []
    if report is not None and report.count and space.dim:
        group = report.group()
        basis = space.basis()
        pivots = space.pivots
        gen_ops = []
        for gi in report.generators:
            gamma = report.vector(gi)
            gamma_inv = report.vector(report.inverse_index[gi])
            mats = []
            for bv in basis:
                img = H.multiply(H.multiply(gamma, bv), gamma_inv)
                if space.reduce(img):
                    raise ValueError("conjugation left the skew-primitive space")
                mats.append({t: img[p] for t, p in enumerate(pivots) if p in img})
            gen_ops.append(mats)
        total = 0
        for chi in group.characters():
            rows = []
            for mats, gen_index in zip(gen_ops, range(len(report.generators))):
                lam = evaluate(chi, group.generator(gen_index))
                for t in range(space.dim):
                    row = {}
                    for s in range(space.dim):
                        c = mats[s].get(t, _ZERO)
                        if s == t:
                            c = c - lam
                        if not c.is_zero:
                            row[s] = c
                    rows.append(row)
            ker = kernel(rows, space.dim)
            if ker.dim:
                vecs = []
                for krow in ker.basis():
                    vec = {}
                    for s, c in krow.items():
                        for t, ct in basis[s].items():
                            _acc(vec, t, c * ct)
                    vecs.append(vec)
                components.append((chi, ker.dim, tuple(_freeze(v) for v in vecs)))
                total += ker.dim
        if total != space.dim:
            raise ValueError("conjugation action failed to diagonalize")
    return SkewReport(space, components)


def associated_graded(H, filtration=None):
    """Graded Hopf algebra on a filtration-adapted basis."""
    chain = filtration if filtration is not None else coradical_filtration(H)
    d = H.dim
    adapted = []
    degrees = []
    pivots = {}
    for n, sub in enumerate(chain):
        for row in sub.basis():
            w = dict(row)
            for p, existing in pivots.items():
                c = w.get(p)
                if c is not None:
                    w = vec_sub(w, {i: c * ci for i, ci in existing.items()})
            w = vec_clean(w)
            if not w:
                continue
            piv = min(w)
            inv = w[piv].inverse()
            w = {i: c * inv for i, c in w.items()}
            pivots[piv] = w
            adapted.append(w)
            degrees.append(n)
    if len(adapted) != d:
        raise ValueError("filtration does not exhaust the algebra")

    augmented = []
    for t, vec in enumerate(adapted):
        row = dict(vec)
        row[d + t] = _ONE
        augmented.append(row)
    _, reduced = rref(augmented)
    express_basis = [None] * d
    for row in reduced:
        piv = min(row)
        express_basis[piv] = {k - d: c for k, c in row.items() if k >= d}

    def express(vec):
        out = {}
        for i, c in vec.items():
            for t, ct in express_basis[i].items():
                _acc(out, t, c * ct)
        return out

    names = tuple("gr%d|%d" % (degrees[t], t) for t in range(d))
    mult = {}
    for s in range(d):
        for t in range(d):
            prod = express(H.multiply(adapted[s], adapted[t]))
            target = degrees[s] + degrees[t]
            row = {}
            for u, c in prod.items():
                if degrees[u] == target:
                    row[u] = c
                elif degrees[u] > target:
                    raise ValueError("product climbed above its filtration degree")
            if row:
                mult[(s, t)] = row

    comult = {}
    for t in range(d):
        acc = {}
        for (i, j), c in H.comultiply(adapted[t]).items():
            for a, ca in express_basis[i].items():
                cca = c * ca
                for b, cb in express_basis[j].items():
                    _acc(acc, (a, b), cca * cb)
        row = {}
        for (a, b), c in acc.items():
            if degrees[a] + degrees[b] == degrees[t]:
                row[(a, b)] = c
            elif degrees[a] + degrees[b] > degrees[t]:
                raise ValueError("comultiplication climbed above its degree")
        comult[t] = row

    unit = express(H.unit)
    counit = {}
    for t in range(d):
        if degrees[t] == 0:
            c = H.counit_of(adapted[t])
            if not c.is_zero:
                counit[t] = c

    antipode = None
    if H.antipode is not None:
        antipode = {}
        for t in range(d):
            img = express(H.antipode_of(adapted[t]))
            row = {}
            for u, c in img.items():
                if degrees[u] == degrees[t]:
                    row[u] = c
                elif degrees[u] > degrees[t]:
                    raise ValueError("antipode climbed above its degree")
            if row:
                antipode[t] = row

    return StructureHopf(names, mult, comult, unit, counit, antipode)


def graded_degrees(gr):
    """Degree of each basis element of an associated_graded output."""
    return tuple(int(n.split("|")[0][2:]) for n in gr.names)


def one_dim_reps(H):
    """Algebra characters of H, realized as the group-likes of the dual."""
    return grouplikes(dual(H))


def group_algebra(group):
    """Group algebra of a finite abelian group as a StructureHopf."""
    elements = list(group.elements())
    index = {g: i for i, g in enumerate(elements)}
    names = tuple("g%r" % (g.exponents,) for g in elements)
    mult = {}
    comult = {}
    antipode = {}
    counit = {}
    for i, g in enumerate(elements):
        comult[i] = {(i, i): _ONE}
        counit[i] = _ONE
        antipode[i] = {index[g.inverse()]: _ONE}
        for j, hh in enumerate(elements):
            mult[(i, j)] = {index[g * hh]: _ONE}
    unit = {index[group.identity()]: _ONE}
    return StructureHopf(names, mult, comult, unit, counit, antipode)


class InvariantRecord:
    """Isomorphism-invariant fingerprint of a Hopf algebra."""

    def __init__(self, dimension, grouplike_count, invariant_factors, pointed,
                 filtration_dims, skew_table, one_dim_count, dual_pointed):
        self.dimension = dimension
        self.grouplike_count = grouplike_count
        self.invariant_factors = tuple(invariant_factors)
        self.pointed = pointed
        self.filtration_dims = tuple(filtration_dims)
        self.skew_table = tuple(skew_table)
        self.one_dim_count = one_dim_count
        self.dual_pointed = dual_pointed

    def as_tuple(self):
        return (self.dimension, self.grouplike_count, self.invariant_factors,
                self.pointed, self.filtration_dims, self.skew_table,
                self.one_dim_count, self.dual_pointed)

    def __eq__(self, other):
        return isinstance(other, InvariantRecord) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def differences(self, other):
        fields = ("dimension", "grouplike_count", "invariant_factors", "pointed",
                  "filtration_dims", "skew_table", "one_dim_count", "dual_pointed")
        return [f for f in fields if getattr(self, f) != getattr(other, f)]

    def as_dict(self):
        return {
            "dimension": self.dimension,
            "grouplike_count": self.grouplike_count,
            "invariant_factors": list(self.invariant_factors),
            "pointed": self.pointed,
            "filtration_dims": list(self.filtration_dims),
            "skew_table": [list(entry) for entry in self.skew_table],
            "one_dim_count": self.one_dim_count,
            "dual_pointed": self.dual_pointed,
        }

    def __repr__(self):
        return "InvariantRecord(%r)" % (self.as_dict(),)


def invariant_record(H):
    """Compute the full invariant fingerprint of an ordinary Hopf algebra."""
    chain = coradical_filtration(H)
    glr = grouplikes(H, chain[0])
    group = glr.group() if glr.invariant_factors else None
    skew = []
    for idx in range(glr.count):
        g = glr.vector(idx)
        rep = skew_primitives(H, g, H.unit, glr)
        comps = []
        for chi, dim_c, _ in rep.components:
            value = "1"
            if group is not None:
                value = str(evaluate(chi, group.element(glr.exponents[idx])))
            comps.append((chi.order(), value, dim_c))
        skew.append((glr.orders[idx], rep.space.dim, tuple(sorted(comps))))
    reps = one_dim_reps(H)
    return InvariantRecord(
        dimension=H.dim,
        grouplike_count=glr.count,
        invariant_factors=glr.invariant_factors,
        pointed=glr.pointed,
        filtration_dims=tuple(s.dim for s in chain),
        skew_table=tuple(sorted(skew)),
        one_dim_count=reps.count,
        dual_pointed=reps.pointed,
    )


def apply_linear_map(table, vec):
    """Apply a sparse linear map {src: {dst: coeff}} to a vector."""
    out = {}
    for i, c in vec.items():
        for j, cj in table.get(i, {}).items():
            _acc(out, j, c * cj)
    return out


def is_bialgebra_map(A, B, table):
    """Exact check that a linear map A -> B respects mult, comult, unit, counit."""
    if apply_linear_map(table, A.unit) != B.unit:
        return False
    for i in range(A.dim):
        img = table.get(i, {})
        eps = _ZERO
        for j, c in img.items():
            eps = eps + c * B.counit.get(j, _ZERO)
        if eps != A.counit.get(i, _ZERO):
            return False
        expected = {}
        for (l, r), c in A.comult.get(i, {}).items():
            for lj, cl in table.get(l, {}).items():
                for rj, cr in table.get(r, {}).items():
                    _acc(expected, (lj, rj), c * cl * cr)
        actual = {}
        for j, c in img.items():
            for (l, r), cc in B.comult.get(j, {}).items():
                _acc(actual, (l, r), c * cc)
        if expected != actual:
            return False
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = apply_linear_map(table, A.mult.get((i, j), {}))
            rhs = B.multiply(apply_linear_map(table, {i: _ONE}),
                             apply_linear_map(table, {j: _ONE}))
            if lhs != rhs:
                return False
    return True


def __getattr__(name):
    if name == "find_isomorphism":
        from .isosearch import find_isomorphism

        return find_isomorphism
    raise AttributeError("module %r has no attribute %r" % (__name__, name))
