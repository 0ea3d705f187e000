"""Exact sparse linear algebra over cyclotomic fields.

Vectors are dicts mapping coordinate index to a nonzero Cyclotomic; matrices
are lists of such rows.  Row reduction is full Gauss-Jordan, so reduced bases
are canonical and subspace equality is row comparison.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic

_ZERO = Cyclotomic(0)
_ONE = Cyclotomic(1)


def vec_add(u, v):
    out = dict(u)
    for j, c in v.items():
        s = out.get(j, _ZERO) + c
        if s.is_zero:
            out.pop(j, None)
        else:
            out[j] = s
    return out


def vec_scale(u, c):
    if c.is_zero:
        return {}
    return {j: c * x for j, x in u.items()}


def vec_sub(u, v):
    return vec_add(u, {j: -c for j, c in v.items()})


def vec_clean(u):
    return {j: c for j, c in u.items() if not c.is_zero}


def rref(rows):
    """Canonical reduced echelon form; returns (pivot columns, rows).

    Rows are sparse dicts.  The next pivot row is the unprocessed row with
    the fewest nonzeros (ties by original index) for sparsity; full reduction
    makes the result the unique RREF of the row space regardless.
    """
    work = [vec_clean(r) for r in rows]
    done = []
    remaining = [i for i, r in enumerate(work) if r]
    while remaining:
        best = min(remaining, key=lambda i: (len(work[i]), i))
        row = work[best]
        piv = min(row)
        inv = row[piv].inverse()
        row = {j: c * inv for j, c in row.items()}
        for i in list(remaining) + done:
            if i == best:
                continue
            other = work[i]
            f = other.get(piv)
            if f is not None:
                work[i] = vec_sub(other, vec_scale(row, f))
        work[best] = row
        done.append(best)
        remaining = [i for i in remaining if i != best and work[i]]
    out = sorted((work[i] for i in done), key=lambda r: min(r))
    return [min(r) for r in out], out


class Subspace:
    """Subspace of k^ambient with a canonical reduced row basis."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, vectors):
        pivots, rows = rref(vectors)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "rows", tuple(
            tuple(sorted(r.items())) for r in rows
        ))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace values are immutable")

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient):
        return cls(ambient, [{j: _ONE} for j in range(ambient)])

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [dict(r) for r in self.rows]

    def reduce(self, vec):
        """Residual of vec after eliminating all pivot coordinates."""
        out = vec_clean(vec)
        for piv, row in zip(self.pivots, self.rows):
            f = out.get(piv)
            if f is not None:
                out = vec_sub(out, vec_scale(dict(row), f))
        return out

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, other):
        _same_ambient(self, other)
        return Subspace(self.ambient, self.basis() + other.basis())

    def intersect(self, other):
        _same_ambient(self, other)
        return self.annihilator().add(other.annihilator()).annihilator()

    def annihilator(self, pairing=None):
        """Vectors f with <f, u> = 0 for all u here; default pairing is the dot product."""
        conditions = self.basis()
        if pairing is not None:
            conditions = [
                vec_clean(
                    {
                        i: sum(
                            (row.get(j, _ZERO) * u[j] for j in u),
                            _ZERO,
                        )
                        for i, row in enumerate(pairing)
                    }
                )
                for u in conditions
            ]
        return kernel(conditions, self.ambient)

    def __le__(self, other):
        return all(other.contains(dict(r)) for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"


def _same_ambient(a, b):
    if a.ambient != b.ambient:
        raise ValueError("subspaces live in different ambient spaces")


def kernel(rows, width):
    """Solution space {x : row . x = 0 for every row}."""
    pivots, reduced = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = {free: _ONE}
        for piv, row in zip(pivots, reduced):
            c = row.get(free)
            if c is not None:
                vec[piv] = -c
        basis.append(vec)
    return Subspace(width, basis)


def solve(rows, width, b):
    """One solution x of rows . x = b (free coordinates 0), or None."""
    augmented = []
    for i, row in enumerate(rows):
        r = vec_clean(row)
        bi = b.get(i) if isinstance(b, dict) else b[i]
        if bi is not None and not bi.is_zero:
            r[width] = bi
        augmented.append(r)
    pivots, reduced = rref(augmented)
    x = {}
    for piv, row in zip(pivots, reduced):
        if piv == width:
            return None
        c = row.get(width)
        if c is not None:
            x[piv] = c
    return x


def algebra_radical(dim, mult):
    """Jacobson radical of an associative unital algebra in characteristic 0.

    mult(i, j) gives the product of basis elements as a sparse dict.  The
    radical is the kernel of the trace form (x, y) -> trace of left
    multiplication by xy.
    """
    traces = [_ZERO] * dim
    table = {}
    for i in range(dim):
        for k in range(dim):
            prod = mult(i, k)
            table[(i, k)] = prod
            c = prod.get(k)
            if c is not None:
                traces[i] = traces[i] + c
    gram = []
    for i in range(dim):
        row = {}
        for j in range(dim):
            total = _ZERO
            for t, c in table[(i, j)].items():
                if not traces[t].is_zero:
                    total = total + c * traces[t]
            if not total.is_zero:
                row[j] = total
        gram.append(row)
    return kernel(gram, dim)
