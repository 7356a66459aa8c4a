"""Dense exact linear algebra over a scalar domain.

Everything is plain Gaussian elimination on lists of lists; matrices are
small (desk scale), so no pivot-growth tricks are needed.  `rank_mod_p`
additionally handles p = 2, which the point-counting oracles require but
the polynomial scalar domains do not admit.
"""

from __future__ import annotations

from .scalars import Domain


def _copy(rows):
    return [list(r) for r in rows]


def rref(rows, domain: Domain):
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = _copy(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not domain.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = domain.inv(m[r][c])
        m[r] = [domain.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and not domain.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [domain.sub(x, domain.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows, domain: Domain) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows, domain)[1])


def det(rows, domain: Domain):
    n = len(rows)
    if n == 0:
        return domain.one
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    m = _copy(rows)
    sign = domain.one
    acc = domain.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if not domain.is_zero(m[i][c])), None)
        if pivot is None:
            return domain.zero
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = domain.neg(sign)
        acc = domain.mul(acc, m[c][c])
        inv = domain.inv(m[c][c])
        for i in range(c + 1, n):
            if not domain.is_zero(m[i][c]):
                f = domain.mul(m[i][c], inv)
                m[i] = [domain.sub(x, domain.mul(f, y)) for x, y in zip(m[i], m[c])]
    return domain.mul(sign, acc)


def identity_rows(n: int, domain: Domain):
    return [[domain.one if i == j else domain.zero for j in range(n)] for i in range(n)]


def inverse(rows, domain: Domain):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("inverse requires a square matrix")
    aug = [list(r) + ident for r, ident in zip(_copy(rows), identity_rows(n, domain))]
    reduced, pivots = rref(aug, domain)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in reduced]


def solve(a_rows, b, domain: Domain):
    """One solution of A x = b, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    aug = [list(r) + [bv] for r, bv in zip(a_rows, b)]
    if nrows == 0:
        return [domain.zero] * ncols
    reduced, pivots = rref(aug, domain)
    if ncols in pivots:
        return None
    x = [domain.zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = reduced[r][ncols]
    return x


def kernel_basis(rows, domain: Domain):
    """Basis of the null space of A (vectors of length ncols)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if ncols == 0:
        return []
    if nrows == 0:
        return identity_rows(ncols, domain)
    reduced, pivots = rref(rows, domain)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [domain.zero] * ncols
        v[free] = domain.one
        for r, c in enumerate(pivots):
            v[c] = domain.neg(reduced[r][free])
        basis.append(v)
    return basis


def rank_mod_p(int_rows, p: int) -> int:
    """Rank over F_p of an integer matrix; p may be any prime, including 2."""
    m = [[x % p for x in row] for row in int_rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rk = 0
    for c in range(ncols):
        pivot = next((i for i in range(rk, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        inv = pow(m[rk][c], -1, p)
        m[rk] = [x * inv % p for x in m[rk]]
        for i in range(rk + 1, nrows):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rk])]
        rk += 1
        if rk == nrows:
            break
    return rk
