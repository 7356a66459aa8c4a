"""Generic matrices, determinantal ideals, rank strata, and point counts.

A shape (a, b) is the space of b x a matrices, normalized so a <= b.  The
stratum M_k collects the matrices of rank <= a - k; its ideal J_k is
generated by the minors of size a - k + 1 of the generic matrix.

Two independent point-counting routes over F_q (the closed rank-stratum
product formula and exhaustive enumeration) serve as oracles for the
dimension formula (a - k)(b + k): the count of M_k points is a polynomial
in q whose degree is the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import NamedTuple

from . import linalg
from .matrices import PolyMatrix
from .polynomials import Polynomial
from .scalars import QQ, Domain, is_prime

BRUTE_FORCE_LIMIT = 1 << 20


@dataclass(frozen=True)
class GenericShape:
    """Matrix-space shape, a columns by b rows, normalized to a <= b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"shape needs positive dimensions, got ({self.a}, {self.b})")
        if self.a > self.b:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @property
    def ambient_dim(self) -> int:
        return self.a * self.b


def matrix_variable_names(shape: GenericShape) -> tuple[str, ...]:
    """Row-major entry names x{i}{j}, 1-based; underscored past 9."""
    wide = max(shape.a, shape.b) > 9
    fmt = "x{}_{}".format if wide else "x{}{}".format
    return tuple(fmt(i + 1, j + 1) for i in range(shape.b) for j in range(shape.a))


def generic_matrix(shape: GenericShape, domain: Domain = QQ) -> PolyMatrix:
    """The b x a matrix of independent variables."""
    names = matrix_variable_names(shape)
    entries = [Polynomial.variable(n, names, domain) for n in names]
    return PolyMatrix(shape.b, shape.a, entries)


@dataclass(frozen=True)
class DeterminantalIdeal:
    shape: GenericShape
    k: int
    minor_size: int
    generators: tuple[Polynomial, ...]


def determinantal_ideal(shape: GenericShape, k: int, domain: Domain = QQ) -> DeterminantalIdeal:
    """Ideal of the rank <= a - k stratum: minors of size a - k + 1.

    Any integer k is accepted; out-of-bounds sizes follow the minor
    conventions (k <= 0 gives the zero ideal, k >= a + 1 the unit ideal).
    """
    size = shape.a - k + 1
    gens = generic_matrix(shape, domain).minors_of_size(size)
    return DeterminantalIdeal(shape, k, size, tuple(gens))


def _check_k(shape: GenericShape, k: int):
    if not 1 <= k <= shape.a:
        raise ValueError(f"k must satisfy 1 <= k <= {shape.a}, got {k}")


def dimension(shape: GenericShape, k: int) -> int:
    """Dimension (a - k)(b + k) of the rank <= a - k stratum."""
    _check_k(shape, k)
    return (shape.a - k) * (shape.b + k)


def codimension(shape: GenericShape, k: int) -> int:
    _check_k(shape, k)
    return shape.ambient_dim - dimension(shape, k)


class SingularLocus(NamedTuple):
    index: int
    empty: bool


def singular_locus_index(shape: GenericShape, k: int) -> SingularLocus:
    """The singular locus of the k-th stratum is the (k+1)-st stratum."""
    _check_k(shape, k)
    return SingularLocus(index=k + 1, empty=k + 1 > shape.a)


# -- point counting over finite fields --------------------------------


def _rank_stratum_count(a: int, b: int, j: int, q: int) -> int:
    """Number of b x a matrices over F_q of rank exactly j."""
    num = 1
    for i in range(j):
        num *= (q**a - q**i) * (q**b - q**i)
    den = 1
    for i in range(j):
        den *= q**j - q**i
    assert j == 0 or num % den == 0
    return num // den if j else 1


def count_points_rank_le(shape: GenericShape, r: int, q: int) -> int:
    """Matrices of rank <= r over F_q, by the rank-stratum product formula."""
    if not 0 <= r <= shape.a:
        raise ValueError(f"rank bound must satisfy 0 <= r <= {shape.a}, got {r}")
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    return sum(_rank_stratum_count(shape.a, shape.b, j, q) for j in range(r + 1))


def count_points_brute_force(shape: GenericShape, r: int, q: int) -> int:
    """Exhaustive enumeration; guarded to q^(ab) <= 2^20."""
    if not 0 <= r <= shape.a:
        raise ValueError(f"rank bound must satisfy 0 <= r <= {shape.a}, got {r}")
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    total = q ** shape.ambient_dim
    if total > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"refusing brute force: {q}^{shape.ambient_dim} exceeds {BRUTE_FORCE_LIMIT}"
        )
    a, b = shape.a, shape.b
    count = 0
    for flat in product(range(q), repeat=a * b):
        rows = [list(flat[i * a:(i + 1) * a]) for i in range(b)]
        if linalg.rank_mod_p(rows, q) <= r:
            count += 1
    return count


def first_primes(n: int) -> list[int]:
    out: list[int] = []
    candidate = 2
    while len(out) < n:
        if is_prime(candidate):
            out.append(candidate)
        candidate += 1
    return out


def interpolated_count_degree(shape: GenericShape, k: int) -> int:
    """Degree in q of the point count of the rank <= a - k stratum.

    Interpolates q -> #points at ab + 1 primes and returns the exact degree
    of the resulting polynomial; the expected value is dimension(shape, k).
    """
    _check_k(shape, k)
    n = shape.ambient_dim + 1
    qs = first_primes(n)
    counts = [count_points_rank_le(shape, shape.a - k, q) for q in qs]
    coeffs = _interpolate(qs, counts)
    deg = max((i for i, c in enumerate(coeffs) if c != 0), default=0)
    return deg


def _interpolate(xs, ys) -> list[Fraction]:
    """Monomial coefficients of the interpolating polynomial (Newton form)."""
    n = len(xs)
    table = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    # expand sum_k table[k] * prod_{j<k} (x - xs[j])
    basis = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for kk in range(n):
        for i, c in enumerate(basis):
            coeffs[i] += table[kk] * c
        if kk < n - 1:
            new_basis = [Fraction(0)] * n
            for i, c in enumerate(basis):
                if c:
                    new_basis[i + 1] += c
                    new_basis[i] -= c * xs[kk]
            basis = new_basis
    return coeffs


def generator_count(shape: GenericShape, k: int) -> int:
    """Closed binomial product for the number of ideal generators."""
    _check_k(shape, k)
    size = shape.a - k + 1
    return comb(shape.b, size) * comb(shape.a, size)
