"""Formal coordinate changes of a truncated power-series ring.

A `FormalMap` sends each variable x_i to a polynomial with zero constant
term; all composition and inversion is carried out modulo a truncation
order N (terms of total degree >= N are dropped), so every object stays a
finite polynomial.
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .matrices import PolyMatrix
from .polynomials import Polynomial
from .scalars import Domain


class FormalMap:
    __slots__ = ("vars", "domain", "components", "_linear", "_linear_det")

    def __init__(self, components: Sequence[Polynomial]):
        components = tuple(components)
        if not components:
            raise ValueError("formal map needs at least one component")
        vars = components[0].vars
        domain = components[0].domain
        if len(components) != len(vars):
            raise ValueError("one component per variable required")
        for c in components:
            if c.vars != vars or c.domain != domain:
                raise ValueError("components live in different rings")
            if not domain.is_zero(c.constant_term()):
                raise ValueError("components must have zero constant term")
        self.vars = vars
        self.domain = domain
        self.components = components
        self._linear = None
        self._linear_det = None

    @classmethod
    def identity(cls, vars, domain: Domain) -> "FormalMap":
        vs = tuple(vars)
        return cls([Polynomial.variable(n, vs, domain) for n in vs])

    @classmethod
    def from_linear(cls, rows, vars, domain: Domain) -> "FormalMap":
        """Linear map x_i -> sum_j rows[i][j] * x_j."""
        vs = tuple(vars)
        comps = []
        for row in rows:
            comps.append(Polynomial.from_terms(
                vs, domain,
                [(tuple(1 if t == j else 0 for t in range(len(vs))), c)
                 for j, c in enumerate(row)],
            ))
        return cls(comps)

    def linear_matrix(self) -> list[list]:
        """Row i holds the degree-one coefficients of component i."""
        if self._linear is None:
            self._linear = [c.linear_coefficients() for c in self.components]
        return self._linear

    def linear_det(self):
        if self._linear_det is None:
            self._linear_det = linalg.det(self.linear_matrix(), self.domain)
        return self._linear_det

    @property
    def is_iso(self) -> bool:
        return not self.domain.is_zero(self.linear_det())

    def truncate(self, order: int) -> "FormalMap":
        return FormalMap([c.truncate(order) for c in self.components])

    def apply(self, p: Polynomial, order: int) -> Polynomial:
        """Substitute the components into p, truncated at the given order."""
        return p.substitute(self.components, order).truncate(order)

    def apply_matrix(self, m: PolyMatrix, order: int) -> PolyMatrix:
        return m.map_entries(lambda e: self.apply(e, order))

    def compose(self, inner: "FormalMap", order: int) -> "FormalMap":
        """self after inner: x -> self(inner(x)), truncated."""
        return FormalMap([self.apply(c, order) for c in inner.components])

    def eq_mod(self, other: "FormalMap", order: int) -> bool:
        return all(
            a.truncate(order) == b.truncate(order)
            for a, b in zip(self.components, other.components)
        )

    def inverse(self, order: int) -> "FormalMap":
        return invert_formal(self, order)

    def __eq__(self, other):
        return isinstance(other, FormalMap) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        body = ", ".join(f"{n} -> {c}" for n, c in zip(self.vars, self.components))
        return f"FormalMap({body})"


def invert_formal(f: FormalMap, order: int) -> FormalMap:
    """Two-sided inverse of f modulo terms of degree >= order.

    Computed order by order from the fixed point G = L^{-1}(x - Ftilde(G)),
    where L is the linear part and Ftilde the rest.
    """
    if order < 1:
        raise ValueError("truncation order must be >= 1")
    dom = f.domain
    lin = f.linear_matrix()
    try:
        lin_inv = linalg.inverse(lin, dom)
    except ValueError:
        raise ValueError("not a formal isomorphism: singular linear part")
    vs = f.vars
    linear_inverse = FormalMap.from_linear(lin_inv, vs, dom)
    ftilde = [c - Polynomial.from_terms(
        vs, dom,
        [(tuple(1 if t == j else 0 for t in range(len(vs))), x)
         for j, x in enumerate(row)],
    ) for c, row in zip(f.components, lin)]

    g = linear_inverse
    for _ in range(max(order - 2, 0)):
        correction = [p.substitute(g.components, order).truncate(order) for p in ftilde]
        adjusted = [
            Polynomial.variable(n, vs, dom) - corr for n, corr in zip(vs, correction)
        ]
        comps = []
        for row in lin_inv:
            acc = Polynomial.zero(vs, dom)
            for c, a in zip(row, adjusted):
                acc = acc + a.scale(c)
            comps.append(acc.truncate(order))
        g = FormalMap(comps)
    return g
