"""Sparse exact multivariate polynomials.

A polynomial is a mapping from exponent vectors (one natural number per
variable) to nonzero coefficients in a scalar domain from
`detloci.scalars`.  The zero polynomial is the empty mapping.

  x0^2 * x1 + 3   ->   {(2, 1): Fraction(1), (0, 0): Fraction(3)}

Canonical term order is graded lexicographic: terms compare by total
degree first, then lexicographically on the exponent vector.  All values
are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import QQ, Domain

Exponents = tuple[int, ...]


def grlex_key(exps: Exponents):
    return (sum(exps), exps)


def monomials_up_to_degree(num_vars: int, max_degree: int) -> list[Exponents]:
    """All exponent vectors with total degree <= max_degree, grlex order."""
    if num_vars == 0:
        return [()] if max_degree >= 0 else []
    out: list[Exponents] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    for d in range(max_degree + 1):
        rec((), d, num_vars)
    return out


class Polynomial:
    __slots__ = ("vars", "domain", "terms")

    def __init__(self, vars: tuple[str, ...], domain: Domain, terms: dict):
        # trusted constructor: `terms` must already be canonical
        self.vars = vars
        self.domain = domain
        self.terms = terms

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str], domain: Domain = QQ) -> "Polynomial":
        return cls(tuple(vars), domain, {})

    @classmethod
    def constant(cls, value, vars: Sequence[str], domain: Domain = QQ) -> "Polynomial":
        c = domain.of(value)
        if domain.is_zero(c):
            return cls.zero(vars, domain)
        return cls(tuple(vars), domain, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str], domain: Domain = QQ) -> "Polynomial":
        vs = tuple(vars)
        idx = vs.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(vs)))
        return cls(vs, domain, {exps: domain.one})

    @classmethod
    def from_terms(cls, vars: Sequence[str], domain: Domain, items: Iterable) -> "Polynomial":
        vs = tuple(vars)
        terms: dict = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vs):
                raise ValueError(f"exponent vector {exps} does not match {len(vs)} variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = domain.of(coeff)
            if exps in terms:
                c = domain.add(terms[exps], c)
            if domain.is_zero(c):
                terms.pop(exps, None)
            else:
                terms[exps] = c
        return cls(vs, domain, terms)

    # -- inspection --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int | None:
        return min((sum(e) for e in self.terms), default=None)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), self.domain.zero)

    def coefficient(self, exps: Exponents):
        return self.terms.get(tuple(exps), self.domain.zero)

    def linear_coefficients(self) -> list:
        """Coefficient of each variable's degree-one term, in variable order."""
        n = len(self.vars)
        out = []
        for i in range(n):
            exps = tuple(1 if j == i else 0 for j in range(n))
            out.append(self.terms.get(exps, self.domain.zero))
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def sort_key(self):
        """Deterministic total-order key for canonical generator lists."""
        return tuple((sum(e), e, self.domain.show(c)) for e, c in self.sorted_terms())

    # -- arithmetic --------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.vars != other.vars or self.domain != other.domain:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        dom = self.domain
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = dom.add(terms[e], c)
                if dom.is_zero(s):
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c
        return Polynomial(self.vars, dom, terms)

    def __neg__(self) -> "Polynomial":
        dom = self.domain
        return Polynomial(self.vars, dom, {e: dom.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return self.mul_trunc(other, None)

    def mul_trunc(self, other: "Polynomial", order: int | None) -> "Polynomial":
        """Product, optionally dropping all terms of total degree >= order."""
        self._check(other)
        dom = self.domain
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if order is not None and d1 + sum(e2) >= order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                c = dom.mul(c1, c2)
                if e in out:
                    s = dom.add(out[e], c)
                    if dom.is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = c
        return Polynomial(self.vars, dom, out)

    def scale(self, value) -> "Polynomial":
        dom = self.domain
        c0 = dom.of(value)
        if dom.is_zero(c0):
            return Polynomial.zero(self.vars, dom)
        return Polynomial(self.vars, dom, {e: dom.mul(c0, c) for e, c in self.terms.items()})

    def shift(self, exps: Exponents) -> "Polynomial":
        """Multiply by the monomial with the given exponent vector."""
        exps = tuple(exps)
        return Polynomial(
            self.vars,
            self.domain,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1, self.vars, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- evaluation, truncation, substitution ------------------------

    def evaluate(self, point: Sequence):
        if len(point) != len(self.vars):
            raise ValueError(
                f"point has {len(point)} coordinates, polynomial has {len(self.vars)} variables"
            )
        dom = self.domain
        acc = dom.zero
        for e, c in self.terms.items():
            v = c
            for x, exp in zip(point, e):
                if exp:
                    v = dom.mul(v, dom.pow(x, exp))
            acc = dom.add(acc, v)
        return acc

    def truncate(self, order: int) -> "Polynomial":
        """Drop all terms of total degree >= order (work modulo m^order)."""
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        return Polynomial(
            self.vars, self.domain, {e: c for e, c in self.terms.items() if sum(e) < order}
        )

    def substitute(self, replacements: Sequence["Polynomial"], order: int | None = None) -> "Polynomial":
        """Plug a polynomial in for each variable; optionally truncate as it goes."""
        if len(replacements) != len(self.vars):
            raise ValueError("one replacement per variable required")
        target_vars = replacements[0].vars if replacements else self.vars
        dom = self.domain
        for r in replacements:
            if r.vars != target_vars or r.domain != dom:
                raise ValueError("replacements live in different rings")
        powers: dict = {}

        def power(i: int, e: int) -> "Polynomial":
            key = (i, e)
            if key in powers:
                return powers[key]
            if e == 1:
                p = replacements[i]
            else:
                p = power(i, e - 1).mul_trunc(replacements[i], order)
            powers[key] = p
            return p

        acc = Polynomial.zero(target_vars, dom)
        for exps, coeff in self.terms.items():
            term = Polynomial.constant(coeff, target_vars, dom)
            for i, e in enumerate(exps):
                if e:
                    term = term.mul_trunc(power(i, e), order)
            acc = acc + term
        return acc

    # -- comparison, display -----------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.vars == other.vars
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, self.domain, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.vars, exps) if e
            )
            cs = str(coeff)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self})"


def variables(names, domain: Domain = QQ) -> tuple[Polynomial, ...]:
    """Convenience: `x, y = variables("x y")`."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    vs = tuple(names)
    return tuple(Polynomial.variable(n, vs, domain) for n in vs)


def evaluate_many(polys: Sequence[Polynomial], point: Sequence, domain: Domain) -> list:
    """Evaluate several polynomials over the same variables at one point.

    Monomial values are cached across the whole batch.
    """
    pow_cache: dict = {}
    mono_cache: dict = {}

    def mono(exps: Exponents):
        v = mono_cache.get(exps)
        if v is None:
            v = domain.one
            for i, e in enumerate(exps):
                if e:
                    pk = (i, e)
                    pv = pow_cache.get(pk)
                    if pv is None:
                        pv = domain.pow(point[i], e)
                        pow_cache[pk] = pv
                    v = domain.mul(v, pv)
            mono_cache[exps] = v
        return v

    out = []
    for p in polys:
        acc = domain.zero
        for e, c in p.terms.items():
            acc = domain.add(acc, domain.mul(c, mono(e)))
        out.append(acc)
    return out
