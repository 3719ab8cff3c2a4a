"""Finite point-set model of the correspondence algebra with Frobenius.

Varieties are modeled by their finite sets of points over an extension
field, zero-cycles by integer coefficient vectors, and correspondences
by integer weight matrices; composition is matrix product and the graph
of Frobenius is a permutation matrix.  This is deliberately a
0-dimensional sanity model: rational equivalence collapses, so the
vanishing criterion (a correspondence killed by every point mass is
zero) is exact linear algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .intmat import as_matrix, mat_mul


class CorrespError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePointSet:
    """Point set of a variety over F_{q^m} with its Frobenius permutation."""
    size: int
    frobenius: tuple   # permutation of range(size), i -> frobenius[i]
    q: int
    m: int

    def __post_init__(self):
        if sorted(self.frobenius) != list(range(self.size)):
            raise CorrespError("frobenius is not a permutation")
        if self._perm_power(self.m) != tuple(range(self.size)):
            raise CorrespError("frobenius**m is not the identity")

    def _perm_power(self, k):
        out = tuple(range(self.size))
        for _ in range(k):
            out = tuple(self.frobenius[i] for i in out)
        return out


@dataclass(frozen=True)
class Correspondence:
    source: FinitePointSet
    target: FinitePointSet
    weights: tuple  # integer matrix, source.size x target.size

    def __post_init__(self):
        w = self.weights
        if len(w) != self.source.size or any(
                len(r) != self.target.size for r in w):
            raise CorrespError("weight matrix shape mismatch")

    @classmethod
    def from_rows(cls, source, target, rows):
        return cls(source, target, as_matrix(rows) if rows else ())

    def __add__(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise CorrespError("mismatched point sets in sum")
        return Correspondence(self.source, self.target, tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.weights, other.weights)))

    def __neg__(self):
        return Correspondence(self.source, self.target, tuple(
            tuple(-x for x in r) for r in self.weights))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Correspondence(self.source, self.target, tuple(
            tuple(c * x for x in r) for r in self.weights))


@dataclass(frozen=True)
class CycleZero:
    base: FinitePointSet
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.base.size:
            raise CorrespError("cycle length mismatch")

    @classmethod
    def point_mass(cls, base, index):
        return cls(base, tuple(int(i == index) for i in range(base.size)))

    def is_zero(self):
        return all(c == 0 for c in self.coefficients)


def identity_corr(v: FinitePointSet) -> Correspondence:
    return Correspondence(v, v, tuple(
        tuple(int(i == j) for j in range(v.size)) for i in range(v.size)))


def graph_corr(source: FinitePointSet, target: FinitePointSet,
               mapping) -> Correspondence:
    """Graph of a map source -> target given as an index sequence."""
    return Correspondence(source, target, tuple(
        tuple(int(mapping[i] == j) for j in range(target.size))
        for i in range(source.size)))


def frobenius_corr(v: FinitePointSet) -> Correspondence:
    """Graph of the q-power Frobenius as a permutation matrix."""
    return graph_corr(v, v, v.frobenius)


def compose(c: Correspondence, d: Correspondence) -> Correspondence:
    if c.target != d.source:
        raise CorrespError("middle point sets do not match")
    return Correspondence(c.source, d.target, mat_mul(c.weights, d.weights))


def act(p: CycleZero, c: Correspondence) -> CycleZero:
    """Right action of a correspondence on a zero-cycle."""
    if p.base != c.source:
        raise CorrespError("cycle base does not match correspondence source")
    coeffs = tuple(
        sum(p.coefficients[i] * c.weights[i][j] for i in range(c.source.size))
        for j in range(c.target.size))
    return CycleZero(c.target, coeffs)


def vanishing_test(c: Correspondence) -> bool:
    """True iff every point mass is annihilated, i.e. the matrix is zero."""
    return all(
        act(CycleZero.point_mass(c.source, i), c).is_zero()
        for i in range(c.source.size))


# ---------------------------------------------------------------------------
# serialization

def point_set_to_dict(v: FinitePointSet):
    return {"size": v.size, "frobenius": list(v.frobenius),
            "q": v.q, "m": v.m}


def point_set_from_dict(d) -> FinitePointSet:
    return FinitePointSet(int(d["size"]),
                          tuple(int(x) for x in d["frobenius"]),
                          int(d["q"]), int(d["m"]))


def corr_to_dict(c: Correspondence):
    return {"source": point_set_to_dict(c.source),
            "target": point_set_to_dict(c.target),
            "weights": [list(r) for r in c.weights]}


def corr_from_dict(d) -> Correspondence:
    return Correspondence(
        point_set_from_dict(d["source"]), point_set_from_dict(d["target"]),
        tuple(tuple(int(x) for x in r) for r in d["weights"]))


def corr_to_json(c) -> str:
    return json.dumps(corr_to_dict(c), sort_keys=True)


def corr_from_json(s) -> Correspondence:
    return corr_from_dict(json.loads(s))
