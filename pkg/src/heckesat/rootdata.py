"""Based root data, Weyl groups, duality, and minuscule cocharacters.

A root datum is stored in a single lattice pair (X*, X_*) = (Z^rank, Z^rank)
with the standard dot pairing; roots live on the X* side, coroots on the
X_* side, in matching order.  Weyl groups are explicit lists of integer
matrices acting on the cocharacter lattice.

Supported constructors and the lattice bases they use:

* ``GL(n)``   -- X* = X_* = Z^n, roots e_i - e_j, coroots e_i - e_j.
* ``SL(n)``   -- rank n-1; X* spanned by the images of e_1..e_{n-1} modulo
  (1,...,1), X_* the sum-zero sublattice in the dual coordinates.
* ``GSp(2g)`` -- rank g+1, basis (eps_1..eps_g, eta) with eta the
  similitude character; roots eps_i - eps_j, eps_i + eps_j - eta,
  2 eps_i - eta (type C_g).
* ``GSO(2n)`` -- rank n+1, basis (eps_1..eps_n, eta); roots eps_i - eps_j
  and eps_i + eps_j - eta (type D_n).
* ``GSpin(2n+1)`` -- rank n+1, basis (e_1..e_n, e_0) with e_0 the
  similitude direction; roots e_i - e_j, e_i + e_j, e_i (type B_n);
  coroots f_i - f_j, f_i + f_j - f_0, 2 f_i - f_0, so the dual datum has
  a type C_n root system (dual group of GSp type).  This basis choice is
  the documented integral normalization of the similitude cocharacter.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .intmat import mat_vec

Vector = tuple


class RootDatumError(ValueError):
    pass


class WeylBoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class RootDatum:
    name: str
    rank: int
    roots: tuple          # X*-vectors
    coroots: tuple        # X_*-vectors, same order as roots
    simple_indices: tuple  # indices into roots/coroots

    def pairing(self, char, cochar):
        return sum(a * b for a, b in zip(char, cochar))

    @property
    def simple_roots(self):
        return tuple(self.roots[i] for i in self.simple_indices)

    @property
    def simple_coroots(self):
        return tuple(self.coroots[i] for i in self.simple_indices)

    def positive_root_indices(self):
        return tuple(i for i in range(len(self.roots)) if self.is_positive(i))

    def is_positive(self, root_index):
        coeffs = self._simple_expansion(self.roots[root_index])
        return all(c >= 0 for c in coeffs)

    def _simple_expansion(self, root):
        """Coefficients of a root over the simple roots (exact, unique)."""
        basis = self.simple_roots
        k = len(basis)
        # Solve sum c_j * basis_j = root by Gaussian elimination over Q.
        rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(root[i])]
                for i in range(self.rank)]
        col = 0
        pivots = []
        for j in range(k):
            piv = next((r for r in range(col, self.rank) if rows[r][j] != 0), None)
            if piv is None:
                continue
            rows[col], rows[piv] = rows[piv], rows[col]
            pv = rows[col][j]
            rows[col] = [x / pv for x in rows[col]]
            for r in range(self.rank):
                if r != col and rows[r][j] != 0:
                    f = rows[r][j]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
            pivots.append(j)
            col += 1
        sol = [Fraction(0)] * k
        for r, j in enumerate(pivots):
            sol[j] = rows[r][k]
        for r in range(col, self.rank):
            if rows[r][k] != 0:
                raise RootDatumError("root outside the span of simple roots")
        return sol

    def delta(self):
        """Sum of all positive roots (an X*-vector)."""
        d = [0] * self.rank
        for i in self.positive_root_indices():
            for a in range(self.rank):
                d[a] += self.roots[i][a]
        return tuple(d)


@dataclass(frozen=True)
class WeylGroup:
    rank: int
    elements: tuple      # integer matrices acting on X_*
    generators: tuple    # simple-reflection matrices, in simple_indices order


@dataclass(frozen=True)
class ParabolicData:
    mu: Vector
    levi_root_indices: tuple      # positive roots pairing 0 with mu
    unipotent_root_indices: tuple  # positive roots pairing 1 with mu
    delta: Vector
    delta_p: Vector
    d: int


def _reflection_matrix_costar(root, coroot, rank):
    """Matrix of s(x) = x - <root, x> coroot acting on X_*."""
    return tuple(
        tuple((1 if a == b else 0) - coroot[a] * root[b] for b in range(rank))
        for a in range(rank)
    )


def validate(rd: RootDatum):
    """Check the root-datum axioms; raises RootDatumError on failure."""
    if len(rd.roots) != len(rd.coroots):
        raise RootDatumError("root/coroot count mismatch")
    for a, av in zip(rd.roots, rd.coroots):
        if rd.pairing(a, av) != 2:
            raise RootDatumError(f"<a, a^> != 2 for {a}, {av}")
    rootset = set(rd.roots)
    corootset = set(rd.coroots)
    for i in rd.simple_indices:
        a, av = rd.roots[i], rd.coroots[i]
        s_costar = _reflection_matrix_costar(a, av, rd.rank)
        # dual reflection on X*: y -> y - <y, a^> a
        for b in rd.roots:
            img = tuple(b[t] - rd.pairing(b, av) * a[t] for t in range(rd.rank))
            if img not in rootset:
                raise RootDatumError("simple reflection does not permute roots")
        for bv in rd.coroots:
            if mat_vec(s_costar, bv) not in corootset:
                raise RootDatumError("simple reflection does not permute coroots")
    for i in range(len(rd.roots)):
        rd._simple_expansion(rd.roots[i])  # raises if not in the span
        coeffs = rd._simple_expansion(rd.roots[i])
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            raise RootDatumError("root with mixed-sign simple expansion")
    # Cartan integers of simple pairs
    for i in rd.simple_indices:
        for j in rd.simple_indices:
            c = rd.pairing(rd.roots[i], rd.coroots[j])
            if i == j:
                if c != 2:
                    raise RootDatumError("diagonal Cartan integer != 2")
            elif c > 0:
                raise RootDatumError("positive off-diagonal Cartan integer")
    return rd


# ---------------------------------------------------------------------------
# constructors

_NAME_RE = re.compile(r"^\s*(GL|SL|GSp|GSO|GSpin)\s*\(?\s*(\d+)\s*\)?\s*$", re.I)

_CANON = {"gl": "GL", "sl": "SL", "gsp": "GSp", "gso": "GSO", "gspin": "GSpin"}


def parse_group_name(name):
    m = _NAME_RE.match(name)
    if not m:
        raise RootDatumError(f"unknown group name {name!r}")
    fam = _CANON[m.group(1).lower()]
    size = int(m.group(2))
    return fam, size


def build_group(name) -> RootDatum:
    """Construct the root datum of a named split group.

    Accepted spellings: ``GL(4)``, ``GL4``, ``GSp(6)``, ``GSO(8)``,
    ``GSpin(7)`` and case variants.
    """
    fam, size = parse_group_name(name)
    if fam == "GL":
        return _build_gl(size)
    if fam == "SL":
        return _build_sl(size)
    if fam == "GSp":
        if size < 2 or size % 2:
            raise RootDatumError("GSp size must be even and >= 2")
        return _build_gsp(size // 2)
    if fam == "GSO":
        if size < 4 or size % 2:
            raise RootDatumError("GSO size must be even and >= 4")
        return _build_gso(size // 2)
    if fam == "GSpin":
        if size < 3 or size % 2 == 0:
            raise RootDatumError("GSpin size must be odd and >= 3")
        return _build_gspin((size - 1) // 2)
    raise RootDatumError(f"unknown family {fam}")


def _e(i, n):
    return tuple(1 if j == i else 0 for j in range(n))


def _vadd(*vs):
    return tuple(sum(t) for t in zip(*vs))


def _vneg(v):
    return tuple(-x for x in v)


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _with_negatives(pairs):
    """pairs: list of (root, coroot) for the positive system; appends negatives."""
    roots = [r for r, _ in pairs] + [_vneg(r) for r, _ in pairs]
    coroots = [c for _, c in pairs] + [_vneg(c) for _, c in pairs]
    return tuple(roots), tuple(coroots)


def _build_gl(n):
    if n < 1:
        raise RootDatumError("GL size must be >= 1")
    pairs = []
    for i in range(n):
        for j in range(n):
            if i < j:
                v = _vsub(_e(i, n), _e(j, n))
                pairs.append((v, v))
    roots, coroots = _with_negatives(pairs)
    simple = tuple(k for k, (r, _) in enumerate(pairs)
                   if any(r == _vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)))
    return validate(RootDatum(f"GL({n})", n, roots, coroots, simple))


def _build_sl(n):
    if n < 2:
        raise RootDatumError("SL size must be >= 2")
    rank = n - 1
    # image of e_i in X* = Z^n / (1,..,1), coordinates in basis ebar_1..ebar_{n-1}
    def char(i):
        if i < n - 1:
            return _e(i, rank)
        return tuple(-1 for _ in range(rank))
    # coroot e_i - e_j in sum-zero coordinates (first n-1 entries)
    def cochar(i, j):
        v = [0] * n
        v[i] += 1
        v[j] -= 1
        return tuple(v[:rank])
    pairs = []
    for i in range(n):
        for j in range(n):
            if i < j:
                pairs.append((_vsub(char(i), char(j)), cochar(i, j)))
    roots, coroots = _with_negatives(pairs)
    simple = []
    for k, (_, cv) in enumerate(pairs):
        for i in range(n - 1):
            if cv == cochar(i, i + 1):
                simple.append(k)
                break
    return validate(RootDatum(f"SL({n})", rank, roots, coroots, tuple(simple)))


def _build_gsp(g):
    rank = g + 1  # (eps_1..eps_g, eta)
    eta = _e(g, rank)
    pairs = []
    for i in range(g):
        for j in range(i + 1, g):
            pairs.append((_vsub(_e(i, rank), _e(j, rank)),
                          _vsub(_e(i, rank), _e(j, rank))))
            pairs.append((_vsub(_vadd(_e(i, rank), _e(j, rank)), eta),
                          _vadd(_e(i, rank), _e(j, rank))))
    for i in range(g):
        pairs.append((_vsub(_vadd(_e(i, rank), _e(i, rank)), eta), _e(i, rank)))
    roots, coroots = _with_negatives(pairs)
    simple = []
    for k, (r, _) in enumerate(pairs):
        if any(r == _vsub(_e(i, rank), _e(i + 1, rank)) for i in range(g - 1)):
            simple.append(k)
        elif r == _vsub(_vadd(_e(g - 1, rank), _e(g - 1, rank)), eta):
            simple.append(k)
    return validate(RootDatum(f"GSp({2 * g})", rank, roots, coroots, tuple(simple)))


def _build_gso(n):
    if n < 2:
        raise RootDatumError("GSO(2n) needs n >= 2")
    rank = n + 1
    eta = _e(n, rank)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((_vsub(_e(i, rank), _e(j, rank)),
                          _vsub(_e(i, rank), _e(j, rank))))
            pairs.append((_vsub(_vadd(_e(i, rank), _e(j, rank)), eta),
                          _vadd(_e(i, rank), _e(j, rank))))
    roots, coroots = _with_negatives(pairs)
    simple = []
    for k, (r, _) in enumerate(pairs):
        if any(r == _vsub(_e(i, rank), _e(i + 1, rank)) for i in range(n - 1)):
            simple.append(k)
        elif r == _vsub(_vadd(_e(n - 2, rank), _e(n - 1, rank)), eta):
            simple.append(k)
    return validate(RootDatum(f"GSO({2 * n})", rank, roots, coroots, tuple(simple)))


def _build_gspin(n):
    rank = n + 1  # (e_1..e_n, e_0)
    f0 = _e(n, rank)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((_vsub(_e(i, rank), _e(j, rank)),
                          _vsub(_e(i, rank), _e(j, rank))))
            pairs.append((_vadd(_e(i, rank), _e(j, rank)),
                          _vsub(_vadd(_e(i, rank), _e(j, rank)), f0)))
    for i in range(n):
        pairs.append((_e(i, rank), _vsub(_vadd(_e(i, rank), _e(i, rank)), f0)))
    roots, coroots = _with_negatives(pairs)
    simple = []
    for k, (r, _) in enumerate(pairs):
        if any(r == _vsub(_e(i, rank), _e(i + 1, rank)) for i in range(n - 1)):
            simple.append(k)
        elif r == _e(n - 1, rank):
            simple.append(k)
    return validate(RootDatum(f"GSpin({2 * n + 1})", rank, roots, coroots,
                              tuple(simple)))


def dual(rd: RootDatum) -> RootDatum:
    """Dual root datum: swap characters with cocharacters."""
    name = rd.name[5:-1] if rd.name.startswith("dual(") else f"dual({rd.name})"
    return validate(RootDatum(name, rd.rank, rd.coroots, rd.roots,
                              rd.simple_indices))


# ---------------------------------------------------------------------------
# Weyl groups and cocharacter combinatorics

def weyl_group(rd: RootDatum, max_elements=10 ** 6) -> WeylGroup:
    """Closure of the simple reflections acting on X_*."""
    gens = tuple(
        _reflection_matrix_costar(rd.roots[i], rd.coroots[i], rd.rank)
        for i in rd.simple_indices
    )
    seen = {identity_matrix(rd.rank)}
    frontier = [identity_matrix(rd.rank)]
    from .intmat import mat_mul
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = mat_mul(g, w)
                if wg not in seen:
                    seen.add(wg)
                    nxt.append(wg)
                    if len(seen) > max_elements:
                        raise WeylBoundError(
                            f"Weyl closure exceeds {max_elements} elements"
                        )
        frontier = nxt
    return WeylGroup(rd.rank, tuple(sorted(seen)), gens)


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def weyl_order_formula(rd: RootDatum):
    """Classical |W| from the constructor name, for cross-checks."""
    import math
    fam, size = parse_group_name(rd.name)
    if fam in ("GL", "SL"):
        return math.factorial(size)
    if fam == "GSp":
        g = size // 2
        return 2 ** g * math.factorial(g)
    if fam == "GSO":
        n = size // 2
        return 2 ** (n - 1) * math.factorial(n)
    if fam == "GSpin":
        n = (size - 1) // 2
        return 2 ** n * math.factorial(n)
    raise RootDatumError(rd.name)


def is_minuscule(rd: RootDatum, mu) -> bool:
    """True iff <alpha, mu> lies in {-1, 0, 1} for every root alpha."""
    return all(rd.pairing(a, mu) in (-1, 0, 1) for a in rd.roots)


def is_dominant(rd: RootDatum, mu) -> bool:
    return all(rd.pairing(rd.roots[i], mu) >= 0
               for i in rd.positive_root_indices())


def dominant_representative(rd: RootDatum, mu):
    """The unique dominant vector in the Weyl orbit of mu."""
    mu = tuple(mu)
    simple = [(rd.roots[i], rd.coroots[i]) for i in rd.simple_indices]
    changed = True
    while changed:
        changed = False
        for a, av in simple:
            c = rd.pairing(a, mu)
            if c < 0:
                mu = tuple(mu[t] - c * av[t] for t in range(rd.rank))
                changed = True
    return mu


def orbit(w: WeylGroup, mu):
    """The full Weyl orbit of a cocharacter, as a set of tuples."""
    mu = tuple(mu)
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for x in frontier:
            for g in w.generators:
                y = mat_vec(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def parabolic_data(rd: RootDatum, mu) -> ParabolicData:
    """Levi/unipotent split determined by a dominant minuscule cocharacter."""
    mu = tuple(mu)
    if not is_minuscule(rd, mu):
        raise RootDatumError(f"{mu} is not minuscule for {rd.name}")
    if not is_dominant(rd, mu):
        raise RootDatumError(f"{mu} is not dominant for {rd.name}")
    pos = rd.positive_root_indices()
    levi = tuple(i for i in pos if rd.pairing(rd.roots[i], mu) == 0)
    unip = tuple(i for i in pos if rd.pairing(rd.roots[i], mu) == 1)
    delta = rd.delta()
    dp = [0] * rd.rank
    for i in unip:
        for a in range(rd.rank):
            dp[a] += rd.roots[i][a]
    delta_p = tuple(dp)
    d1 = rd.pairing(delta, mu)
    d2 = rd.pairing(delta_p, mu)
    d3 = len(unip)
    if not d1 == d2 == d3:
        raise RootDatumError(
            f"inconsistent d: <mu,delta>={d1}, <mu,delta_P>={d2}, #unip={d3}"
        )
    return ParabolicData(mu, levi, unip, delta, delta_p, d1)


def enumerate_dominant_minuscule(rd: RootDatum, box=(0, 1)):
    """Dominant minuscule cocharacters with coordinates in the given box.

    Every noncentral minuscule orbit of the constructor groups has a
    representative in the {0,1} box under the documented bases.
    """
    from itertools import product
    out = []
    for mu in product(range(box[0], box[1] + 1), repeat=rd.rank):
        if is_minuscule(rd, mu) and is_dominant(rd, mu):
            out.append(mu)
    return out


def named_cocharacter(rd: RootDatum, alias):
    """Resolve a documented cocharacter alias for a constructor group.

    * GL(n): ``std`` = (1, 0, ..., 0); ``central`` = (1, ..., 1).
    * GSp(2g): ``siegel`` = (1, ..., 1, 1).
    * GSO(2n): ``half-spin`` = (1, ..., 1, 1).
    * GSpin(2n+1): ``spin`` = (1, 0, ..., 0, 0), the unique noncentral
      dominant minuscule cocharacter in the documented basis; ``central``
      = the similitude direction e_0.
    """
    fam, size = parse_group_name(rd.name)
    alias = alias.lower().replace("_", "-")
    n = rd.rank
    if alias == "central":
        if fam == "GL":
            return tuple(1 for _ in range(n))
        if fam in ("GSp", "GSO"):
            # z with <eps_i - eps_j, z> = 0 and <eps_i + eps_j - eta, z> = 0
            return tuple(1 for _ in range(n - 1)) + (2,)
        return _e(n - 1, n)  # GSpin: the e_0 direction
    if fam == "GL" and alias in ("std", "standard"):
        return _e(0, n)
    if fam == "GSp" and alias == "siegel":
        return tuple(1 for _ in range(n))
    if fam == "GSO" and alias == "half-spin":
        return tuple(1 for _ in range(n))
    if fam == "GSpin" and alias == "spin":
        return _e(0, n)
    raise RootDatumError(f"no cocharacter alias {alias!r} for {rd.name}")


# ---------------------------------------------------------------------------
# serialization

def to_dict(rd: RootDatum):
    return {
        "name": rd.name,
        "rank": rd.rank,
        "roots": [list(r) for r in rd.roots],
        "coroots": [list(c) for c in rd.coroots],
        "simple_indices": list(rd.simple_indices),
    }


def from_dict(d) -> RootDatum:
    return validate(RootDatum(
        d["name"], int(d["rank"]),
        tuple(tuple(int(x) for x in r) for r in d["roots"]),
        tuple(tuple(int(x) for x in c) for c in d["coroots"]),
        tuple(int(i) for i in d["simple_indices"]),
    ))


def to_json(rd: RootDatum) -> str:
    return json.dumps(to_dict(rd), sort_keys=True)


def from_json(s) -> RootDatum:
    return from_dict(json.loads(s))
