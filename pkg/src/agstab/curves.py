"""One-point evaluation codes on the projective line and Hermitian curves.

The Hermitian curve x^(q+1) = y^q + y over GF(q^2) has q^3 affine
rational points and genus q(q-1)/2; the distinguished point sits at
infinity, where x has pole order q and y pole order q+1.  Monomials
x^i y^j with j < q therefore give an explicit basis of the one-point
Riemann-Roch space, and evaluation at the affine points yields the
codes.  The projective line (genus 0) is the same machinery with plain
polynomials.

Dual containment is arranged through a twist vector w: an all-nonzero
solution of the bilinear system  sum_i w_i f(P_i) g(P_i) = 0  over all
basis pairs (f, g).  Its entrywise square root v converts the weighted
self-orthogonality into true Euclidean dual containment, giving
certified triples  C' > C >= C_perp  with one shared v for both divisor
degrees.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import CertificationError, TwistSearchError
from .fields import Field, get_field, ordered_elements
from .linear import LinearCode, WeightVector, make_code, nullspace_syms, rref_syms

_HERMITIAN_Q = (2, 4, 8)

LINE = "line"
HERMITIAN = "hermitian"


@dataclass(frozen=True)
class Curve:
    """A supported curve with its ordered affine point list.

    ``q`` is the Hermitian base parameter (symbol field GF(q^2)); for
    the line it is simply the field size.  Points exclude the
    distinguished point at infinity.
    """

    kind: str
    field: Field
    q: int
    genus: int
    points: tuple[tuple[int, int], ...]

    @property
    def n_points(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"{self.kind}(q={self.q}, genus={self.genus}, points={self.n_points})"


def enumerate_curve(kind: str, q: int) -> Curve:
    """Build a curve with deterministic point order.

    Points are sorted lexicographically on (x, y) with field elements
    in generator-power order (zero first), so generator matrices are
    reproducible.
    """
    if kind == LINE:
        k = q.bit_length() - 1
        if q < 2 or q != 1 << k:
            raise ValueError(f"line needs a field size 2^k, got {q}")
        field = get_field(k)
        pts = [(x, 0) for x in ordered_elements(field)]
        return Curve(kind=LINE, field=field, q=q, genus=0, points=tuple(pts))
    if kind == HERMITIAN:
        if q not in _HERMITIAN_Q:
            raise ValueError(f"hermitian q must be one of {_HERMITIAN_Q}, got {q}")
        s = q.bit_length() - 1
        field = get_field(2 * s)
        order = ordered_elements(field)
        pts = []
        for x in order:
            lhs = field.pow(x, q + 1)
            for y in order:
                if field.add(field.pow(y, q), y) == lhs:
                    pts.append((x, y))
        if len(pts) != q**3:
            raise CertificationError(
                f"hermitian point count {len(pts)} != q^3 = {q ** 3}"
            )
        return Curve(
            kind=HERMITIAN, field=field, q=q, genus=q * (q - 1) // 2, points=tuple(pts)
        )
    raise ValueError(f"unknown curve kind {kind!r}")


@dataclass(frozen=True)
class RRBasis:
    """Monomial basis x^i y^j of the functions with pole order <= a at infinity."""

    curve: Curve
    a: int
    monomials: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.monomials)


def pole_order(curve: Curve, monomial: tuple[int, int]) -> int:
    i, j = monomial
    if curve.kind == LINE:
        return i
    return curve.q * i + (curve.q + 1) * j


def rr_basis(curve: Curve, a: int) -> RRBasis:
    """Monomials with pole order <= a, sorted by pole order.

    For a >= 2g - 1 the count is exactly a - g + 1.
    """
    if a < 0:
        raise ValueError("divisor degree must be nonnegative")
    if curve.kind == LINE:
        monos = [(i, 0) for i in range(a + 1)]
    else:
        q = curve.q
        monos = []
        for j in range(q):
            rem = a - (q + 1) * j
            if rem < 0:
                continue
            monos.extend((i, j) for i in range(rem // q + 1))
        monos.sort(key=lambda m: pole_order(curve, m))
    if a >= 2 * curve.genus - 1 and len(monos) != a - curve.genus + 1:
        raise CertificationError(
            f"basis size {len(monos)} != a - g + 1 = {a - curve.genus + 1}"
        )
    return RRBasis(curve=curve, a=a, monomials=tuple(monos))


def _eval_monomial(curve: Curve, mono: tuple[int, int], point: tuple[int, int]) -> int:
    f = curve.field
    i, j = mono
    x, y = point
    return f.mul(f.pow(x, i), f.pow(y, j))


def evaluation_code(
    curve: Curve, a: int, kept: tuple[int, ...] | None = None
) -> LinearCode:
    """Image of evaluating the degree-a basis at the (kept) points."""
    idx = tuple(range(curve.n_points)) if kept is None else kept
    pts = [curve.points[i] for i in idx]
    n = len(pts)
    if a >= n:
        raise ValueError(f"a={a} >= n={n}: evaluation is not injective")
    if a < 2 * curve.genus - 1:
        warnings.warn(
            f"a={a} below 2g-1={2 * curve.genus - 1}: dimension may differ from a-g+1",
            stacklevel=2,
        )
    basis = rr_basis(curve, a)
    rows = [
        [_eval_monomial(curve, m, p) for p in pts] for m in basis.monomials
    ]
    code = make_code(curve.field, n, rows)
    if a >= 2 * curve.genus - 1 and code.k_dim != len(basis):
        raise CertificationError(
            f"evaluation rank {code.k_dim} != basis size {len(basis)}"
        )
    return code


@dataclass(frozen=True)
class TwistSolution:
    """An all-nonzero twist vector over the retained point set."""

    weights: WeightVector
    kept: tuple[int, ...]
    dropped: tuple[int, ...]
    regime: str  # "standard" | "extended"
    attempts: int


def _product_rows(curve: Curve, a: int) -> list[tuple[int, ...]]:
    """Evaluations of all pairwise products of the degree-a basis, deduplicated."""
    monos = rr_basis(curve, a).monomials
    prods = sorted(
        {(m1[0] + m2[0], m1[1] + m2[1]) for m1 in monos for m2 in monos}
    )
    seen: set[tuple[int, ...]] = set()
    rows = []
    for m in prods:
        row = tuple(_eval_monomial(curve, m, p) for p in curve.points)
        if row not in seen:
            seen.add(row)
            rows.append(row)
    return rows


def _all_nonzero_combination(
    basis: list[tuple[int, ...]], field: Field, limit: int
) -> tuple[list[int], int]:
    """Deterministic search for an all-nonzero vector in a spanned space.

    In echelon form every coefficient must be nonzero (each pivot
    coordinate equals its coefficient), so the search runs over
    (q-1)^r combinations in odometer order with incremental updates.
    Beyond ``limit`` combinations a greedy repair pass is used instead.
    """
    r = len(basis)
    n = len(basis[0])
    q = field.order
    nz = list(field.exp)  # 1, g, g^2, ... in generator-power order

    w = [0] * n
    for b in basis:
        for j in range(n):
            w[j] ^= b[j]
    attempts = 1
    if all(w):
        return w, attempts

    if (q - 1) ** r <= limit:
        coeff = [0] * r  # indices into nz, all start at nz[0] = 1
        while True:
            pos = 0
            wrapped = False
            while True:
                old = nz[coeff[pos]]
                coeff[pos] += 1
                if coeff[pos] == q - 1:
                    coeff[pos] = 0
                    delta = old ^ nz[0]
                else:
                    delta = old ^ nz[coeff[pos]]
                row = basis[pos]
                for j in range(n):
                    if row[j]:
                        w[j] ^= field.mul(delta, row[j])
                if coeff[pos]:
                    break
                pos += 1
                if pos == r:
                    wrapped = True
                    break
            if wrapped:
                raise TwistSearchError(
                    "no all-nonzero combination exists in the solution space"
                )
            attempts += 1
            if all(w):
                return w, attempts

    # Greedy repair: accept only strictly fewer zero coordinates, so the
    # loop terminates within n steps; deterministic first-improvement.
    zeros = sum(1 for e in w if e == 0)
    while zeros:
        target = next(i for i, e in enumerate(w) if e == 0)
        improved = None
        for b in basis:
            if b[target] == 0:
                continue
            for c in nz:
                cand = [e ^ field.mul(c, be) for e, be in zip(w, b)]
                attempts += 1
                zc = sum(1 for e in cand if e == 0)
                if zc < zeros and (improved is None or zc < improved[0]):
                    improved = (zc, cand)
            if improved is not None and improved[0] == 0:
                break
        if improved is None:
            raise TwistSearchError(
                f"greedy search stalled with {zeros} zero coordinates"
            )
        zeros, w = improved
    return w, attempts


def solve_twist_vector(
    curve: Curve,
    a: int,
    allow_extended: bool = False,
    search_limit: int = 1 << 16,
) -> TwistSolution:
    """Find w (all entries nonzero) with the degree-a code w-self-orthogonal.

    Coordinates forced to zero by the constraint system are dropped
    from the point set and reported in the solution.  The divisor bound
    2a <= n' + g - 2 is enforced unless ``allow_extended`` is set, in
    which case the regime is recorded.
    """
    n_full = curve.n_points
    standard = 2 * a <= n_full + curve.genus - 2
    if not standard and not allow_extended:
        raise ValueError(
            f"2a={2 * a} exceeds n'+g-2={n_full + curve.genus - 2}; "
            "pass allow_extended to try anyway"
        )

    field = curve.field
    rows = _product_rows(curve, a)
    rr, pv = rref_syms(rows, field, n_full)
    null = nullspace_syms(rr, pv, field, n_full)
    if not null:
        raise TwistSearchError("constraint system has a trivial solution space")

    forced = [
        i for i in range(n_full) if all(b[i] == 0 for b in null)
    ]
    kept = tuple(i for i in range(n_full) if i not in forced)
    if not kept:
        raise TwistSearchError("every coordinate is forced to zero")
    if forced:
        null = [tuple(b[i] for i in kept) for b in null]
        null, _ = rref_syms(null, field, len(kept))
        null = list(null)

    w, attempts = _all_nonzero_combination(list(null), field, search_limit)
    weights = WeightVector(field, tuple(w))

    # Defining property, checked rather than assumed.
    ev = evaluation_code(curve, a, kept)
    if not ev.weighted_dual(weights).contains(ev):
        raise CertificationError("twist vector fails the self-orthogonality check")

    return TwistSolution(
        weights=weights,
        kept=kept,
        dropped=tuple(forced),
        regime="standard" if standard else "extended",
        attempts=attempts,
    )


@dataclass(frozen=True)
class DualChainTriple:
    """Certified chain C' > C >= C_perp over one field, with provenance."""

    c: LinearCode
    c_prime: LinearCode
    curve_kind: str
    q: int
    genus: int
    a: int
    a_prime: int
    twist: WeightVector
    scaling: WeightVector
    kept_points: tuple[int, ...]
    dropped_points: tuple[int, ...]
    regime: str
    designed_d: int
    designed_d_prime: int

    @property
    def n(self) -> int:
        return self.c.n

    @property
    def field(self) -> Field:
        return self.c.field


def build_dual_chain(
    curve: Curve,
    a: int,
    a_prime: int,
    allow_extended: bool = False,
) -> DualChainTriple:
    """Construct and certify the triple for divisor degrees a' < a.

    One twist vector serves both degrees (the smaller basis is a subset
    of the larger, so its constraints are a subset too).  Containments
    and dimensions are verified exactly; failure raises.
    """
    g = curve.genus
    if a_prime >= a:
        raise ValueError(f"need a' < a for a strict enlargement, got a'={a_prime}, a={a}")
    if a_prime < 2 * g - 1:
        raise ValueError(f"need a' >= 2g-1 = {2 * g - 1}, got {a_prime}")

    tw = solve_twist_vector(curve, a, allow_extended=allow_extended)
    n = len(tw.kept)
    if a >= n:
        raise ValueError(f"a={a} >= retained n={n}")

    ev_a = evaluation_code(curve, a, tw.kept)
    ev_ap = evaluation_code(curve, a_prime, tw.kept)
    v = tw.weights.sqrt()
    c = ev_a.weighted_dual(tw.weights).scale(v)
    c_prime = ev_ap.weighted_dual(tw.weights).scale(v)

    if not c_prime.contains(c):
        raise CertificationError("C' does not contain C")
    if not c.contains(c.dual()):
        raise CertificationError("C does not contain its dual")
    if c.k_dim != n - a + g - 1:
        raise CertificationError(
            f"dim C = {c.k_dim} != n - a + g - 1 = {n - a + g - 1}"
        )
    if c_prime.k_dim != n - a_prime + g - 1:
        raise CertificationError(
            f"dim C' = {c_prime.k_dim} != n - a' + g - 1 = {n - a_prime + g - 1}"
        )

    return DualChainTriple(
        c=c,
        c_prime=c_prime,
        curve_kind=curve.kind,
        q=curve.q,
        genus=g,
        a=a,
        a_prime=a_prime,
        twist=tw.weights,
        scaling=v,
        kept_points=tw.kept,
        dropped_points=tw.dropped,
        regime=tw.regime,
        designed_d=max(1, a - 2 * g + 2),
        designed_d_prime=max(1, a_prime - 2 * g + 2),
    )
