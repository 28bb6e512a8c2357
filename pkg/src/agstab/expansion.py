"""Symbolwise binary expansion of GF(2^k) codes in a self-dual basis.

Expanding in a trace-orthonormal basis makes binary expansion commute
with duality, so dual-containing codes descend to dual-containing
binary codes.  Bit layout: symbol j occupies bit positions j*k ..
j*k + k - 1, basis-index-major, so per-symbol weight accounting stays
contiguous and artifacts are bit-exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import CertificationError
from .fields import Field, SelfDualBasis
from .linear import (
    LinearCode,
    binary_code,
    make_code,
    nullspace_syms,
    reduce_syms,
    rref_syms,
    zero_code,
)
from .curves import DualChainTriple


@dataclass(frozen=True)
class ExpansionMap:
    """A field together with the self-dual basis used for descent."""

    field: Field
    basis: SelfDualBasis

    def __post_init__(self) -> None:
        if self.basis.field != self.field:
            raise ValueError("basis belongs to a different field")
        # SelfDualBasis already validated its Gram matrix.

    def expand_word(self, symbols: Sequence[int]) -> int:
        """Bit-packed binary image of a symbol vector (length k*n)."""
        f = self.field
        k = f.k
        out = 0
        for j, x in enumerate(symbols):
            if x == 0:
                continue
            for i, alpha in enumerate(self.basis.elements):
                if f.trace(f.mul(x, alpha)):
                    out |= 1 << (j * k + i)
        return out


def expand_code(code: LinearCode, emap: ExpansionMap) -> LinearCode:
    """Binary [kn, k*dim] image of a GF(2^k) code under the expansion map."""
    if code.field != emap.field:
        raise ValueError("code and expansion map use different fields")
    f = emap.field
    k = f.k
    rows = []
    for gen in code.rows:
        for alpha in emap.basis.elements:
            scaled = tuple(f.mul(alpha, e) for e in gen)
            rows.append(emap.expand_word(scaled))
    out = binary_code(k * code.n, rows)
    if out.k_dim != k * code.k_dim:
        raise CertificationError(
            f"expansion rank {out.k_dim} != k*dim = {k * code.k_dim}"
        )
    return out


@dataclass(frozen=True)
class ExpandedPair:
    """Binary descent of a dual chain: D' > D > D_perp, certified."""

    d: LinearCode
    d_prime: LinearCode
    basis: SelfDualBasis
    source: DualChainTriple


def expand_chain(triple: DualChainTriple, emap: ExpansionMap) -> ExpandedPair:
    d = expand_code(triple.c, emap)
    d_prime = expand_code(triple.c_prime, emap)
    if not d_prime.contains(d):
        raise CertificationError("expanded D' does not contain D")
    if not d.contains(d.dual()):
        raise CertificationError("expanded D does not contain its dual")
    return ExpandedPair(d=d, d_prime=d_prime, basis=emap.basis, source=triple)


def random_dual_containing_code(
    field: Field, n: int, rng: random.Random, max_seed_dim: int | None = None
) -> LinearCode:
    """Seeded random code C with C >= C_perp.

    Grows a self-orthogonal seed S one vector at a time (candidates are
    drawn from the solution space of "orthogonal to S and to itself",
    the latter being linear in characteristic 2), then returns dual(S).
    """
    target = rng.randint(0, n // 2) if max_seed_dim is None else max_seed_dim
    seed_rows: list[tuple[int, ...]] = []
    while len(seed_rows) < target:
        constraints = [list(r) for r in seed_rows]
        constraints.append([1] * n)  # sum of coordinates = 0 makes v.v = 0
        rr, pv = rref_syms(constraints, field, n)
        null = nullspace_syms(rr, pv, field, n)
        span_rr, span_pv = rref_syms(seed_rows, field, n) if seed_rows else ([], [])
        candidate = None
        for _ in range(32):
            v = [0] * n
            for b in null:
                c = rng.randrange(field.order)
                if c:
                    v = [e ^ field.mul(c, be) for e, be in zip(v, b)]
            rem = reduce_syms(v, span_rr, span_pv, field) if seed_rows else tuple(v)
            if any(rem):
                candidate = tuple(v)
                break
        if candidate is None:
            break  # solution space exhausted below the target dimension
        seed_rows.append(candidate)
    if not seed_rows:
        return zero_code(field, n).dual()
    return make_code(field, n, seed_rows).dual()
