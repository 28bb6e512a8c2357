"""Linear codes over GF(2^k) held as canonical generator matrices.

Biased toward enumeration throughput: binary codes keep bit-packed
integer rows (one int per row, bit j = coordinate j), codes over larger
fields keep symbol tuples.  Canonical form is reduced row echelon with
pivot columns leftmost first, so two equal codes compare equal by their
stored generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded
from .fields import Field, get_field

DEFAULT_BUDGET = 1 << 26

GF2 = get_field(1)


# ----------------------------------------------------------------------
# bit-packed row helpers (binary codes, symplectic spaces)
# ----------------------------------------------------------------------

def rref_bits(rows: Iterable[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bit-packed rows; returns (rows, pivots)."""
    mat = [int(r) for r in rows]
    m = len(mat)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        bit = 1 << c
        pivot = next((i for i in range(r, m) if mat[i] & bit), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r]
        for i in range(m):
            if i != r and mat[i] & bit:
                mat[i] ^= pv
        pivots.append(c)
        r += 1
        if r == m:
            break
    return mat[:r], pivots


def reduce_bits(vec: int, rows: Sequence[int], pivots: Sequence[int]) -> int:
    """Remainder of vec modulo the row space (rows in RREF)."""
    for row, p in zip(rows, pivots):
        if vec & (1 << p):
            vec ^= row
    return vec


def nullspace_bits(rows: Sequence[int], pivots: Sequence[int], n: int) -> list[int]:
    """Basis of {x : row . x = 0 for all rows}; rows must be in RREF."""
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        bit = 1 << f
        for row, p in zip(rows, pivots):
            if row & bit:
                v |= 1 << p
        basis.append(v)
    return basis


# ----------------------------------------------------------------------
# symbol-tuple row helpers (codes over GF(2^k), k > 1)
# ----------------------------------------------------------------------

def rref_syms(
    rows: Iterable[Sequence[int]], field: Field, n: int
) -> tuple[list[tuple[int, ...]], list[int]]:
    mat = [list(r) for r in rows]
    m = len(mat)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        if inv != 1:
            mat[r] = [field.mul(inv, e) for e in mat[r]]
        pv = mat[r]
        for i in range(m):
            f = mat[i][c]
            if i != r and f:
                mat[i] = [e ^ field.mul(f, p) for e, p in zip(mat[i], pv)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in mat[:r]], pivots


def reduce_syms(
    vec: Sequence[int],
    rows: Sequence[Sequence[int]],
    pivots: Sequence[int],
    field: Field,
) -> tuple[int, ...]:
    out = list(vec)
    for row, p in zip(rows, pivots):
        f = out[p]
        if f:
            out = [e ^ field.mul(f, r) for e, r in zip(out, row)]
    return tuple(out)


def nullspace_syms(
    rows: Sequence[Sequence[int]], pivots: Sequence[int], field: Field, n: int
) -> list[tuple[int, ...]]:
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [0] * n
        v[f] = 1
        for row, p in zip(rows, pivots):
            v[p] = row[f]
        basis.append(tuple(v))
    return basis


# ----------------------------------------------------------------------
# weight vectors
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    """All-nonzero coordinate weights for scaled inner products."""

    field: Field
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        for e in self.entries:
            if not 0 < e < self.field.order:
                raise ValueError(f"weight entries must be nonzero field elements, got {e}")

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def ones(cls, field: Field, n: int) -> "WeightVector":
        return cls(field, (1,) * n)

    def sqrt(self) -> "WeightVector":
        f = self.field
        return WeightVector(f, tuple(f.sqrt(e) for e in self.entries))

    def squared(self) -> "WeightVector":
        f = self.field
        return WeightVector(f, tuple(f.mul(e, e) for e in self.entries))

    def inverse(self) -> "WeightVector":
        f = self.field
        return WeightVector(f, tuple(f.inv(e) for e in self.entries))


# ----------------------------------------------------------------------
# the code type
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class LinearCode:
    """A linear code as its unique reduced-row-echelon generator matrix.

    ``rows`` holds bit-packed ints when the field is GF(2) and symbol
    tuples otherwise; always produced by ``make_code``/``binary_code``.
    """

    field: Field
    n: int
    rows: tuple
    pivots: tuple[int, ...]

    @property
    def k_dim(self) -> int:
        return len(self.rows)

    @property
    def is_binary(self) -> bool:
        return self.field.k == 1

    @property
    def bit_rows(self) -> tuple[int, ...]:
        if not self.is_binary:
            raise TypeError("bit rows exist only for binary codes")
        return self.rows

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Rows as symbol tuples regardless of internal representation."""
        if self.is_binary:
            return tuple(
                tuple((r >> j) & 1 for j in range(self.n)) for r in self.rows
            )
        return self.rows

    def __repr__(self) -> str:
        return f"[{self.n},{self.k_dim}] over {self.field}"

    # -- construction ---------------------------------------------------

    @staticmethod
    def _pack(row: Sequence[int]) -> int:
        v = 0
        for j, e in enumerate(row):
            if e:
                v |= 1 << j
        return v

    # -- operations -----------------------------------------------------

    def contains(self, other: "LinearCode") -> bool:
        """True iff every generator of ``other`` lies in this row space."""
        self._check_compatible(other)
        if self.is_binary:
            return all(
                reduce_bits(r, self.rows, self.pivots) == 0 for r in other.rows
            )
        return all(
            not any(reduce_syms(r, self.rows, self.pivots, self.field))
            for r in other.rows
        )

    def dual(self) -> "LinearCode":
        """Euclidean dual; dim n - k, involutive on canonical forms."""
        if self.is_binary:
            basis = nullspace_bits(self.rows, self.pivots, self.n)
            return binary_code(self.n, basis)
        basis = nullspace_syms(self.rows, self.pivots, self.field, self.n)
        return make_code(self.field, self.n, basis)

    def weighted_dual(self, w: WeightVector) -> "LinearCode":
        """Dual under the w-weighted form sum(w_i x_i y_i)."""
        if w.field != self.field or len(w) != self.n:
            raise ValueError("weight vector does not match the code")
        if self.is_binary:
            return self.dual()  # GF(2)* = {1}
        f = self.field
        scaled = [
            tuple(f.mul(wi, e) for wi, e in zip(w.entries, row)) for row in self.rows
        ]
        rr, pv = rref_syms(scaled, f, self.n)
        basis = nullspace_syms(rr, pv, f, self.n)
        return make_code(f, self.n, basis)

    def scale(self, v: WeightVector) -> "LinearCode":
        """Coordinatewise multiplication by v; same dimension."""
        if v.field != self.field or len(v) != self.n:
            raise ValueError("scaling vector does not match the code")
        if self.is_binary:
            return self
        f = self.field
        rows = [
            tuple(f.mul(vi, e) for vi, e in zip(v.entries, row)) for row in self.rows
        ]
        return make_code(f, self.n, rows)

    def iter_codewords(self) -> Iterator[tuple[int, ...]]:
        """All q^k codewords as symbol tuples (test-sized codes only)."""
        if self.is_binary:
            for w in self._bit_codewords():
                yield tuple((w >> j) & 1 for j in range(self.n))
            return
        f = self.field
        q = f.order
        k = self.k_dim
        word = [0] * self.n
        msg = [0] * k
        yield tuple(word)
        for _ in range(q**k - 1):
            i = 0
            while True:
                old = msg[i]
                msg[i] = (old + 1) % q
                delta = old ^ msg[i]
                row = self.rows[i]
                for j in range(self.n):
                    if row[j]:
                        word[j] ^= f.mul(delta, row[j])
                if msg[i]:
                    break
                i += 1
            yield tuple(word)

    def _bit_codewords(self) -> list[int]:
        """All 2^k codewords, Gray-code order starting at 0."""
        words = [0]
        cw = 0
        prev = 0
        for t in range(1, 1 << self.k_dim):
            gray = t ^ (t >> 1)
            idx = (gray ^ prev).bit_length() - 1
            cw ^= self.rows[idx]
            prev = gray
            words.append(cw)
        return words

    def min_distance_exact(self, budget: int = DEFAULT_BUDGET) -> int:
        """Exact minimum Hamming weight over nonzero codewords.

        Raises BudgetExceeded when q^k enumerations would exceed the
        budget; the caller may fall back to designed-distance bounds.
        """
        k = self.k_dim
        if k == 0:
            raise ValueError("the zero code has no minimum distance")
        if self.field.order**k > budget:
            raise BudgetExceeded(
                f"{self.field.order}^{k} codewords exceed budget {budget}"
            )
        if self.is_binary:
            best = self.n + 1
            cw = 0
            prev = 0
            for t in range(1, 1 << k):
                gray = t ^ (t >> 1)
                idx = (gray ^ prev).bit_length() - 1
                cw ^= self.rows[idx]
                prev = gray
                w = cw.bit_count()
                if w < best:
                    best = w
                    if best == 1:
                        break
            return best
        f = self.field
        q = f.order
        word = [0] * self.n
        msg = [0] * k
        best = self.n + 1
        for _ in range(q**k - 1):
            i = 0
            while True:
                old = msg[i]
                msg[i] = (old + 1) % q
                delta = old ^ msg[i]
                row = self.rows[i]
                for j in range(self.n):
                    if row[j]:
                        word[j] ^= f.mul(delta, row[j])
                if msg[i]:
                    break
                i += 1
            w = sum(1 for e in word if e)
            if w < best:
                best = w
                if best == 1:
                    break
        return best

    def second_or_weight(self, budget: int = DEFAULT_BUDGET) -> int:
        """Min weight of the bitwise OR over pairs of distinct nonzero words.

        Defined for binary codes only (the pairwise-support notion used
        by the enlargement distance bound).
        """
        if not self.is_binary:
            raise TypeError("the OR-weight is defined for binary codes only")
        m = (1 << self.k_dim) - 1
        if m < 2:
            raise ValueError("need at least two nonzero codewords")
        pairs = m * (m - 1) // 2
        if pairs > budget:
            raise BudgetExceeded(f"{pairs} codeword pairs exceed budget {budget}")
        words = self._bit_codewords()[1:]  # drop zero
        best = self.n + 1
        for i in range(len(words)):
            wi = words[i]
            for j in range(i + 1, len(words)):
                w = (wi | words[j]).bit_count()
                if w < best:
                    best = w
        return best

    def _check_compatible(self, other: "LinearCode") -> None:
        if other.field != self.field:
            raise ValueError("codes live over different fields")
        if other.n != self.n:
            raise ValueError("codes have different lengths")


def make_code(field: Field, n: int, rows: Iterable[Sequence[int]]) -> LinearCode:
    """Canonicalize generator rows (symbol sequences) into a LinearCode."""
    rows = [list(r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"generator length {len(r)} != n = {n}")
        for e in r:
            if not 0 <= e < field.order:
                raise ValueError(f"symbol {e} outside {field}")
    if field.k == 1:
        packed = [LinearCode._pack(r) for r in rows]
        rr, pv = rref_bits(packed, n)
        return LinearCode(field, n, tuple(rr), tuple(pv))
    rr, pv = rref_syms(rows, field, n)
    return LinearCode(field, n, tuple(rr), tuple(pv))


def binary_code(n: int, bit_rows: Iterable[int]) -> LinearCode:
    """Canonicalize bit-packed rows into a binary LinearCode."""
    bit_rows = [int(r) for r in bit_rows]
    for r in bit_rows:
        if r < 0 or r >> n:
            raise ValueError(f"row {r:#x} does not fit in {n} bits")
    rr, pv = rref_bits(bit_rows, n)
    return LinearCode(GF2, n, tuple(rr), tuple(pv))


def zero_code(field: Field, n: int) -> LinearCode:
    return LinearCode(field, n, (), ())


def full_code(field: Field, n: int) -> LinearCode:
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    return make_code(field, n, rows)
