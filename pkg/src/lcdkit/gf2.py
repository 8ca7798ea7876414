"""Dense GF(2) linear algebra on bit-packed rows.

Vectors and matrix rows are stored as Python ints (bit i = coordinate i),
so every row operation is a single XOR and inner products are one AND plus
a popcount.  All values are immutable once constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class BitVector:
    """A vector over GF(2). Bit i of ``bits`` is coordinate i (0-based)."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits >> self.length:
            raise ValueError("set bits beyond vector length")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        s = s.strip()
        if any(c not in "01" for c in s):
            raise ValueError(f"not a 0/1 string: {s!r}")
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
        return cls(len(s), bits)

    @classmethod
    def zero(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def inner(self, other: "BitVector") -> int:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.length + other.length,
                         self.bits | (other.bits << self.length))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0"
                       for i in range(self.length))


@dataclass(frozen=True)
class BitMatrix:
    """A matrix over GF(2), rows bit-packed as ints (bit j = column j)."""

    rows: tuple
    cols: int

    def __post_init__(self):
        for r in self.rows:
            if r >> self.cols:
                raise ValueError("set bits beyond column count")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        return cls(tuple(rows), cols)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        vecs = [BitVector.from_string(s) for s in lines]
        if not vecs:
            raise ValueError("empty matrix needs explicit column count")
        cols = vecs[0].length
        if any(v.length != cols for v in vecs):
            raise ValueError("ragged rows")
        return cls(tuple(v.bits for v in vecs), cols)

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(k)), k)

    @classmethod
    def zeros(cls, nrows: int, cols: int) -> "BitMatrix":
        return cls((0,) * nrows, cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.rows[i])

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(tuple(out), self.nrows)

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                j = (rr & -rr).bit_length() - 1
                acc ^= other.rows[j]
                rr &= rr - 1
            out.append(acc)
        return BitMatrix(tuple(out), other.cols)

    def apply(self, v: BitVector) -> BitVector:
        """Matrix-vector product M v (v indexed by columns)."""
        if v.length != self.cols:
            raise ValueError("dimension mismatch")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.nrows, bits)

    def is_symmetric(self) -> bool:
        return self.nrows == self.cols and self == self.transpose()

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return BitMatrix(self.rows + other.rows, self.cols)

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.nrows))


def rank(M: BitMatrix) -> int:
    return rank_of_rows(M.rows)


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of bit-packed rows via forward elimination."""
    basis = []  # (pivot column, reduced row)
    for r in rows:
        for col, w in basis:
            if (r >> col) & 1:
                r ^= w
        if r:
            basis.append(((r & -r).bit_length() - 1, r))
    return len(basis)


def rref(M: BitMatrix) -> tuple:
    """Reduced row echelon form.

    Returns (R, pivot_cols) with zero rows dropped and pivot columns in
    increasing order.
    """
    work = []
    for r in M.rows:
        for w in work:
            low = (w & -w).bit_length() - 1
            if (r >> low) & 1:
                r ^= w
        if r:
            work.append(r)
            work.sort(key=lambda x: (x & -x).bit_length())
    # back-substitute
    for i, w in enumerate(work):
        low = (w & -w).bit_length() - 1
        for j in range(i):
            if (work[j] >> low) & 1:
                work[j] ^= w
    pivot_cols = [(w & -w).bit_length() - 1 for w in work]
    return BitMatrix(tuple(work), M.cols), pivot_cols


def gram(G: BitMatrix) -> BitMatrix:
    """G * G^T: the Gram matrix of the rows of G."""
    k = G.nrows
    out = []
    for i in range(k):
        ri = G.rows[i]
        acc = 0
        for j in range(k):
            if (ri & G.rows[j]).bit_count() & 1:
                acc |= 1 << j
        out.append(acc)
    return BitMatrix(tuple(out), k)


def is_nonsingular(M: BitMatrix) -> bool:
    return M.nrows == M.cols and rank(M) == M.nrows


def solve(M: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Express b as a combination of the rows of M.

    Returns x (length M.nrows) with x * M = b, or None when b is outside
    the row space.  Absence is a value, not an error.
    """
    if b.length != M.cols:
        raise ValueError("dimension mismatch")
    k = M.nrows
    # augment each row with its combination tag in the high bits
    aug = [M.rows[i] | (1 << (M.cols + i)) for i in range(k)]
    mask = (1 << M.cols) - 1
    basis = []  # (pivot column, augmented row)
    for a in aug:
        for col, w in basis:
            if (a >> col) & 1:
                a ^= w
        if a & mask:
            basis.append((((a & mask) & -(a & mask)).bit_length() - 1, a))
    acc = b.bits
    combo = 0
    for col, w in basis:
        if (acc >> col) & 1:
            acc ^= w & mask
            combo ^= w >> M.cols
    if acc:
        return None
    return BitVector(k, combo)


def nullspace(M: BitMatrix) -> BitMatrix:
    """Basis of the right null space {v : M v = 0}, rows of the result."""
    R, pivot_cols = rref(M)
    pivset = set(pivot_cols)
    free = [j for j in range(M.cols) if j not in pivset]
    out = []
    for f in free:
        v = 1 << f
        for prow, pcol in zip(R.rows, pivot_cols):
            if (prow >> f) & 1:
                v |= 1 << pcol
        out.append(v)
    return BitMatrix(tuple(out), M.cols)


def row_space_contains(M: BitMatrix, v: BitVector) -> bool:
    return solve(M, v) is not None


def same_row_space(A: BitMatrix, B: BitMatrix) -> bool:
    if A.cols != B.cols:
        return False
    return rref(A) == rref(B)


def congruent_normal_form(S: BitMatrix) -> tuple:
    """Normal form of a symmetric matrix under congruence P S P^T.

    Returns (P, N, s) with P invertible, N = P S P^T = diag(0_s, A) where
    A is diag(J_2, ..., J_2) when S has zero diagonal (alternating case)
    and an identity block otherwise; s = nrows - rank(S).

    Pivoting is greedy: first a diagonal 1, else a coupled pair, else the
    row lies in the radical; ties break to the lowest index.
    """
    if not S.is_symmetric():
        raise ValueError("matrix is not symmetric")
    k = S.nrows

    def form(x: int, y: int) -> int:
        acc = 0
        xx = x
        while xx:
            i = (xx & -xx).bit_length() - 1
            acc ^= (S.rows[i] & y).bit_count()
            xx &= xx - 1
        return acc & 1

    pending = [1 << i for i in range(k)]
    ortho = []
    sympl = []
    while pending:
        di = next((i for i, v in enumerate(pending) if form(v, v)), None)
        if di is not None:
            w = pending.pop(di)
            pending = [v ^ w if form(v, w) else v for v in pending]
            ortho.append(w)
            continue
        pair = None
        for i in range(len(pending)):
            for j in range(i + 1, len(pending)):
                if form(pending[i], pending[j]):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break  # radical
        i, j = pair
        u, v = pending[i], pending[j]
        del pending[j], pending[i]
        pending = [x ^ (u if form(x, v) else 0) ^ (v if form(x, u) else 0)
                   for x in pending]
        sympl.append((u, v))
    radical = pending
    if ortho and sympl:
        # non-alternating: fold each J_2 block into orthonormal directions
        for u, v in sympl:
            w = ortho.pop()
            ortho.extend([u ^ w, v ^ w, u ^ v ^ w])
        sympl = []
    rows = list(radical)
    if sympl:
        for u, v in sympl:
            rows.extend([u, v])
    else:
        rows.extend(ortho)
    P = BitMatrix(tuple(rows), k)
    N = P.mul(S).mul(P.transpose())
    return P, N, len(radical)
