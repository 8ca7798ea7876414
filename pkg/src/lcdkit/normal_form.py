"""Constructive basis theory for binary codes under the standard form.

Produces self-verifying certificates: a transformed generator basis
together with the exact block structure its Gram matrix must take —
either diag(0_s, A) for a code alone, or the coupled block form

    ( 0_s  0    I_s  0  )
    ( 0    A_1  0    0  )          A_2 = diag(1,...,1,0,...,0), s_1 ones
    ( I_s  0    A_2  0  )          A_1, A_3 each identity or a direct
    ( 0    0    0    A_3 )         sum of J_2 blocks

for a distinguished subcode spanned by the first k_1 rows.  Every
certificate is checked bit-exactly against its declared shape before it
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from . import gf2
from .gf2 import BitMatrix, BitVector
from .codes import LinearCode

ORTHONORMAL = "orthonormal"
SYMPLECTIC = "symplectic"
ABSENT = "absent"


def _ip(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def _block_rows(kind: str, size: int, offset: int, width: int) -> List[int]:
    """Rows of an identity or J_2-sum block placed at a diagonal offset."""
    rows = []
    if kind == ORTHONORMAL:
        for i in range(size):
            rows.append(1 << (offset + i))
    elif kind == SYMPLECTIC:
        if size % 2:
            raise ValueError("symplectic block needs even size")
        for i in range(0, size, 2):
            rows.append(1 << (offset + i + 1))
            rows.append(1 << (offset + i))
    elif kind == ABSENT:
        if size:
            raise ValueError("absent block must be empty")
    else:
        raise ValueError(f"unknown block kind {kind!r}")
    return rows


@dataclass(frozen=True)
class GramShape:
    """Declared block structure of a certificate's Gram matrix."""

    s: int
    k1: int
    a1_kind: str
    s1: int
    a3_kind: str
    t: int
    coupled: bool

    def expected_gram(self, k: int) -> BitMatrix:
        if self.coupled:
            rows = [0] * k
            s, k1, t = self.s, self.k1, self.t
            if s + (k1 - s) + s + t != k:
                raise ValueError("inconsistent shape sizes")
            # hull rows couple to the s rows after the subcode block
            for i in range(s):
                rows[i] |= 1 << (k1 + i)
                rows[k1 + i] |= 1 << i
            for i, r in enumerate(_block_rows(self.a1_kind, k1 - s, s, k)):
                rows[s + i] |= r
            for i in range(self.s1):
                rows[k1 + i] |= 1 << (k1 + i)
            for i, r in enumerate(
                    _block_rows(self.a3_kind, t, k1 + s, k)):
                rows[k1 + s + i] |= r
            return BitMatrix.from_rows(rows, k)
        rows = [0] * self.s
        rows.extend(_block_rows(self.a1_kind, k - self.s, self.s, k))
        return BitMatrix.from_rows(rows, k)


@dataclass(frozen=True)
class NormalFormCertificate:
    basis: BitMatrix
    shape: GramShape

    @property
    def k(self) -> int:
        return self.basis.nrows

    def verify(self) -> None:
        actual = gf2.gram(self.basis)
        expected = self.shape.expected_gram(self.k)
        if actual != expected:
            raise AssertionError(
                "certificate Gram matrix does not match declared shape:\n"
                f"expected\n{expected}\ngot\n{actual}")

    def code(self) -> LinearCode:
        return LinearCode(self.basis)


def _checked(basis: BitMatrix, shape: GramShape) -> NormalFormCertificate:
    cert = NormalFormCertificate(basis, shape)
    cert.verify()
    return cert


def _kind_of_normal_block(N: BitMatrix, s: int) -> str:
    """Classify the nonsingular block of diag(0_s, A) returned upstream."""
    if N.nrows == s:
        return ABSENT
    return ORTHONORMAL if N.get(s, s) else SYMPLECTIC


def hull_normal_basis(C: LinearCode) -> NormalFormCertificate:
    """Basis whose first s rows span Hull(C), Gram = diag(0_s, A)."""
    S = gf2.gram(C.gen)
    P, N, s = gf2.congruent_normal_form(S)
    basis = P.mul(C.gen)
    kind = _kind_of_normal_block(N, s)
    shape = GramShape(s=s, k1=C.k, a1_kind=kind, s1=0,
                      a3_kind=ABSENT, t=0, coupled=False)
    return _checked(basis, shape)


def orthonormal_basis(C: LinearCode) -> BitMatrix:
    """Basis with Gram = I_k; exists exactly for odd-like LCD codes."""
    if not C.is_lcd():
        raise ValueError("code is not LCD")
    if C.is_even_like():
        raise ValueError("even-like code has no orthonormal basis")
    cert = hull_normal_basis(C)
    if cert.shape.s != 0 or cert.shape.a1_kind != ORTHONORMAL:
        raise AssertionError("odd-like LCD reduction failed")
    return cert.basis


def symplectic_basis(C: LinearCode) -> BitMatrix:
    """Basis with Gram = diag(J_2,...); exists for even-like LCD codes."""
    if not C.is_lcd():
        raise ValueError("code is not LCD")
    if not C.is_even_like():
        raise ValueError("odd-like code has no symplectic basis")
    cert = hull_normal_basis(C)
    if cert.shape.s != 0 or cert.shape.a1_kind != SYMPLECTIC:
        raise AssertionError("even-like LCD reduction failed")
    return cert.basis


def complete_orthogonal_basis(C: LinearCode, g1: BitVector) -> BitMatrix:
    """Extend an odd-weight codeword g1 to a basis orthogonal to it."""
    if not C.is_lcd() or C.is_even_like():
        raise ValueError("code must be odd-like LCD")
    if g1.weight() % 2 == 0:
        raise ValueError("g1 must have odd weight")
    if not C.contains(g1):
        raise ValueError("g1 is not a codeword")
    rows = [g1.bits]
    for r in C.gen.rows:
        if gf2.rank_of_rows(rows + [r]) == len(rows) + 1:
            rows.append(r)
    assert len(rows) == C.k
    out = [rows[0]]
    for r in rows[1:]:
        if _ip(g1.bits, r):
            r ^= g1.bits
        out.append(r)
    return BitMatrix.from_rows(out, C.n)


def subcode_normal_form(C: LinearCode,
                        D: LinearCode) -> NormalFormCertificate:
    """Five-step congruent reduction relative to a distinguished subcode.

    Returns a basis of C whose first k_1 rows span D and whose Gram
    matrix takes the coupled block form in the module docstring.
    """
    if not C.is_lcd() or C.is_even_like():
        raise ValueError("code must be odd-like LCD")
    if D.n != C.n or D.k >= C.k:
        raise ValueError("subcode must have strictly smaller dimension")
    if gf2.rank_of_rows(list(C.gen.rows) + list(D.gen.rows)) != C.k:
        raise ValueError("D is not a subcode of C")
    k, n, k1 = C.k, C.n, D.k

    dcert = hull_normal_basis(D)
    s = dcert.shape.s
    a1_kind = dcert.shape.a1_kind
    hull_rows = list(dcert.basis.rows[:s])
    a1_rows = list(dcert.basis.rows[s:])

    # extend the subcode basis to a basis of C
    ext: List[int] = []
    base = hull_rows + a1_rows
    for r in C.gen.rows:
        if gf2.rank_of_rows(base + [r]) == len(base) + 1:
            base.append(r)
            ext.append(r)
    assert len(ext) == k - k1

    # Step 1: kill couplings between extension rows and the A_1 block
    if a1_rows:
        A1m = gf2.gram(BitMatrix.from_rows(a1_rows, n))
        for idx, e in enumerate(ext):
            beta = 0
            for j, a in enumerate(a1_rows):
                if _ip(e, a):
                    beta |= 1 << j
            lam = gf2.solve(A1m, BitVector(len(a1_rows), beta))
            assert lam is not None, "A_1 block not invertible"
            for j in range(len(a1_rows)):
                if lam.get(j):
                    e ^= a1_rows[j]
            ext[idx] = e

    # Step 2: reduce the hull-coupling matrix to [I_s ; 0],
    # lowest-index pivots first
    m = len(ext)
    pivset: set = set()
    pivots: List[int] = []
    for j in range(s):
        pi = next(i for i in range(m)
                  if i not in pivset and _ip(ext[i], hull_rows[j]))
        for i in range(m):
            if i != pi and _ip(ext[i], hull_rows[j]):
                ext[i] ^= ext[pi]
        pivset.add(pi)
        pivots.append(pi)
    p_rows = [ext[i] for i in pivots]
    t_rows = [ext[i] for i in range(m) if i not in pivset]

    # Step 3: clear couplings into the coupled block using hull rows
    for fi, f in enumerate(t_rows):
        for j in range(s):
            if _ip(f, p_rows[j]):
                f ^= hull_rows[j]
        t_rows[fi] = f
    for i in range(s):
        for j in range(i + 1, s):
            if _ip(p_rows[i], p_rows[j]):
                p_rows[i] ^= hull_rows[j]

    # Step 4: permute the coupled pairs so diagonal ones come first
    order = sorted(range(s),
                   key=lambda i: (1 - _ip(p_rows[i], p_rows[i]), i))
    hull_rows = [hull_rows[i] for i in order]
    p_rows = [p_rows[i] for i in order]
    s1 = sum(_ip(p, p) for p in p_rows)

    # Step 5: bring the trailing block to identity / J_2-sum form
    t = len(t_rows)
    if t:
        Tm = gf2.gram(BitMatrix.from_rows(t_rows, n))
        Pt, Nt, st = gf2.congruent_normal_form(Tm)
        assert st == 0, "trailing block must be nonsingular for LCD input"
        new_t = []
        for r in Pt.rows:
            acc = 0
            for j in range(t):
                if (r >> j) & 1:
                    acc ^= t_rows[j]
            new_t.append(acc)
        t_rows = new_t
        a3_kind = _kind_of_normal_block(Nt, 0)
    else:
        a3_kind = ABSENT

    basis = BitMatrix.from_rows(hull_rows + a1_rows + p_rows + t_rows, n)
    shape = GramShape(s=s, k1=k1, a1_kind=a1_kind, s1=s1,
                      a3_kind=a3_kind, t=t, coupled=True)
    cert = _checked(basis, shape)
    # first k1 rows span D, all rows span C
    if gf2.rref(BitMatrix.from_rows(basis.rows[:k1], n))[0] != \
            gf2.rref(D.gen)[0]:
        raise AssertionError("leading rows do not span the subcode")
    if gf2.rref(basis)[0] != C.rref():
        raise AssertionError("basis does not span the code")
    return cert


def recover_all_one(cert: NormalFormCertificate) -> List[int]:
    """Indices (1-based) of certificate rows summing to the all-one vector.

    The index set is read off the block shape: rows coupled to a diagonal
    one, plus the subcode's identity block when the subcode is odd-like,
    plus the trailing identity block when it is orthonormal.  Verified by
    actual summation.
    """
    shape = cert.shape
    if not shape.coupled:
        raise ValueError("expected a subcode-form certificate")
    s, k1, t = shape.s, shape.k1, shape.t
    k = cert.k
    idx = list(range(1, shape.s1 + 1))
    if shape.a1_kind == ORTHONORMAL:
        idx.extend(range(s + 1, k1 + 1))
    if shape.a3_kind == ORTHONORMAL:
        idx.extend(range(k1 + s + 1, k + 1))
    acc = 0
    for i in idx:
        acc ^= cert.basis.rows[i - 1]
    if acc != (1 << cert.basis.cols) - 1:
        raise AssertionError(
            "all-one recovery failed: input was not from an LCD code "
            "containing the all-one vector, or the certificate is corrupt")
    return idx


def type_classify_and_orthogonalize(
        cert: NormalFormCertificate) -> BitMatrix:
    """Turn a certificate basis of an odd-like LCD code orthonormal.

    Coupled even/odd pairs are merged first (even row += odd partner);
    remaining coupled even/even pairs are resolved against a chained
    odd anchor.  The result has Gram matrix I_k.
    """
    shape = cert.shape
    k = cert.k
    rows = list(cert.basis.rows)
    n = cert.basis.cols

    singles: List[int] = []      # indices of lone odd rows
    mixed_pairs = []             # (even index, odd index)
    even_pairs = []              # (even index, even index)
    if shape.coupled:
        s, k1 = shape.s, shape.k1
        for i in range(s):
            pair = (i, k1 + i)
            if i < shape.s1:
                mixed_pairs.append(pair)
            else:
                even_pairs.append(pair)
        a1_range = range(s, k1)
        a3_range = range(k1 + s, k)
        for block, kind in ((a1_range, shape.a1_kind),
                            (a3_range, shape.a3_kind)):
            ids = list(block)
            if kind == ORTHONORMAL:
                singles.extend(ids)
            elif kind == SYMPLECTIC:
                even_pairs.extend(
                    (ids[i], ids[i + 1]) for i in range(0, len(ids), 2))
    else:
        if shape.s != 0:
            raise ValueError("input code is not LCD")
        if shape.a1_kind == ORTHONORMAL:
            singles.extend(range(k))
        elif shape.a1_kind == SYMPLECTIC:
            even_pairs.extend((i, i + 1) for i in range(0, k, 2))

    # merge mixed pairs: the even member absorbs its odd partner
    for e, o in mixed_pairs:
        rows[e] ^= rows[o]
        singles.extend([e, o])

    if even_pairs and not singles:
        raise AssertionError(
            "no odd anchor available: input cannot be odd-like LCD")
    if even_pairs:
        anchor = min(singles)
        for u, v in even_pairs:
            gu, gv, ga = rows[u], rows[v], rows[anchor]
            rows[u] = gu ^ ga
            rows[v] = gv ^ ga
            rows[anchor] = ga ^ gu ^ gv

    out = BitMatrix.from_rows(rows, n)
    if gf2.gram(out) != BitMatrix.identity(k):
        raise AssertionError("orthogonalization failed to reach identity")
    return out
