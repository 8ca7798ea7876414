"""Code-to-code construction operators.

Hull-guided puncturing/shortening plus the extension constructions:
parity-style row extensions from an orthonormal basis, systematic
leading-column extension with an exact LCD verdict, hull-dropping
row/column extensions, and the multi-output two-column extension.

Every operator returns a ConstructionOutcome carrying the built code,
the parameter claim it makes, and the witness data (chosen coordinates,
appended columns) needed to replay the construction bit-exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import gf2
from .gf2 import BitMatrix, BitVector
from .codes import LinearCode, check_coords
from . import normal_form as nf

# exhaustive coordinate-subset fallback is allowed up to this length
EXHAUSTIVE_N = 20
# cap on candidate subsets tried by the hull-guided searches
SEARCH_BUDGET = 200_000


class ConstructionSearchError(RuntimeError):
    """A guaranteed-to-exist witness was not found within budget."""


@dataclass(frozen=True)
class ConstructionOutcome:
    code: Optional[LinearCode]  # None when a verdict op says "not LCD"
    claimed: Tuple[int, int, Optional[int]]  # (n, k, distance lower bound)
    witness: Dict = field(default_factory=dict)


def _prepend_bit(rows, bits):
    """New first coordinate: row i gets bits[i] there, old coords shift."""
    return [(r << 1) | b for r, b in zip(rows, bits)]


def _append_bit(rows, bits, n):
    """New last coordinate holding bits[i] for row i."""
    return [r | (b << n) for r, b in zip(rows, bits)]


def _require_lcd(C: LinearCode) -> None:
    if not C.is_lcd():
        raise ValueError("input code is not LCD")


def extend_even(C: LinearCode) -> ConstructionOutcome:
    """[n,k,d] LCD with d odd, k even -> even-like [n+1,k,d+1] LCD.

    Rows (1, c_i) over an orthonormal basis {c_i}.
    """
    _require_lcd(C)
    d = C.min_distance()
    if d % 2 == 0:
        raise ValueError("minimum distance must be odd")
    if C.k % 2:
        raise ValueError("dimension must be even")
    basis = nf.orthonormal_basis(C)
    rows = _prepend_bit(list(basis.rows), [1] * C.k)
    out = LinearCode(BitMatrix.from_rows(rows, C.n + 1))
    assert out.is_lcd() and out.is_even_like()
    return ConstructionOutcome(out, (C.n + 1, C.k, d + 1),
                               {"basis": [str(basis.row(i))
                                          for i in range(C.k)]})


def extend_odd_two(C: LinearCode) -> ConstructionOutcome:
    """[n,k,d] LCD with d odd, k odd -> odd-like [n+2,k,>=d+1] LCD.

    Rows (1, 1, c_i) over an orthonormal basis {c_i}.
    """
    _require_lcd(C)
    d = C.min_distance()
    if d % 2 == 0:
        raise ValueError("minimum distance must be odd")
    if C.k % 2 == 0:
        raise ValueError("dimension must be odd")
    basis = nf.orthonormal_basis(C)
    rows = [(r << 2) | 0b11 for r in basis.rows]
    out = LinearCode(BitMatrix.from_rows(rows, C.n + 2))
    assert out.is_lcd() and not out.is_even_like()
    return ConstructionOutcome(out, (C.n + 2, C.k, d + 1),
                               {"basis": [str(basis.row(i))
                                          for i in range(C.k)]})


def puncture_even_lcd(C: LinearCode, i: int) -> ConstructionOutcome:
    """Puncture an even-like LCD code on one coordinate; stays LCD."""
    _require_lcd(C)
    if not C.is_even_like():
        raise ValueError("input code is not even-like")
    check_coords([i], C.n)
    out = C.puncture([i])
    assert out.is_lcd()
    d = C.min_distance()
    return ConstructionOutcome(out, (C.n - 1, out.k, d - 1),
                               {"coordinate": i})


def shorten_odd_lcd(C: LinearCode,
                    i: Optional[int] = None) -> ConstructionOutcome:
    """Shorten an odd-like LCD code on one coordinate, staying LCD.

    When the all-one vector lies in C any coordinate works (default: 1).
    Otherwise a shortening coordinate i and a puncturing coordinate j are
    searched; the witness reports both, the returned code is the
    shortening at i.
    """
    _require_lcd(C)
    if C.is_even_like():
        raise ValueError("input code is not odd-like")
    d = C.min_distance()
    if C.contains_all_one():
        coord = 1 if i is None else i
        check_coords([coord], C.n)
        out = C.shorten([coord])
        assert out.is_lcd()
        return ConstructionOutcome(
            out, (C.n - 1, out.k, d if out.k else None),
            {"coordinate": coord, "all_one_in_code": True})
    short_i = None
    punct_j = None
    for c in range(1, C.n + 1):
        if short_i is None and C.shorten([c]).is_lcd():
            short_i = c
        if punct_j is None and C.puncture([c]).is_lcd():
            punct_j = c
        if short_i is not None and punct_j is not None:
            break
    if short_i is None or punct_j is None:
        raise ConstructionSearchError(
            "no LCD shortening/puncturing coordinate found "
            "(contradicts the guarantee; likely an input bug)")
    out = C.shorten([short_i])
    assert out.is_lcd()
    return ConstructionOutcome(
        out, (C.n - 1, out.k, d if out.k else None),
        {"coordinate": short_i, "puncture_coordinate": punct_j,
         "all_one_in_code": False})


def _hull_guided_subsets(C: LinearCode, l: int):
    """Candidate l-subsets of coordinates, hull-support-heavy first."""
    hull = C.hull()
    freq = [0] * C.n
    for r in hull.gen.rows:
        for j in range(C.n):
            if (r >> j) & 1:
                freq[j] += 1
    order = sorted(range(1, C.n + 1), key=lambda c: (-freq[c - 1], c))
    seen = set()
    for combo in itertools.combinations(order, l):
        T = tuple(sorted(combo))
        if T not in seen:
            seen.add(T)
            yield T


def hull_shorten(C: LinearCode) -> ConstructionOutcome:
    """Shorten away the hull: [n,k,d] with hull dim l -> [n-l,k-l,>=d] LCD."""
    l = C.hull_dimension()
    if l < 1:
        raise ValueError("hull is already trivial")
    if l == C.k:
        raise ValueError("hull equals the code; shortening would be empty")
    d = C.min_distance()
    tried = 0
    for T in _hull_guided_subsets(C, l):
        tried += 1
        if tried > SEARCH_BUDGET and C.n > EXHAUSTIVE_N:
            break
        out = C.shorten(T)
        if out.k == C.k - l and out.is_lcd():
            return ConstructionOutcome(out, (C.n - l, C.k - l, d),
                                       {"coordinates": list(T)})
    raise ConstructionSearchError(
        f"no size-{l} shortening set found within budget ({tried} tried)")


def hull_puncture(C: LinearCode) -> ConstructionOutcome:
    """Puncture away the hull: hull dim l < d -> [n-l,k,>=d-l] LCD."""
    l = C.hull_dimension()
    if l < 1:
        raise ValueError("hull is already trivial")
    d = C.min_distance()
    if l >= d:
        raise ValueError("hull dimension must be below the distance")
    tried = 0
    for T in _hull_guided_subsets(C, l):
        tried += 1
        if tried > SEARCH_BUDGET and C.n > EXHAUSTIVE_N:
            break
        out = C.puncture(T)
        if out.k == C.k and out.is_lcd():
            return ConstructionOutcome(out, (C.n - l, C.k, d - l),
                                       {"coordinates": list(T)})
    raise ConstructionSearchError(
        f"no size-{l} puncturing set found within budget ({tried} tried)")


def hull1_puncture(C: LinearCode) -> List[int]:
    """Hull dimension 1: every hull-vector support coordinate punctures
    to an LCD code.  Returns those coordinates (1-based), each verified."""
    if C.hull_dimension() != 1:
        raise ValueError("hull dimension must be exactly 1")
    hv = C.hull().gen.rows[0]
    coords = [j + 1 for j in range(C.n) if (hv >> j) & 1]
    for c in coords:
        if not C.puncture([c]).is_lcd():
            raise AssertionError(
                f"puncturing coordinate {c} is not LCD; internal error")
    return coords


def extend_row_dual(C: LinearCode, x: BitVector) -> ConstructionOutcome:
    """Adjoin row (1,x) with x an even-weight dual word -> [n+1,k+1] LCD."""
    _require_lcd(C)
    if x.length != C.n:
        raise ValueError("x has wrong length")
    if not C.dual().contains(x):
        raise ValueError("x is not in the dual code")
    if x.weight() % 2:
        raise ValueError("x must have even weight")
    rows = [(x.bits << 1) | 1] + [r << 1 for r in C.gen.rows]
    out = LinearCode(BitMatrix.from_rows(rows, C.n + 1))
    assert out.is_lcd()
    return ConstructionOutcome(out, (C.n + 1, C.k + 1, None),
                               {"x": str(x)})


def _stored_gram_kind(C: LinearCode) -> Optional[str]:
    """Identify the stored generator's Gram as identity / J_2-sum."""
    G = C.gram()
    if G == BitMatrix.identity(C.k):
        return nf.ORTHONORMAL
    try:
        expect = nf.GramShape(0, C.k, nf.SYMPLECTIC, 0, nf.ABSENT, 0,
                              False).expected_gram(C.k)
    except ValueError:
        return None
    if G == expect:
        return nf.SYMPLECTIC
    return None


def extend_systematic(C: LinearCode, x: BitVector) -> ConstructionOutcome:
    """Leading-column extension with an exact LCD verdict.

    The stored generator must already be orthonormal or symplectic with
    its first k columns independent.  x ranges over the last n-k
    coordinates and is padded to x~ = (0,...,0,x); the candidate code has
    generator [[1, x~], [0, G]].  The verdict (outcome witness "lcd") is
    computed from the parity rule and always cross-checked against Gram
    nonsingularity; the code is included only when the verdict is LCD.
    """
    _require_lcd(C)
    if x.length != C.n - C.k:
        raise ValueError("x must cover the last n-k coordinates")
    kind = _stored_gram_kind(C)
    if kind is None:
        raise ValueError(
            "stored generator is not in orthonormal/symplectic form")
    lead = BitMatrix.from_rows(
        [r & ((1 << C.k) - 1) for r in C.gen.rows], C.k)
    if gf2.rank(lead) != C.k:
        raise ValueError("first k columns are not linearly independent")
    xt = x.bits << C.k
    if kind == nf.SYMPLECTIC:
        verdict = x.weight() % 2 == 0
    else:
        touched = sum(1 for r in C.gen.rows
                      if (r & xt).bit_count() & 1)
        verdict = (x.weight() + touched) % 2 == 0
    rows = [(xt << 1) | 1] + [r << 1 for r in C.gen.rows]
    M = BitMatrix.from_rows(rows, C.n + 1)
    actual = gf2.is_nonsingular(gf2.gram(M))
    if actual != verdict:
        raise AssertionError("parity verdict disagrees with Gram test")
    code = LinearCode(M) if verdict else None
    witness = {"x": str(x), "lcd": verdict}
    return ConstructionOutcome(code, (C.n + 1, C.k + 1, None), witness)


def extend_hull_drop(C: LinearCode, x: BitVector) -> ConstructionOutcome:
    """Adjoin row (1,x) meeting the hull -> hull dimension drops by one."""
    s = C.hull_dimension()
    if s < 1:
        raise ValueError("hull is already trivial")
    if x.length != C.n:
        raise ValueError("x has wrong length")
    hull = C.hull()
    if all((x.bits & r).bit_count() % 2 == 0 for r in hull.gen.rows):
        raise ValueError("x is orthogonal to the whole hull")
    rows = [(x.bits << 1) | 1] + [r << 1 for r in C.gen.rows]
    out = LinearCode(BitMatrix.from_rows(rows, C.n + 1))
    if out.hull_dimension() != s - 1:
        raise AssertionError("hull dimension did not drop by one")
    return ConstructionOutcome(out, (C.n + 1, C.k + 1, None),
                               {"x": str(x), "hull_dim": s - 1})


def extend_column_hull_drop(C: LinearCode,
                            x: BitVector) -> ConstructionOutcome:
    """Prepend the column y_i = <x, r_i>; the hull drops by one.

    This is the column-side mirror of extend_hull_drop: the output is the
    dual of the row extension [[1,x],[0,H]] of the dual code, so x must
    pair nontrivially with the (shared) hull.  Note that no x orthogonal
    to the hull can work — in particular no codeword of C can.
    """
    s = C.hull_dimension()
    if s < 1:
        raise ValueError("hull is already trivial")
    if x.length != C.n:
        raise ValueError("x has wrong length")
    hull = C.hull()
    if all((x.bits & r).bit_count() % 2 == 0 for r in hull.gen.rows):
        raise ValueError("x is orthogonal to the whole hull")
    y = [(x.bits & r).bit_count() & 1 for r in C.gen.rows]
    rows = _prepend_bit(list(C.gen.rows), y)
    out = LinearCode(BitMatrix.from_rows(rows, C.n + 1))
    if out.hull_dimension() != s - 1:
        raise AssertionError("hull dimension did not drop by one")
    return ConstructionOutcome(out, (C.n + 1, C.k, None),
                               {"x": str(x), "y": "".join(map(str, y)),
                                "hull_dim": s - 1})


def parity_extend(C: LinearCode) -> LinearCode:
    """Append an overall parity coordinate; output is even-like."""
    bits = [r.bit_count() & 1 for r in C.gen.rows]
    rows = _append_bit(list(C.gen.rows), bits, C.n)
    return LinearCode(BitMatrix.from_rows(rows, C.n + 1))


def extend_two_multi(C: LinearCode) -> List[ConstructionOutcome]:
    """All 2^(k-1) two-column extensions of an odd-k, odd-d LCD code.

    Parity-extend to an even [n+1,k,d+1] code with one-dimensional hull,
    normalize so the first row spans the hull, then for every column
    y = (1, y_2, ..., y_k) append it with the row fix-up that restores
    orthogonality.  Outcomes are ordered by the integer value of
    (y_2,...,y_k) and are pairwise distinct as codeword sets.
    """
    _require_lcd(C)
    d = C.min_distance()
    if C.k % 2 == 0:
        raise ValueError("dimension must be odd")
    if d % 2 == 0:
        raise ValueError("minimum distance must be odd")
    k, n = C.k, C.n
    Cp = parity_extend(C)
    if Cp.hull_dimension() != 1:
        raise AssertionError("parity extension must have hull dimension 1")
    cert = nf.hull_normal_basis(Cp)
    g = list(cert.basis.rows)  # g[0] spans the hull, rest symplectic
    outcomes = []
    seen = set()
    for v in range(1 << (k - 1)):
        rows = [g[0] | (1 << (n + 1))]
        for i in range(1, k):
            yi = (v >> (i - 1)) & 1
            rows.append(g[i] ^ (yi * g[0]))
        out = LinearCode(BitMatrix.from_rows(rows, n + 2))
        assert out.is_lcd()
        key = out.rref().rows
        assert key not in seen, "duplicate codeword set"
        seen.add(key)
        y = "1" + "".join(str((v >> (i - 1)) & 1) for i in range(1, k))
        outcomes.append(ConstructionOutcome(out, (n + 2, k, d + 1),
                                            {"y": y}))
    return outcomes
