"""Binary linear codes: duals, hulls, parity classes, distance engines.

A LinearCode wraps a full-row-rank generator matrix.  The matrix is kept
exactly as supplied (several basis-sensitive procedures depend on the
stored shape); analyses are cached lazily on the immutable object, and
``with_generator`` swaps in a new basis as a fresh object so stale caches
cannot leak.

Coordinates are 1-indexed at the API surface and 0-indexed internally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from . import gf2
from .gf2 import BitMatrix, BitVector

# Engine A walks all 2^k - 1 codewords; cap on the dimension.
K_FULL = 26
# Engine B searches codewords of weight <= W_MAX only.
W_MAX = 8

ODD_LIKE = "odd-like"
EVEN_LIKE = "even-like"


class EngineBudgetError(Exception):
    """Raised when no distance engine can certify the request in budget."""


class ParseError(ValueError):
    """Malformed code file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def check_coords(T: Iterable[int], n: int) -> Tuple[int, ...]:
    """Validate a 1-indexed coordinate set; returns it sorted."""
    idx = sorted(set(T))
    if idx != sorted(T):
        raise ValueError("coordinates must be distinct")
    for i in idx:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValueError(f"coordinate {i} out of range 1..{n}")
    return tuple(idx)


@dataclass(frozen=True)
class ParityClass:
    """Odd/even-likeness of a code and its dual, plus the hull dimension."""

    self_parity: str
    dual_parity: str
    hull_dim: int

    @property
    def label(self) -> str:
        if self.hull_dim != 0:
            return "NotLCD"
        tag = ("o" if self.self_parity == ODD_LIKE else "e",
               "o" if self.dual_parity == ODD_LIKE else "e")
        return "LCD_" + "".join(tag)


class LinearCode:
    """An [n,k] binary code held by a fixed generator matrix."""

    __slots__ = ("gen", "n", "k", "_cache")

    def __init__(self, gen: BitMatrix):
        if gf2.rank(gen) != gen.nrows:
            raise ValueError("generator matrix does not have full row rank")
        if gen.nrows > gen.cols:
            raise ValueError("dimension exceeds length")
        object.__setattr__(self, "gen", gen)
        object.__setattr__(self, "n", gen.cols)
        object.__setattr__(self, "k", gen.nrows)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "LinearCode":
        return cls(BitMatrix.from_strings(lines))

    @classmethod
    def from_rows(cls, rows: Iterable[int], n: int) -> "LinearCode":
        return cls(BitMatrix.from_rows(rows, n))

    @classmethod
    def zero_code(cls, n: int) -> "LinearCode":
        return cls(BitMatrix.zeros(0, n))

    def with_generator(self, gen: BitMatrix) -> "LinearCode":
        """Same codeword set expected, new stored basis, fresh caches."""
        out = LinearCode(gen)
        if out.n != self.n or out.k != self.k or out.rref() != self.rref():
            raise ValueError("replacement basis spans a different code")
        return out

    # ------------------------------------------------------------------
    # basic analysis

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def rref(self) -> BitMatrix:
        return self._cached("rref", lambda: gf2.rref(self.gen)[0])

    def gram(self) -> BitMatrix:
        return self._cached("gram", lambda: gf2.gram(self.gen))

    def dual(self) -> "LinearCode":
        return self._cached(
            "dual", lambda: LinearCode(gf2.nullspace(self.gen)))

    def hull_dimension(self) -> int:
        return self.k - gf2.rank(self.gram())

    def hull(self) -> "LinearCode":
        """The intersection C ∩ C⊥ as an explicit code.

        Computed from the Gram matrix: x·G lies in the hull exactly when
        x is in the left null space of G·Gᵀ.
        """
        def build():
            coeffs = gf2.nullspace(self.gram().transpose())
            return LinearCode(gf2.rref(coeffs.mul(self.gen))[0])
        return self._cached("hull", build)

    def is_lcd(self) -> bool:
        return self.hull_dimension() == 0

    def is_even_like(self) -> bool:
        return all(r.bit_count() % 2 == 0 for r in self.gen.rows)

    def contains(self, v: BitVector) -> bool:
        return gf2.row_space_contains(self.gen, v)

    def contains_all_one(self) -> bool:
        return self.contains(BitVector.ones(self.n))

    def parity_class(self) -> ParityClass:
        self_parity = EVEN_LIKE if self.is_even_like() else ODD_LIKE
        dual_parity = EVEN_LIKE if self.contains_all_one() else ODD_LIKE
        return ParityClass(self_parity, dual_parity, self.hull_dimension())

    # ------------------------------------------------------------------
    # codeword enumeration and minimum distance

    def codewords(self) -> Iterator[int]:
        """All 2^k codewords as packed ints via a Gray-code walk."""
        yield from _gray_walk(self.gen.rows)

    def min_distance(self, engine: str = "auto") -> int:
        if "dmin_value" in self._cache:
            return self._cache["dmin_value"]
        if engine == "auto":
            d = (_min_distance_full(self.gen) if self.k <= K_FULL
                 else _min_distance_low_weight(self))
        elif engine == "full":
            if self.k > K_FULL:
                raise EngineBudgetError(
                    f"full enumeration capped at k <= {K_FULL}")
            d = _min_distance_full(self.gen)
        elif engine == "lowweight":
            d = _min_distance_low_weight(self)
        else:
            raise ValueError(f"unknown engine {engine!r}")
        self._cache["dmin_value"] = d
        return d

    def weight_words(self, w: int) -> List[int]:
        """All codewords of weight exactly w, as packed ints."""
        if w < 1:
            raise ValueError("weight must be >= 1")
        if self.k <= K_FULL:
            return [c for c in self.codewords() if c.bit_count() == w]
        if w > W_MAX:
            raise EngineBudgetError(
                f"cannot enumerate weight-{w} words with k > {K_FULL}")
        return _low_weight_words(self, w)

    def codeword_span(self, w: int) -> "LinearCode":
        """The subcode spanned by all weight-w codewords."""
        words = self.weight_words(w)
        return LinearCode(gf2.rref(BitMatrix.from_rows(words, self.n))[0])

    # ------------------------------------------------------------------
    # puncture / shorten

    def puncture(self, T: Iterable[int]) -> "LinearCode":
        idx = check_coords(T, self.n)
        if len(idx) >= self.n:
            raise ValueError("cannot puncture every coordinate")
        rows = [_drop_bits(r, idx) for r in self.gen.rows]
        n2 = self.n - len(idx)
        # keep a maximal independent subset, earliest rows first
        keep = []
        basis = []
        for r in rows:
            rr = r
            for col, w in basis:
                if (rr >> col) & 1:
                    rr ^= w
            if rr:
                basis.append(((rr & -rr).bit_length() - 1, rr))
                keep.append(r)
        return LinearCode(BitMatrix.from_rows(keep, n2))

    def shorten(self, T: Iterable[int]) -> "LinearCode":
        idx = check_coords(T, self.n)
        if len(idx) >= self.n:
            raise ValueError("cannot shorten every coordinate")
        rows = list(self.gen.rows)
        for t in (i - 1 for i in idx):
            pivot = next((j for j, r in enumerate(rows) if (r >> t) & 1),
                         None)
            if pivot is None:
                continue
            p = rows.pop(pivot)
            rows = [r ^ p if (r >> t) & 1 else r for r in rows]
        kept = [_drop_bits(r, idx) for r in rows]
        return LinearCode(BitMatrix.from_rows(kept, self.n - len(idx)))

    # ------------------------------------------------------------------
    # identity is the codeword set

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode) and self.n == other.n
                and self.rref() == other.rref())

    def __hash__(self) -> int:
        return hash((self.n, self.rref().rows))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"


def _drop_bits(r: int, idx: Tuple[int, ...]) -> int:
    """Remove the (1-indexed, ascending) coordinate positions from r."""
    out = 0
    shift = 0
    prev = 0
    for i in idx:
        width = (i - 1) - prev
        out |= ((r >> prev) & ((1 << width) - 1)) << shift
        shift += width
        prev = i
    out |= (r >> prev) << shift
    return out


def _gray_walk(rows: Sequence[int]) -> Iterator[int]:
    """Yield all subset XORs of rows, starting from 0, one flip per step."""
    k = len(rows)
    acc = 0
    yield acc
    for x in range(1, 1 << k):
        acc ^= rows[(x & -x).bit_length() - 1]
        yield acc


def _min_distance_full(gen: BitMatrix) -> int:
    if gen.nrows == 0:
        raise ValueError("minimum distance undefined for the zero code")
    best = gen.cols + 1
    acc = 0
    rows = gen.rows
    for x in range(1, 1 << gen.nrows):
        acc ^= rows[(x & -x).bit_length() - 1]
        w = acc.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _parity_columns(C: LinearCode) -> List[int]:
    """Columns of a parity-check matrix, packed as ints (one per coord)."""
    H = C.dual().gen
    return list(H.transpose().rows)


def _min_distance_low_weight(C: LinearCode) -> int:
    """Find the smallest w <= W_MAX with w dependent parity-check columns.

    Meet-in-the-middle: hash all sums of floor(w/2)-subsets, then scan
    ceil(w/2)-subsets for a disjoint partner with equal sum.
    """
    if C.k == 0:
        raise ValueError("minimum distance undefined for the zero code")
    if C.k == C.n:
        return 1
    cols = _parity_columns(C)
    n = C.n
    for w in range(1, W_MAX + 1):
        w1 = w // 2
        w2 = w - w1
        table = {}
        for sub in itertools.combinations(range(n), w1):
            s = 0
            m = 0
            for i in sub:
                s ^= cols[i]
                m |= 1 << i
            table.setdefault(s, []).append(m)
        for sub in itertools.combinations(range(n), w2):
            s = 0
            m = 0
            for i in sub:
                s ^= cols[i]
                m |= 1 << i
            for m1 in table.get(s, ()):
                if m1 & m == 0 and (m1 | m):
                    return w
    raise EngineBudgetError(
        f"minimum distance >= {W_MAX + 1}: beyond low-weight engine budget")


def _low_weight_words(C: LinearCode, w: int) -> List[int]:
    """All weight-w codewords via the same column-sum pairing."""
    cols = _parity_columns(C)
    n = C.n
    w1 = w // 2
    w2 = w - w1
    table = {}
    for sub in itertools.combinations(range(n), w1):
        s = 0
        m = 0
        for i in sub:
            s ^= cols[i]
            m |= 1 << i
        table.setdefault(s, []).append(m)
    found = set()
    for sub in itertools.combinations(range(n), w2):
        s = 0
        m = 0
        for i in sub:
            s ^= cols[i]
            m |= 1 << i
        for m1 in table.get(s, ()):
            if m1 & m == 0:
                word = m1 | m
                if word.bit_count() == w:
                    found.add(word)
    return sorted(found)


# ----------------------------------------------------------------------
# GEN1 text format: "n k" header then k rows of n characters in {0,1}.

def parse_gen1(text: str) -> LinearCode:
    header: Optional[Tuple[int, int]] = None
    rows: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected header 'n k'", lineno)
            try:
                n, k = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("non-integer header", lineno) from None
            if n < 1 or k < 0 or k > n:
                raise ParseError(f"bad parameters n={n} k={k}", lineno)
            header = (n, k)
            continue
        n, k = header
        if len(rows) >= k:
            raise ParseError("more rows than declared", lineno)
        if len(line) != n or any(c not in "01" for c in line):
            raise ParseError(f"expected {n} characters of 0/1", lineno)
        rows.append(BitVector.from_string(line).bits)
    if header is None:
        raise ParseError("missing header", 1)
    n, k = header
    if len(rows) != k:
        raise ParseError(f"expected {k} rows, found {len(rows)}",
                         len(text.splitlines()) + 1)
    return LinearCode(BitMatrix.from_rows(rows, n))


def format_gen1(C: LinearCode) -> str:
    lines = [f"{C.n} {C.k}"]
    lines.extend(str(C.gen.row(i)) for i in range(C.k))
    return "\n".join(lines) + "\n"
