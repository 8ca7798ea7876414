"""Construction operators: extensions, hull-guided puncture/shorten."""

import random

import pytest

from lcdkit import constructions as cx
from lcdkit.codes import LinearCode
from lcdkit.gf2 import BitVector
from lcdkit.search import random_code, random_lcd_code

HAMMING_7_4 = LinearCode.from_strings([
    "1101000",
    "0110100",
    "1110010",
    "1010001",
])


def C(*lines):
    return LinearCode.from_strings(lines)


def V(s):
    return BitVector.from_string(s)


def _lcd_corpus(rng, count, n_range=(2, 12), k_cap=8):
    out = []
    while len(out) < count:
        n = rng.randrange(*n_range)
        k = rng.randrange(1, min(n, k_cap) + 1)
        try:
            out.append(random_lcd_code(rng, n, k, max_tries=300))
        except RuntimeError:
            continue
    return out


class TestExtendEven:
    def test_identity_pair(self):
        out = cx.extend_even(C("10", "01"))
        assert out.code == C("110", "101")
        assert out.claimed == (3, 2, 2)
        assert out.code.min_distance() == 2

    def test_two_blocks(self):
        out = cx.extend_even(C("111000", "000111"))
        assert out.claimed == (7, 2, 4)
        assert out.code.is_lcd() and out.code.is_even_like()
        assert out.code.min_distance() == 4

    def test_rejects_odd_k(self):
        with pytest.raises(ValueError):
            cx.extend_even(C("111"))

    def test_rejects_even_d(self):
        with pytest.raises(ValueError):
            cx.extend_even(C("1100", "0110"))

    def test_random_exact_distance(self):
        rng = random.Random(41)
        done = 0
        while done < 40:
            n = rng.randrange(4, 12)
            k = rng.choice([2, 4, 6])
            if k > n:
                continue
            try:
                code = random_lcd_code(rng, n, k, max_tries=300)
            except RuntimeError:
                continue
            if code.min_distance() % 2 == 0 or code.is_even_like():
                continue
            out = cx.extend_even(code)
            assert out.code.is_lcd() and out.code.is_even_like()
            assert out.code.min_distance() == code.min_distance() + 1
            done += 1


class TestExtendOddTwo:
    def test_single_bit(self):
        out = cx.extend_odd_two(C("1"))
        assert out.code == C("111")

    def test_repetition(self):
        out = cx.extend_odd_two(C("111"))
        assert out.code == C("11111")
        assert out.claimed == (5, 1, 4)

    def test_rejects_even_k(self):
        with pytest.raises(ValueError):
            cx.extend_odd_two(C("10", "01"))

    def test_random_distance_bound(self):
        rng = random.Random(42)
        done = 0
        while done < 40:
            n = rng.randrange(3, 12)
            k = rng.choice([1, 3, 5])
            if k > n:
                continue
            try:
                code = random_lcd_code(rng, n, k, max_tries=300)
            except RuntimeError:
                continue
            if code.min_distance() % 2 == 0 or code.is_even_like():
                continue
            out = cx.extend_odd_two(code)
            assert out.code.is_lcd() and not out.code.is_even_like()
            assert out.code.min_distance() >= code.min_distance() + 1
            done += 1


class TestPunctureEvenLcd:
    def test_first_coordinate(self):
        out = cx.puncture_even_lcd(C("1100", "0110"), 1)
        assert out.code == C("100", "110")
        assert out.code.is_lcd()

    def test_last_coordinate(self):
        out = cx.puncture_even_lcd(C("1100", "0110"), 4)
        assert out.code == C("110", "011")

    def test_rejects_odd_like(self):
        with pytest.raises(ValueError):
            cx.puncture_even_lcd(C("111"), 1)

    def test_every_coordinate_random(self):
        rng = random.Random(43)
        done = 0
        while done < 25:
            n = rng.randrange(4, 12)
            try:
                from lcdkit.search import random_lcd_eo_code
                code = random_lcd_eo_code(rng, n, rng.choice([2, 4]),
                                          max_tries=3000)
            except (RuntimeError, ValueError):
                continue
            for i in range(1, n + 1):
                assert cx.puncture_even_lcd(code, i).code.is_lcd()
            done += 1


class TestShortenOddLcd:
    def test_all_one_in_code(self):
        out = cx.shorten_odd_lcd(C("111000", "000111"), 1)
        assert out.code == C("00111")
        assert out.witness["all_one_in_code"]

    def test_identity_code(self):
        out = cx.shorten_odd_lcd(C("10", "01"), 2)
        assert out.code == C("1")

    def test_without_all_one(self):
        code = C("100", "010")  # LCD_oo, no all-one vector
        out = cx.shorten_odd_lcd(code)
        assert not out.witness["all_one_in_code"]
        assert out.code.is_lcd()
        j = out.witness["puncture_coordinate"]
        assert code.puncture([j]).is_lcd()

    def test_all_coordinates_when_all_one_present(self):
        rng = random.Random(44)
        from lcdkit.search import random_lcd_oe_code
        done = 0
        while done < 20:
            n = rng.randrange(3, 12)
            k = rng.randrange(2, n)
            try:
                code = random_lcd_oe_code(rng, n, k, max_tries=400)
            except RuntimeError:
                continue
            for i in range(1, n + 1):
                assert cx.shorten_odd_lcd(code, i).code.is_lcd()
            done += 1


class TestHullShorten:
    def test_hamming(self):
        out = cx.hull_shorten(HAMMING_7_4)
        assert out.code.is_lcd()
        assert (out.code.n, out.code.k) == (4, 1)
        assert out.code.min_distance() >= 3

    def test_rejects_hull_equals_code(self):
        with pytest.raises(ValueError):
            cx.hull_shorten(C("11"))

    def test_random(self):
        rng = random.Random(45)
        done = 0
        while done < 40:
            n = rng.randrange(4, 14)
            k = rng.randrange(2, n)
            code = random_code(rng, n, k)
            l = code.hull_dimension()
            if l < 1 or l == k:
                continue
            out = cx.hull_shorten(code)
            assert out.code.is_lcd()
            assert (out.code.n, out.code.k) == (n - l, k - l)
            assert out.code.min_distance() >= code.min_distance()
            done += 1


class TestHullPuncture:
    def test_rejects_hull_geq_distance(self):
        with pytest.raises(ValueError):
            cx.hull_puncture(HAMMING_7_4)  # l = 3 = d

    def test_random(self):
        rng = random.Random(46)
        done = 0
        while done < 40:
            n = rng.randrange(4, 14)
            k = rng.randrange(1, n)
            code = random_code(rng, n, k)
            l = code.hull_dimension()
            if l < 1 or l >= code.min_distance():
                continue
            out = cx.hull_puncture(code)
            assert out.code.is_lcd()
            assert (out.code.n, out.code.k) == (n - l, k)
            assert out.code.min_distance() >= code.min_distance() - l
            done += 1


class TestHull1Puncture:
    def test_rejects_lcd(self):
        with pytest.raises(ValueError):
            cx.hull1_puncture(C("11", "10"))

    def test_worked_example(self):
        code = C("1100", "0010")
        coords = cx.hull1_puncture(code)
        assert coords == [1, 2]
        assert code.puncture([1]).is_lcd()

    def test_punctured_two_block(self):
        code = C("111000", "000111").puncture([1])
        coords = cx.hull1_puncture(code)
        assert coords == [1, 2]

    def test_random(self):
        rng = random.Random(47)
        done = 0
        while done < 40:
            n = rng.randrange(3, 14)
            k = rng.randrange(1, n)
            code = random_code(rng, n, k)
            if code.hull_dimension() != 1:
                continue
            coords = cx.hull1_puncture(code)
            assert coords
            for c in coords:
                assert code.puncture([c]).is_lcd()
            done += 1


class TestExtendRowDual:
    def test_zero_x(self):
        out = cx.extend_row_dual(C("111"), V("000"))
        assert out.code == C("1000", "0111")

    def test_even_dual_word(self):
        out = cx.extend_row_dual(C("111"), V("110"))
        assert out.code == C("1110", "0111")
        assert out.code.is_lcd()

    def test_rejects_odd_weight(self):
        with pytest.raises(ValueError):
            cx.extend_row_dual(C("111"), V("100"))

    def test_rejects_non_dual(self):
        with pytest.raises(ValueError):
            cx.extend_row_dual(C("10", "01"), V("11"))

    def test_random(self):
        rng = random.Random(48)
        for code in _lcd_corpus(rng, 50, (2, 12)):
            D = code.dual()
            if D.k == 0:
                words = [0]
            else:
                words = list(D.codewords())
            evens = [w for w in words if w.bit_count() % 2 == 0]
            w = rng.choice(evens)
            out = cx.extend_row_dual(code, BitVector(code.n, w))
            assert out.code.is_lcd()
            assert (out.code.n, out.code.k) == (code.n + 1, code.k + 1)


class TestExtendSystematic:
    def test_odd_like_even_x(self):
        code = C("100", "010")
        out = cx.extend_systematic(code, V("0"))
        assert out.witness["lcd"] is True
        assert out.code == C("1000", "0100", "0010")

    def test_odd_like_odd_x(self):
        out = cx.extend_systematic(C("100", "010"), V("1"))
        assert out.witness["lcd"] is False
        assert out.code is None

    def test_even_like_odd_x(self):
        out = cx.extend_systematic(C("1100", "0110"), V("01"))
        assert out.witness["lcd"] is False

    def test_rejects_unnormalized_generator(self):
        with pytest.raises(ValueError):
            cx.extend_systematic(C("100", "110"), V("0"))

    def test_iff_exhaustive(self):
        # both directions of the verdict against the Gram test, all x
        from lcdkit import gf2, normal_form as nf
        rng = random.Random(49)
        done = 0
        while done < 60:
            n = rng.randrange(2, 12)
            k = rng.randrange(1, n + 1)
            if n - k > 8:
                continue
            try:
                code = random_lcd_code(rng, n, k, max_tries=300)
            except RuntimeError:
                continue
            basis = (nf.symplectic_basis(code) if code.is_even_like()
                     else nf.orthonormal_basis(code))
            lead = [r & ((1 << k) - 1) for r in basis.rows]
            if gf2.rank_of_rows(lead) != k:
                continue
            normalized = code.with_generator(basis)
            for xv in range(1 << (n - k)):
                out = cx.extend_systematic(normalized,
                                           BitVector(n - k, xv))
                if out.witness["lcd"]:
                    assert out.code.is_lcd()
                else:
                    assert out.code is None
            done += 1


class TestExtendHullDrop:
    def test_single_self_orthogonal(self):
        out = cx.extend_hull_drop(C("11"), V("10"))
        assert out.code == C("110", "011")
        assert out.code.is_lcd()

    def test_rejects_orthogonal_x(self):
        with pytest.raises(ValueError):
            cx.extend_hull_drop(C("11"), V("11"))

    def test_hamming_drop(self):
        hull = HAMMING_7_4.hull()
        target = hull.gen.row(0)
        x = None
        for v in range(1 << 7):
            if (v & target.bits).bit_count() % 2 == 1:
                x = BitVector(7, v)
                break
        out = cx.extend_hull_drop(HAMMING_7_4, x)
        assert out.code.hull_dimension() == 2

    def test_random_drop_by_one(self):
        rng = random.Random(50)
        done = 0
        while done < 60:
            n = rng.randrange(3, 13)
            k = rng.randrange(1, n)
            code = random_code(rng, n, k)
            s = code.hull_dimension()
            if s not in (1, 2, 3):
                continue
            hv = code.hull().gen.rows[0]
            x = BitVector(n, 1 << ((hv & -hv).bit_length() - 1))
            out = cx.extend_hull_drop(code, x)
            assert out.code.hull_dimension() == s - 1
            if s == 1:
                assert out.code.is_lcd()
            done += 1


class TestExtendColumnHullDrop:
    def test_rejects_lcd_input(self):
        with pytest.raises(ValueError):
            cx.extend_column_hull_drop(C("110", "010"), V("110"))

    def test_rejects_fully_orthogonal(self):
        code = C("11000", "00111")
        with pytest.raises(ValueError):
            cx.extend_column_hull_drop(code, V("11111"))

    def test_random(self):
        rng = random.Random(51)
        done = 0
        while done < 40:
            n = rng.randrange(3, 13)
            k = rng.randrange(1, n)
            code = random_code(rng, n, k)
            s = code.hull_dimension()
            if s < 1:
                continue
            hv = code.hull().gen.rows[0]
            x = BitVector(n, 1 << ((hv & -hv).bit_length() - 1))
            out = cx.extend_column_hull_drop(code, x)
            assert out.code.hull_dimension() == s - 1
            assert (out.code.n, out.code.k) == (n + 1, k)
            if s == 1:
                assert out.code.is_lcd()
            done += 1


class TestExtendTwoMulti:
    def test_repetition_single(self):
        outs = cx.extend_two_multi(C("111"))
        assert len(outs) == 1
        assert outs[0].code == C("11111")

    def test_single_bit(self):
        outs = cx.extend_two_multi(C("1"))
        assert len(outs) == 1
        assert outs[0].code == C("111")

    def test_rejects_even_k(self):
        with pytest.raises(ValueError):
            cx.extend_two_multi(C("10", "01"))

    def test_count_and_distinctness(self):
        rng = random.Random(52)
        done = 0
        while done < 15:
            n = rng.randrange(4, 11)
            k = rng.choice([3, 5])
            if k > n:
                continue
            try:
                code = random_lcd_code(rng, n, k, max_tries=300)
            except RuntimeError:
                continue
            d = code.min_distance()
            if d % 2 == 0:
                continue
            outs = cx.extend_two_multi(code)
            assert len(outs) == 2 ** (k - 1)
            rrefs = {o.code.rref().rows for o in outs}
            assert len(rrefs) == len(outs)
            for o in outs:
                assert o.code.is_lcd()
                assert o.code.min_distance() >= d + 1
            done += 1
