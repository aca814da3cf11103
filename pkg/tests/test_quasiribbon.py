from collections import defaultdict
from itertools import permutations

import pytest

from hypoplactic.counting import qr_tableaux_of_shape
from hypoplactic.quasiribbon import (
    QuasiRibbonTableau,
    QuasiRibbonTabloid,
    RecordingRibbon,
    highest_weight_qrw,
    hypo_congruent,
    hypo_rsk,
    hypo_rsk_inverse,
    hypoplactic_relations,
    is_quasi_ribbon_word,
    kt_insert,
    predicted_shape,
    qr_column_reading,
    qr_tabloid_of,
    slide_up_slide_left,
    standard_ribbon,
)
from hypoplactic.words import compositions, parse_word, weight
from hypoplactic.young import StandardYoungTableau, YoungTableau, plactic_relations, rsk

from helpers import words_up_to

# the worked eleven-cell tableau and its recording ribbon
EQ42 = QuasiRibbonTableau.from_rows([[1, 2, 2], [3], [4, 4, 5, 5, 5], [6, 7]])
EQ44 = RecordingRibbon.from_rows([[1, 2, 9], [8], [3, 4, 6, 7, 11], [5, 10]])
EQ43_TABLOID = QuasiRibbonTabloid(
    [(1,), (5,), (2, 3, 6), (2,), (4,), (5,), (4, 5), (7,)]
)


def recording_ribbons(shape):
    total = sum(shape)
    for perm in permutations(range(1, total + 1)):
        try:
            yield RecordingRibbon(shape, perm)
        except ValueError:
            continue


class TestQuasiRibbonTableau:
    def test_rows_and_shape(self):
        assert EQ42.shape == (3, 1, 5, 2)
        assert EQ42.rows == [(1, 2, 2), (3,), (4, 4, 5, 5, 5), (6, 7)]

    def test_columns(self):
        assert EQ42.columns == [(1,), (2,), (2, 3, 4), (4,), (5,), (5,), (5, 6), (7,)]

    def test_validation(self):
        with pytest.raises(ValueError):
            QuasiRibbonTableau((2,), (2, 1))  # row decreases
        with pytest.raises(ValueError):
            QuasiRibbonTableau((1, 1), (2, 2))  # column not strict
        with pytest.raises(ValueError):
            QuasiRibbonTableau((2,), (1,))  # wrong cell count
        QuasiRibbonTableau((1, 1), (1, 2))

    def test_json_roundtrip(self):
        assert QuasiRibbonTableau.from_json_dict(EQ42.to_json_dict()) == EQ42
        assert EQ42.to_json_dict()["shape"] == [3, 1, 5, 2]

    def test_ascii_staircase(self):
        t, _ = hypo_rsk(parse_word("4323"))
        assert t.ascii() == "2\n3 3\n  4"


class TestRecordingRibbon:
    def test_validation(self):
        RecordingRibbon((1, 2, 1), (3, 2, 4, 1))
        with pytest.raises(ValueError):
            RecordingRibbon((1, 2, 1), (1, 2, 4, 3))  # must decrease at a break
        with pytest.raises(ValueError):
            RecordingRibbon((2,), (2, 1))  # row must increase
        with pytest.raises(ValueError):
            RecordingRibbon((2,), (1, 3))  # not a permutation

    def test_json_marks_standard(self):
        data = EQ44.to_json_dict()
        assert data["standard"] is True
        assert RecordingRibbon.from_json_dict(data) == EQ44


class TestQuasiRibbonTabloid:
    def test_shape_of_staircase(self):
        assert EQ43_TABLOID.shape == (3, 1, 5, 2)
        assert qr_tabloid_of((1, 3, 1, 3)).shape == (2, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            QuasiRibbonTabloid([(2, 1)])

    def test_tableau_detection(self):
        assert not qr_tabloid_of((4, 3, 3)).is_quasi_ribbon_tableau()
        reading = qr_column_reading(EQ42)
        assert qr_tabloid_of(reading).to_tableau() == EQ42


class TestReadings:
    def test_reading_of_tableau(self):
        assert qr_column_reading(EQ42) == parse_word("12432455657")

    def test_reading_of_tabloid(self):
        assert qr_column_reading(EQ43_TABLOID) == parse_word("15632245547")

    def test_single_cell(self):
        assert qr_column_reading(QuasiRibbonTableau((1,), (6,))) == (6,)

    def test_tabloid_of_433(self):
        assert qr_tabloid_of((4, 3, 3)) == QuasiRibbonTabloid([(3, 4), (3,)])

    def test_tabloid_of_monotone(self):
        assert qr_tabloid_of((3, 2, 1)) == QuasiRibbonTabloid([(1, 2, 3)])
        assert qr_tabloid_of((1, 2, 3)) == QuasiRibbonTabloid([(1,), (2,), (3,)])

    def test_reading_roundtrip(self):
        for w in words_up_to(3, 6):
            assert qr_column_reading(qr_tabloid_of(w)) == w


class TestKtInsert:
    def test_worked_run(self):
        t1 = kt_insert(QuasiRibbonTableau(), 4)
        assert (t1.shape, t1.entries) == ((1,), (4,))
        t2 = kt_insert(t1, 3)
        assert (t2.shape, t2.entries) == ((1, 1), (3, 4))
        t3 = kt_insert(t2, 2)
        assert (t3.shape, t3.entries) == ((1, 1, 1), (2, 3, 4))
        t4 = kt_insert(t3, 3)
        assert t4.rows == [(2,), (3, 3), (4,)]

    def test_cell_count_grows(self):
        for w in words_up_to(4, 4):
            t = hypo_rsk(w)[0]
            for a in (1, 2, 3, 4, 5):
                bigger = kt_insert(t, a)
                assert bigger.size == t.size + 1
                assert sorted(bigger.entries) == sorted(t.entries + (a,))

    def test_matches_standardization_route(self):
        # independent oracle: the grown tableau is pinned down by its
        # sorted entry multiset plus the descent-composition shape law
        for w in words_up_to(4, 4):
            t = hypo_rsk(w)[0]
            for a in (1, 2, 3, 4, 5):
                grown = kt_insert(t, a)
                assert grown.entries == tuple(sorted(t.entries + (a,)))
                assert grown.shape == predicted_shape(w + (a,))


class TestHypoRsk:
    def test_worked_run_4323(self):
        t, r = hypo_rsk(parse_word("4323"))
        assert t.rows == [(2,), (3, 3), (4,)]
        assert r.rows == [(3,), (2, 4), (1,)]

    def test_empty(self):
        t, r = hypo_rsk(())
        assert t == QuasiRibbonTableau() and r == RecordingRibbon()

    def test_eleven_cell_example(self):
        t, r = hypo_rsk(parse_word("12446553275"))
        assert t == EQ42
        assert r == EQ44

    def test_shapes_agree(self):
        for w in words_up_to(4, 5):
            t, r = hypo_rsk(w)
            assert t.shape == r.shape


class TestHypoRskInverse:
    def test_worked_example(self):
        assert hypo_rsk_inverse(EQ42, EQ44) == parse_word("12446553275")

    def test_empty(self):
        assert hypo_rsk_inverse(QuasiRibbonTableau(), RecordingRibbon()) == ()

    def test_roundtrip_4323(self):
        t, r = hypo_rsk(parse_word("4323"))
        assert hypo_rsk_inverse(t, r) == parse_word("4323")

    def test_shape_mismatch(self):
        t, _ = hypo_rsk((1, 2))
        _, r = hypo_rsk((2, 1))
        with pytest.raises(ValueError):
            hypo_rsk_inverse(t, r)

    def test_left_inverse_exhaustive(self):
        for w in words_up_to(4, 5):
            assert hypo_rsk_inverse(*hypo_rsk(w)) == w

    def test_right_inverse_on_all_pairs(self):
        # insertion is onto same-shape pairs: every (T, R) arises
        pair_count = 0
        for total in range(6):
            for shape in compositions(total):
                ribbons = list(recording_ribbons(shape))
                for t in qr_tableaux_of_shape(shape, 4):
                    for r in ribbons:
                        w = hypo_rsk_inverse(t, r)
                        assert hypo_rsk(w) == (t, r)
                        pair_count += 1
        assert pair_count == sum(4 ** k for k in range(6))


class TestQuasiRibbonWords:
    def test_examples(self):
        assert not is_quasi_ribbon_word((4, 3, 3))
        assert is_quasi_ribbon_word(parse_word("12432455657"))
        assert is_quasi_ribbon_word(())

    def test_matches_tabloid_check(self):
        for w in words_up_to(3, 6):
            assert is_quasi_ribbon_word(w) == qr_tabloid_of(w).is_quasi_ribbon_tableau()

    def test_standardization_criterion(self):
        from hypoplactic.words import standardize

        for w in words_up_to(3, 6):
            assert is_quasi_ribbon_word(w) == is_quasi_ribbon_word(standardize(w))

    def test_cross_section(self):
        for w in words_up_to(3, 6):
            if is_quasi_ribbon_word(w):
                assert qr_column_reading(hypo_rsk(w)[0]) == w


class TestPredictedShape:
    def test_examples(self):
        assert predicted_shape(parse_word("4323")) == (1, 2, 1)
        assert predicted_shape(()) == ()
        assert predicted_shape(parse_word("12446553275")) == (3, 1, 5, 2)

    def test_matches_insertion(self):
        for w in words_up_to(4, 5):
            assert predicted_shape(w) == hypo_rsk(w)[0].shape


class TestHypoCongruent:
    def test_examples(self):
        assert hypo_congruent((1, 2, 1, 2), (2, 1, 2, 1))
        assert hypo_congruent((4, 3), (4, 3))
        assert not hypo_congruent((1, 2), (2, 1))

    def test_agrees_with_tableau_equality(self):
        # the characterization and the insertion definition induce the
        # same partition of every length class
        for length in range(7):
            by_characterization = defaultdict(set)
            by_tableau = defaultdict(set)
            for w in words_up_to(4, length):
                if len(w) != length:
                    continue
                by_characterization[(weight(w), predicted_shape(w))].add(w)
                by_tableau[hypo_rsk(w)[0]].add(w)
            assert sorted(by_characterization.values(), key=sorted) == sorted(
                by_tableau.values(), key=sorted
            )


class TestHypoplacticRelations:
    def test_rank_one_empty(self):
        assert hypoplactic_relations(1) == []

    def test_rank_two(self):
        quartic = [p for p in hypoplactic_relations(2) if len(p[0]) == 4]
        assert quartic == [((2, 1, 2, 1), (1, 2, 1, 2))]
        cubic = {frozenset(p) for p in hypoplactic_relations(2) if len(p[0]) == 3}
        assert cubic == {frozenset(p) for p in plactic_relations(2)}

    def test_all_pairs_congruent(self):
        for left, right in hypoplactic_relations(3):
            assert sorted(left) == sorted(right)
            assert hypo_congruent(left, right)


class TestSlideUpSlideLeft:
    def test_worked_p(self):
        t = hypo_rsk(parse_word("1325436768"))[0]
        assert slide_up_slide_left(t) == YoungTableau(
            [[1, 2, 3, 6, 6, 8], [3, 4, 7], [5]]
        )

    def test_worked_q(self):
        t = hypo_rsk(parse_word("1325436768"))[0]
        assert slide_up_slide_left(standard_ribbon(t.shape)) == StandardYoungTableau(
            [[1, 2, 4, 7, 8, 10], [3, 5, 9], [6]]
        )

    def test_single_column(self):
        t = QuasiRibbonTableau((1, 1, 1), (1, 2, 3))
        assert slide_up_slide_left(t) == YoungTableau([[1], [2], [3]])

    def test_agrees_with_classical_insertion(self):
        for total in range(7):
            for shape in compositions(total):
                expected_q = None
                for t in qr_tableaux_of_shape(shape, 4):
                    reading = qr_column_reading(t)
                    p, q = rsk(reading)
                    assert slide_up_slide_left(t) == p
                    if expected_q is None:
                        expected_q = slide_up_slide_left(standard_ribbon(shape))
                    assert expected_q == q

    def test_standard_fillings_injective(self):
        images = set()
        for total in range(7):
            for shape in compositions(total):
                images.add(slide_up_slide_left(standard_ribbon(shape)))
        assert len(images) == sum(len(list(compositions(k))) for k in range(7))


class TestHighestWeightWords:
    def test_worked_example(self):
        assert highest_weight_qrw((3, 1, 5, 2)) == parse_word("11321333434")

    def test_single_row(self):
        assert highest_weight_qrw((4,)) == (1, 1, 1, 1)

    def test_two_by_two(self):
        assert highest_weight_qrw((2, 2)) == (1, 2, 1, 2)

    def test_weight_equals_shape(self):
        for total in range(7):
            for shape in compositions(total):
                assert weight(highest_weight_qrw(shape)) == shape
