from math import comb, factorial

import pytest

from hypoplactic.counting import (
    TooLargeError,
    check_identity_xyxy,
    count_iso_plac_components_with_qrw,
    count_iso_plac_components_with_qrw_brute,
    count_qrt,
    count_qrt_brute,
    factorization_count,
    hypo_class_members,
    hypo_class_size,
    hypo_class_size_brute,
    multinomial,
    novelli_recursion_check,
    o_conjugacy_witness,
    qr_tableaux_of_shape,
)
from hypoplactic.graphs import QUASI_CRYSTAL, explore_component
from hypoplactic.quasiribbon import highest_weight_qrw, hypo_congruent, hypo_rsk
from hypoplactic.words import compositions, parse_word, weight

from helpers import words_up_to

# the nineteen words congruent to 143214, as displayed in the worked example
CLASS_143214 = sorted(
    parse_word(text)
    for text in [
        "143214", "413214", "431214", "432114",
        "143241", "413241", "431241", "432141",
        "143421", "413421", "431421", "432411",
        "144321", "414321", "434121", "434211",
        "441321", "443121", "443211",
    ]
)


class TestMultinomial:
    def test_factorial_oracle(self):
        assert multinomial(6, (2, 1, 1, 2)) == factorial(6) // (2 * 1 * 1 * 2)
        assert multinomial(6, (2, 1, 1, 2)) == 180

    def test_trivial(self):
        assert multinomial(5, (5,)) == 1
        assert multinomial(0, ()) == 1

    def test_rejects_mismatch(self):
        with pytest.raises(ValueError):
            multinomial(5, (2, 2))


class TestClassSize:
    def test_worked_examples(self):
        assert hypo_class_size((2, 1, 1, 2), 4) == 19
        assert hypo_class_size((1, 2, 2, 1), 4) == 61

    def test_single_row(self):
        for k in range(1, 8):
            assert hypo_class_size((k,), 1) == 1

    def test_too_many_rows(self):
        assert hypo_class_size((1, 1, 1), 2) == 0

    def test_brute_matches_list(self):
        members = hypo_class_members((2, 1, 1, 2), 4)
        assert parse_word("143214") in members
        assert members == CLASS_143214
        assert hypo_class_size_brute((2, 1, 1, 2), 4) == 19

    def test_brute_trivial(self):
        assert hypo_class_size_brute((1,), 1) == 1
        assert hypo_class_members((1, 1, 1), 2) == []

    def test_brute_matches_formula(self):
        assert hypo_class_size_brute((2, 2), 4) == hypo_class_size((2, 2), 4)

    def test_guard(self):
        with pytest.raises(TooLargeError):
            hypo_class_size_brute((6, 6), 4)

    def test_formula_vs_oracle_sweep(self):
        for total in range(1, 6):
            for alpha in compositions(total):
                for n in (3, 4):
                    assert hypo_class_size(alpha, n) == hypo_class_size_brute(alpha, n)

    def test_same_shape_classes_have_same_size(self):
        # enumerate every class over four symbols and bucket by shape
        from collections import defaultdict

        from hypoplactic.words import words_over

        sizes = defaultdict(set)
        for length in range(6):
            classes = defaultdict(int)
            for w in words_over(4, length):
                classes[hypo_rsk(w)[0]] += 1
            for tableau, size in classes.items():
                sizes[tableau.shape].add(size)
        assert all(len(found) == 1 for found in sizes.values())


class TestNovelliRecursion:
    def test_worked_example(self):
        assert novelli_recursion_check((2, 1, 1, 2), 4)

    def test_single_part(self):
        assert novelli_recursion_check((7,), 1)

    def test_two_singletons(self):
        # classes {12} and {21}: 1 + 1 = binom(2;1,1)
        assert hypo_class_size_brute((1, 1), 2) == 1
        assert hypo_class_size_brute((2,), 2) == 1
        assert novelli_recursion_check((1, 1), 2)

    def test_guard(self):
        with pytest.raises(TooLargeError):
            novelli_recursion_check((11,), 1)


class TestCountQrt:
    def test_two_by_two(self):
        assert count_qrt((2, 2), 4) == comb(6, 2) == 15
        assert count_qrt_brute((2, 2), 4) == 15

    def test_too_many_rows(self):
        assert count_qrt((1, 1, 1), 2) == 0
        assert count_qrt_brute((1, 1, 1), 2) == 0

    def test_single_row_single_symbol(self):
        assert count_qrt((5,), 1) == 1

    def test_generation_is_valid_and_distinct(self):
        seen = set(qr_tableaux_of_shape((2, 1, 2), 4))
        assert len(seen) == count_qrt((2, 1, 2), 4)
        assert all(t.shape == (2, 1, 2) for t in seen)

    def test_matches_component_size(self):
        for shape in [(2, 2), (3, 1), (1, 1, 2), (4,)]:
            component = explore_component(highest_weight_qrw(shape), 4, QUASI_CRYSTAL)
            assert len(component) == count_qrt(shape, 4)


class TestCountIsoComponents:
    def test_single_row(self):
        assert count_iso_plac_components_with_qrw((6,), 1) == 1

    def test_two_by_two(self):
        assert count_iso_plac_components_with_qrw((2, 2), 4) == multinomial(2, (0, 2)) == 1

    def test_guard_case(self):
        assert count_iso_plac_components_with_qrw((2, 1, 1), 2) == 0

    def test_rejects_non_partition(self):
        with pytest.raises(ValueError):
            count_iso_plac_components_with_qrw((1, 2), 3)

    def test_brute_agreement(self):
        for lam, n in [((2, 2), 4), ((2, 1), 3), ((3, 1), 3), ((1, 1, 1), 3), ((4,), 2)]:
            assert count_iso_plac_components_with_qrw_brute(lam, n) == \
                count_iso_plac_components_with_qrw(lam, n)

    def test_brute_guard(self):
        with pytest.raises(TooLargeError):
            count_iso_plac_components_with_qrw_brute((5, 4, 3), 5)


class TestFactorizationCount:
    def test_smallest_case(self):
        assert factorization_count((1, 1), (1,), (1,), 2) == 1

    def test_empty_right_factor(self):
        w = parse_word("1212")
        assert factorization_count(w, (2, 2), (), 2) == 1
        assert factorization_count(w, (4,), (), 2) == 0

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            factorization_count((4, 3, 3), (2,), (1,), 4)  # not quasi-ribbon
        with pytest.raises(ValueError):
            factorization_count((1, 1), (1,), (2,), 2)  # length mismatch

    def test_depends_only_on_shapes(self):
        # equal counts across all quasi-ribbon words sharing a shape
        from collections import defaultdict
        from hypoplactic.quasiribbon import is_quasi_ribbon_word, predicted_shape

        for length in range(1, 6):
            by_shape = defaultdict(list)
            for w in words_up_to(3, length):
                if len(w) == length and is_quasi_ribbon_word(w):
                    by_shape[predicted_shape(w)].append(w)
            for shape, members in by_shape.items():
                for left_len in range(length + 1):
                    for alpha in compositions(left_len):
                        for beta in compositions(length - left_len):
                            counts = {
                                factorization_count(w, alpha, beta, 3)
                                for w in members
                            }
                            assert len(counts) == 1

    def test_counts_all_congruent_products(self):
        # oracle: scan every split of every congruent word
        from hypoplactic.quasiribbon import is_quasi_ribbon_word, predicted_shape

        w = parse_word("2112")
        assert not is_quasi_ribbon_word(w)
        qrw = hypo_rsk(w)[0].reading()
        for alpha in compositions(2):
            for beta in compositions(2):
                expected = 0
                for u in words_up_to(3, 2):
                    for v in words_up_to(3, 2):
                        if len(u) != 2 or len(v) != 2:
                            continue
                        if not (is_quasi_ribbon_word(u) and is_quasi_ribbon_word(v)):
                            continue
                        if predicted_shape(u) != alpha or predicted_shape(v) != beta:
                            continue
                        if hypo_congruent(qrw, u + v):
                            expected += 1
                assert factorization_count(qrw, alpha, beta, 3) == expected


class TestConjugacy:
    def test_basic_witness(self):
        g = o_conjugacy_witness((1, 2), (2, 1), 2)
        assert g == (2, 1)
        assert hypo_congruent((1, 2) + g, g + (2, 1))
        assert hypo_congruent(g + (1, 2), (2, 1) + g)

    def test_equal_words(self):
        assert o_conjugacy_witness((1, 2, 2), (1, 2, 2), 3) == (3, 2, 1)

    def test_different_weights(self):
        assert o_conjugacy_witness((1,), (2,), 2) is None

    def test_witness_everywhere_small(self):
        words2 = [w for w in words_up_to(3, 3) if len(w) == 3]
        for u in words2[::2]:
            for v in words2[::2]:
                g = o_conjugacy_witness(u, v, 3)
                assert (g is None) == (weight(u) != weight(v))


class TestIdentity:
    def test_examples(self):
        assert check_identity_xyxy((1,), (2,), 2)
        assert check_identity_xyxy((), (2, 1), 2)

    def test_exhaustive_tiny(self):
        words = list(words_up_to(3, 2))
        for x in words:
            for y in words:
                assert check_identity_xyxy(x, y, 3)
