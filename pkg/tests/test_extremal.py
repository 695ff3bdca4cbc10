from math import comb

import pytest

from binseq import (
    NotCovered,
    PatternTooLong,
    PreconditionViolated,
    alternating_optimal_check,
    alternating_word,
    classify_internal_zeros,
    internal_zero_report,
    max_sequence,
    max_three_run,
    optimal_words,
    parse_word,
    product_sequence_analysis,
    run_decompose,
    sequence_predicates,
)


def test_max_three_run_examples():
    assert max_three_run(1, 1, 1, 12) == (64, ((4, 4, 4),))
    m, _ = max_three_run(1, 1, 0, 4)
    assert m == 4
    assert max_three_run(1, 1, 1, 3) == (1, ((1, 1, 1),))


def test_max_three_run_errors():
    with pytest.raises(PatternTooLong):
        max_three_run(1, 1, 1, 2)
    with pytest.raises(ValueError):
        max_three_run(1, 0, 1, 5)


def test_optimal_words_examples():
    res = optimal_words(parse_word("1101"), 7)
    assert "1110101" in {str(w) for w in res.optimal_words}

    res = optimal_words(parse_word("1100"), 6)
    assert all(run_decompose(w).r == 2 for w in res.optimal_words)

    res = optimal_words(parse_word("1"), 5)
    assert res.optimal_words == (parse_word("11111"),)
    assert res.M == 5


def test_optimal_words_metadata():
    res = optimal_words(parse_word("10"), 4)
    # M = 4 at 1100 only; B(3) counts 1010, 1000(?) from the spectrum
    spectrum_counts = res.B_at_M_minus_1
    assert res.M == 4
    assert spectrum_counts == 3  # 1010, 1110, 1000 have 3 occurrences


def test_optimal_words_truncation():
    res = optimal_words(parse_word("111"), 2, max_words=2)  # every word is optimal (M=0)
    assert res.truncated
    assert len(res.optimal_words) == 2
    assert res.B_at_M_minus_1 is None


def test_alternating_word():
    assert str(alternating_word(4)) == "1010"
    assert str(alternating_word(5)) == "10101"


@pytest.mark.parametrize("l", [4, 5, 6])
def test_alternating_optimal_check(l):
    assert alternating_optimal_check(l)


def test_internal_zero_report_examples():
    assert internal_zero_report(parse_word("101"), 6).has_internal_zeros
    assert not internal_zero_report(parse_word("10"), 10).has_internal_zeros
    assert internal_zero_report(parse_word("1100"), 6).has_internal_zeros


def test_sequence_predicates():
    rep = sequence_predicates([1, 2, 2, 1])
    assert rep.is_unimodal and rep.is_log_concave and not rep.has_internal_zeros

    rep = sequence_predicates([1, 0, 1])
    assert rep.internal_zero_positions == (1,)
    assert not rep.is_unimodal

    rep = sequence_predicates([1, 3, 2, 4])
    assert not rep.is_unimodal and not rep.is_log_concave

    assert sequence_predicates([]).is_unimodal
    assert sequence_predicates([0, 0]).internal_zero_positions == ()


def test_classify_1101_exception():
    rows = classify_internal_zeros(parse_word("1101"), range(6, 13))
    by_n = {row.n: row for row in rows}
    assert not by_n[6].internal_zero
    for n in range(7, 13):
        assert by_n[n].top_gap is True
    assert all(row.agrees for row in rows)


def test_classify_two_run_top_gap():
    rows = classify_internal_zeros(parse_word("1100"), range(6, 11))
    assert all(row.top_gap for row in rows)
    assert all(row.agrees for row in rows)


def test_classify_alternating():
    rows = classify_internal_zeros(parse_word("10"), range(0, 15))
    assert not any(row.internal_zero for row in rows)
    assert all(row.agrees for row in rows)

    rows = classify_internal_zeros(parse_word("101"), range(0, 13))
    assert [row.n for row in rows if row.internal_zero] == [6]
    assert all(row.agrees for row in rows)


def test_classify_not_covered():
    with pytest.raises(NotCovered):
        classify_internal_zeros(parse_word("1010"), range(4, 6))
    rows = classify_internal_zeros(parse_word("1010"), range(4, 6), predict=False)
    assert all(row.predicted_internal_zero is None for row in rows)


def test_product_sequence_binomial_rows():
    row = [comb(4, i) for i in range(5)]
    res = product_sequence_analysis(row, row, 8)
    assert res.all_hold


def test_product_sequence_constant():
    ones = [1] * 9
    res = product_sequence_analysis(ones, ones, 8)
    assert res.all_hold
    assert res.maxima == (1,) * 9


def test_product_sequence_precondition():
    with pytest.raises(PreconditionViolated) as exc:
        product_sequence_analysis([1, 0, 1], [1, 1, 1], 2)
    assert exc.value.which == "a"
    with pytest.raises(PreconditionViolated):
        product_sequence_analysis([1, 1], [1, -1], 1)
    with pytest.raises(PreconditionViolated):
        product_sequence_analysis([1, 1], [1, 3, 1, 3], 2)


def test_max_sequence_basics():
    res = max_sequence(1, 1, 1, 40)
    assert res.report.is_log_concave
    assert not res.report.has_internal_zeros
    assert res.argmax_growth

    res = max_sequence(2, 2, 0, 40)
    assert res.report.is_log_concave

    res = max_sequence(0, 1, 0, 10)
    assert res.values == tuple(range(1, 11))

    with pytest.raises(PatternTooLong):
        max_sequence(1, 1, 1, 2)
