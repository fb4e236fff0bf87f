import pytest

from pinnacles.permutation import (
    Permutation,
    XFactorization,
    descent_count,
    has_double_descent,
    peak_set,
    pinnacle_set,
    restrict,
    vale_set,
    valley_set,
    w0_conjugate,
    x_factorization,
)


def P(text):
    return Permutation.from_string(text)


@pytest.mark.parametrize(
    "values", [[], [1, 1], [0, 1], [2, 3], [1, 2.0], ["a", "b"], [1, 2, 4]]
)
def test_permutation_rejects(values):
    with pytest.raises(ValueError):
        Permutation(values)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("15264387", (1, 5, 2, 6, 4, 3, 8, 7)),
        ("1,3,2", (1, 3, 2)),
        (" 2, 1 ", (2, 1)),
        ("10,1,2,3,4,5,6,7,8,9", (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)),
        ("1", (1,)),
    ],
)
def test_from_string(text, expected):
    p = Permutation.from_string(text)
    assert p == expected
    assert isinstance(p, Permutation)
    assert p.n == len(expected)


@pytest.mark.parametrize(
    "text", ["", "abc", "1,1", "1,3", "1,5,2", "1234567890", "1;2"]
)
def test_from_string_rejects(text):
    with pytest.raises(ValueError):
        Permutation.from_string(text)


def test_str_and_repr():
    p = P("15264387")
    assert str(p) == "1,5,2,6,4,3,8,7"
    assert Permutation.from_string(str(p)) == p
    assert repr(p) == "Permutation(1,5,2,6,4,3,8,7)"


def test_identity_and_ordering():
    assert Permutation.identity(4) == (1, 2, 3, 4)
    assert sorted([P("213"), P("132"), P("123")]) == [(1, 2, 3), (1, 3, 2), (2, 1, 3)]
    assert hash(P("21")) == hash((2, 1))


@pytest.mark.parametrize(
    "text, pinnacles, peaks, vales, valleys",
    [
        ("15264387", (5, 6, 8), (2, 4, 7), (1, 2, 3, 7), (1, 3, 6, 8)),
        ("1234", (), (), (1,), (1,)),
        ("4321", (), (), (1,), (4,)),
        ("1324", (3,), (2,), (1, 2), (1, 3)),
        ("32814756", (7, 8), (3, 6), (1, 2, 5), (2, 4, 7)),
        ("1", (), (), (1,), (1,)),
        ("21", (), (), (1,), (2,)),
    ],
)
def test_statistics(text, pinnacles, peaks, vales, valleys):
    p = P(text)
    assert pinnacle_set(p) == pinnacles
    assert peak_set(p) == peaks
    assert vale_set(p) == vales
    assert valley_set(p) == valleys
    assert tuple(sorted(p[i - 1] for i in peaks)) == pinnacles
    assert tuple(sorted(p[i - 1] for i in valleys)) == vales


@pytest.mark.parametrize(
    "text, descents, double",
    [
        ("1234", 0, False),
        ("54321", 4, True),
        ("6534127", 3, True),
        ("321", 2, True),
        ("132", 1, False),
        ("1", 0, False),
    ],
)
def test_descents(text, descents, double):
    assert descent_count(P(text)) == descents
    assert has_double_descent(P(text)) == double


@pytest.mark.parametrize(
    "text, x, greater, expected",
    [
        ("6534127", 4, False, ((6, 5), (3,), 4, (1, 2), (7,))),
        ("6534127", 5, False, ((6,), (), 5, (3, 4, 1, 2), (7,))),
        ("6534127", 1, False, ((6, 5, 3, 4), (), 1, (), (2, 7))),
        ("6534127", 5, True, ((), (6,), 5, (), (3, 4, 1, 2, 7))),
        ("6534127", 4, True, ((6, 5, 3), (), 4, (), (1, 2, 7))),
        ("6534127", 7, False, ((), (6, 5, 3, 4, 1, 2), 7, (), ())),
    ],
)
def test_x_factorization(text, x, greater, expected):
    factorization = x_factorization(P(text), x, greater=greater)
    assert factorization == XFactorization(*expected)
    assert factorization.word() == P(text)


@pytest.mark.parametrize("text", ["15264387", "32814756", "6534127", "1"])
def test_x_factorization_of_vale_is_trivial(text):
    p = P(text)
    for v in vale_set(p):
        factorization = x_factorization(p, v)
        assert factorization.w2 == () and factorization.w4 == ()
        assert factorization.swapped() == p


def test_x_factorization_missing_letter():
    with pytest.raises(ValueError, match="not a letter"):
        x_factorization(P("1234"), 5)


def test_x_factorization_on_subword():
    factorization = x_factorization((2, 8, 1, 7, 5), 8)
    assert factorization == XFactorization((), (2,), 8, (1, 7, 5), ())
    assert factorization.maxima() == (2, 7)


def test_maxima_of_empty_flanks():
    assert XFactorization((), (), 3, (), ()).maxima() == (0, 0)


@pytest.mark.parametrize(
    "text, letters, expected",
    [
        ("32814756", {7, 8}, (8, 7)),
        ("32814756", {1, 2, 5, 7, 8}, (2, 8, 1, 7, 5)),
        ("32814756", set(range(1, 9)), (3, 2, 8, 1, 4, 7, 5, 6)),
        ("32814756", set(), ()),
    ],
)
def test_restrict(text, letters, expected):
    assert restrict(P(text), letters) == expected


@pytest.mark.parametrize(
    "text, expected", [("1234", "4321"), ("15264387", "84735612"), ("1", "1")]
)
def test_w0_conjugate(text, expected):
    assert w0_conjugate(P(text)) == P(expected)
    assert isinstance(w0_conjugate(P(text)), Permutation)
    assert w0_conjugate(w0_conjugate(P(text))) == P(text)
