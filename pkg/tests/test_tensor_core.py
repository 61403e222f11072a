from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles as O
from weakyd.errors import NotIdempotent, ObjectMismatch, SingularMatrix
from weakyd.fields import GF, QQ
from weakyd.tensor_core import (K, Morphism, SpaceObject, first_difference, flip, identity,
                                inverse, rank, split_idempotent, zero)

scalars = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def space(label: str, n: int) -> SpaceObject:
    return SpaceObject(label, dim=n)


@st.composite
def matrices(draw, rows=None, cols=None, elements=scalars):
    r = rows if rows is not None else draw(st.integers(1, 4))
    c = cols if cols is not None else draw(st.integers(1, 4))
    return [[draw(elements) for _ in range(c)] for _ in range(r)]


def morph(rows, src="S", tgt="T") -> Morphism:
    return Morphism(space(src, len(rows[0])), space(tgt, len(rows)), rows)


@given(matrices(), matrices())
def test_tensor_matches_kronecker_oracle(a, b):
    f, g = morph(a, "A", "B"), morph(b, "C", "E")
    assert O.as_fractions(f | g) == O.kron(O.mat(a), O.mat(b))


@given(st.data())
def test_composition_matches_matmul_oracle(data):
    n, k, m = (data.draw(st.integers(1, 4)) for _ in range(3))
    a = data.draw(matrices(k, n))
    b = data.draw(matrices(m, k))
    A, B, C = space("A", n), space("B", k), space("C", m)
    f, g = Morphism(A, B, a), Morphism(B, C, b)
    assert O.as_fractions(g @ f) == O.matmul(O.mat(b), O.mat(a))


@given(st.data())
def test_interchange_law(data):
    n1, n2, k1, k2 = (data.draw(st.integers(1, 3)) for _ in range(4))
    A1, A2, B1, B2 = space("A1", n1), space("A2", n2), space("B1", k1), space("B2", k2)
    f = Morphism(A1, B1, data.draw(matrices(k1, n1)))
    g = Morphism(A2, B2, data.draw(matrices(k2, n2)))
    # factored tensors contracted one leg at a time against the dense product
    assert (f | g) == (f | B2) @ (A1 | g) == (B1 | g) @ (f | A2)
    dense = Morphism(A1 | A2, B1 | B2, O.kron(O.mat(f.tolist()), O.mat(g.tolist())))
    assert (f | g) == dense


def test_unit_object_is_dropped():
    A = space("A", 3)
    assert (A | K) == A and (K | A) == A
    assert (K | K).dim == 1


def test_tensor_is_strictly_associative():
    A, B, C = space("A", 2), space("B", 3), space("C", 2)
    assert ((A | B) | C) == (A | (B | C))
    assert ((A | B) | C).factors == (A, B, C)


@given(st.integers(1, 4), st.integers(1, 4))
def test_flip_matches_oracle_and_is_involutive(n, m):
    A, B = space("A", n), space("B", m)
    c = flip(A, B)
    assert O.as_fractions(c) == O.flip(n, m)
    assert flip(B, A) @ c == identity(A | B)


@given(matrices(), matrices())
def test_flip_is_natural(a, b):
    f, g = morph(a, "A", "B"), morph(b, "C", "E")
    assert flip(f.target, g.target) @ (f | g) == (g | f) @ flip(f.source, g.source)


@given(matrices())
def test_rank_matches_oracle(a):
    assert rank(morph(a)) == O.rank(O.mat(a))


@given(matrices(3, 3))
def test_inverse(a):
    f = morph(a, "A", "A")
    if O.det(O.mat(a)) == 0:
        with pytest.raises(SingularMatrix):
            inverse(f)
    else:
        assert inverse(f) @ f == identity(f.source)
        assert f @ inverse(f) == identity(f.source)


@st.composite
def idempotents(draw):
    """P diag(1..1, 0..0) P^-1 with P = LU, L and U unitriangular."""
    n = draw(st.integers(1, 4))
    lo = draw(matrices(n, n, st.integers(-2, 2).map(Fraction)))
    up = draw(matrices(n, n, st.integers(-2, 2).map(Fraction)))
    L = [[lo[i][j] if j < i else Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    U = [[up[i][j] if j > i else Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    p = O.matmul(L, U)
    k = draw(st.integers(0, n))
    dvals = [[Fraction(int(i == j and i < k)) for j in range(n)] for i in range(n)]
    P = morph(p, "A", "A")
    Dm = morph(dvals, "A", "A")
    return P @ Dm @ inverse(P), k


@given(idempotents())
def test_split_idempotent_factors_through_image(data):
    e, k = data
    s = split_idempotent(e, label="Im")
    assert s.image.dim == k == O.rank(O.as_fractions(e))
    assert s.inj @ s.proj == e
    assert s.proj @ s.inj == identity(s.image)
    # the injection is the pivot columns of e
    cols = [int(b[2:-1]) for b in s.image.basis_labels]
    ea = O.as_fractions(e)
    assert O.as_fractions(s.inj) == [[ea[i][c] for c in cols] for i in range(len(ea))]
    assert O.rank([[ea[i][c] for c in cols] for i in range(len(ea))]) == k


def test_split_idempotent_is_deterministic():
    e = morph([[1, 1], [0, 0]], "A", "A")
    s1, s2 = split_idempotent(e, "X"), split_idempotent(e, "X")
    assert s1.inj == s2.inj and s1.proj == s2.proj
    assert s1.image.basis_labels == ("[A0]",)


def test_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotent) as exc:
        split_idempotent(morph([[2, 0], [0, 1]], "A", "A"))
    assert exc.value.witness is not None


def test_shape_mismatch():
    with pytest.raises(ObjectMismatch):
        Morphism(space("A", 2), space("B", 2), [[1, 2, 3]])
    f = morph([[1, 2]], "A", "B")
    with pytest.raises(ObjectMismatch):
        f @ f


def test_with_entry_and_first_difference():
    f = morph([[1, 2], [3, 4]])
    g = f.with_entry(1, 0, "1/2")
    assert g.entry(1, 0) == Fraction(1, 2)
    assert first_difference(f, g) == (1, 0)
    assert first_difference(f, f) is None


@given(st.sampled_from([2, 3, 7]), st.data())
def test_prime_field_products_reduce_mod_p(p, data):
    F = GF(p)
    a = data.draw(matrices(2, 3, st.integers(-20, 20)))
    b = data.draw(matrices(3, 2, st.integers(-20, 20)))
    A, B, C = space("A", 2), space("B", 3), space("C", 2)
    f, g = Morphism(A, B, b, F), Morphism(B, C, a, F)
    want = [[int(x) % p for x in row] for row in O.matmul(O.mat(a), O.mat(b))]
    assert [[x.value for x in row] for row in (g @ f).tolist()] == want
    kr = O.kron(O.mat(a), O.mat(a))
    assert [[x.value for x in row] for row in (g | g).tolist()] == [[int(x) % p for x in r]
                                                                    for r in kr]


def test_zero_and_identity():
    A, B = space("A", 2), space("B", 3)
    assert zero(A, B).nonzero_count() == 0
    assert identity(A) @ identity(A) == identity(A)
    assert identity(A, GF(5)) != identity(A, QQ)


def test_large_entries_stay_exact():
    big = 10**30
    f = morph([[big, 1], [1, big]], "A", "A")
    sq = f @ f
    assert sq.entry(0, 0) == big * big + 1
    assert sq.entry(0, 1) == 2 * big
