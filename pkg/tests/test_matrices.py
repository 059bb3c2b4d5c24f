"""Structured matrices: entry rules, the banded kernel and the corner identities."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib import matrices, polytopes, repring
from lib.errors import InputError
from lib.matrices import StructuredMatrixSpec

GOLDEN = [
    ('T_1.txt', StructuredMatrixSpec.T(1)),
    ('N_1.txt', StructuredMatrixSpec.N(1)),
    ('T_2.txt', StructuredMatrixSpec.T(2)),
    ('N_2.txt', StructuredMatrixSpec.N(2)),
    ('T_3.txt', StructuredMatrixSpec.T(3)),
    ('N_3.txt', StructuredMatrixSpec.N(3)),
    ('M_2_p5.txt', StructuredMatrixSpec.M(2, 5)),
]

banded_specs = st.one_of(
    st.integers(1, 6).map(StructuredMatrixSpec.T),
    st.integers(1, 6).map(StructuredMatrixSpec.N),
    st.integers(1, 6).map(StructuredMatrixSpec.Z),
    st.tuples(st.integers(0, 4), st.integers(1, 6)).map(lambda qs: StructuredMatrixSpec.Q(*qs)),
)


@pytest.mark.parametrize('name,spec', GOLDEN, ids=[name for name, _ in GOLDEN])
def test_dense_matches_golden(name, spec, load_matrix):
    assert matrices.dense(spec) == load_matrix(name)


def test_z_is_rhombus_complement():
    assert matrices.dense(StructuredMatrixSpec.Z(1)) == ((1, 0, 1), (0, 0, 0), (1, 0, 1))


def test_q_specializes_to_t_and_n():
    for s in range(1, 5):
        assert matrices.dense(StructuredMatrixSpec.Q(2, s)) == matrices.dense(StructuredMatrixSpec.T(s))
        assert matrices.dense(StructuredMatrixSpec.Q(0, s)) == matrices.dense(StructuredMatrixSpec.N(s))


@given(banded_specs, st.data())
@settings(max_examples=80, deadline=None)
def test_banded_kernel_matches_dense(spec, data):
    vec = data.draw(st.lists(st.integers(-5, 5), min_size=spec.size, max_size=spec.size))
    rows = matrices.dense(spec)
    expected = [sum(a * x for a, x in zip(row, vec)) for row in rows]
    assert matrices.apply(spec, vec) == expected


def test_spec_validation():
    with pytest.raises(InputError):
        StructuredMatrixSpec('X', 1)
    with pytest.raises(InputError):
        StructuredMatrixSpec.T(0)
    with pytest.raises(InputError):
        StructuredMatrixSpec.Q(-1, 2)
    with pytest.raises(InputError):
        StructuredMatrixSpec.M(1, 5)
    with pytest.raises(InputError):
        matrices.entry(StructuredMatrixSpec.T(1), 4, 1)
    with pytest.raises(InputError):
        matrices.corner_power(StructuredMatrixSpec.T(1), 0)


def test_spec_shapes():
    assert StructuredMatrixSpec.T(3).size == 7
    assert StructuredMatrixSpec.T(3).q == 2
    assert StructuredMatrixSpec.N(3).q == 0
    m = StructuredMatrixSpec.M(3, 7)
    assert (m.size, m.a_or_k) == (7, 2)
    assert str(m) == 'M(n=3, p=7)'
    assert str(StructuredMatrixSpec.Q(1, 4)) == 'Q(q=1, k=4)'


@pytest.mark.parametrize('a', range(1, 6))
def test_ring_matrices_are_t_and_n(a):
    p = 2 * a + 1
    if not all(p % q for q in range(2, p)):
        pytest.skip('p is not prime')
    t = repring.mult_matrix(repring.delta(p, a) + repring.delta(p, a + 1))
    n = repring.mult_matrix(repring.lam(p, a))
    assert tuple(tuple(abs(x) for x in row) for row in t) == matrices.dense(StructuredMatrixSpec.T(a))
    assert tuple(tuple(abs(x) for x in row) for row in n) == matrices.dense(StructuredMatrixSpec.N(a))


@pytest.mark.parametrize('n', range(1, 8))
@pytest.mark.parametrize('d', range(1, 6))
def test_corner_identities(n, d):
    fib = polytopes.count_fibonacci(d, n - 1)
    assert matrices.corner_power(StructuredMatrixSpec.T(n), d + 1) == (2 * n + 1) ** d + 2 ** d * fib
    assert matrices.corner_power(StructuredMatrixSpec.Z(n), d + 1) == 2 ** d * fib
    assert matrices.corner_power(StructuredMatrixSpec.N(n), d + 1) == polytopes.count_extended(d - 2, n)


@pytest.mark.parametrize('p', [3, 5, 7])
def test_colength_matrix_matches_ring(p):
    for exps in [(2,), (p,), (2, 3), (3, 2, 2), (p, 2, 3)]:
        exps = tuple(min(e, p) for e in exps)
        assert matrices.hanmonsky_colength_matrix(p, exps) == repring.diag_colength(p, exps)


ring_specs = st.sampled_from([3, 5, 7, 11]).flatmap(
    lambda p: st.integers(2, p).map(lambda n: StructuredMatrixSpec.M(n, p))
)


@given(st.one_of(banded_specs, ring_specs))
@settings(max_examples=80, deadline=None)
def test_dense_is_symmetric_and_centro_symmetric(spec):
    m = matrices.dense(spec)
    last = spec.size - 1
    for i in range(spec.size):
        for j in range(spec.size):
            assert m[i][j] == m[j][i]
            assert m[i][j] == m[last - i][last - j]
