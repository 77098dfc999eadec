from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylunip.classical_maps import (
    UnipotentSymbol,
    enumerate_unipotents,
    iota,
    iota2,
    orthogonal_fiber_minimizer,
    phi,
    pi,
    psi,
    psi_even_r,
    psi_marked,
    psi_orthogonal,
    rho,
    xi,
    xi_inv,
)
from weylunip.errors import BadInput, NotInR
from weylunip.partitions import (
    MarkedPartition,
    in_P_tilde,
    in_Q,
    in_R,
    multiplicity,
    partition,
    partitions_of,
)
from weylunip.weyl_classes import ClassSymbol, context, enumerate_classes, m_of_class


def brute_min_fiber(c):
    """Independent minimizer oracle: split every even sub-multiset into the
    paired side, keep the splittings whose other side passes the gap
    predicate, return the shortest-paired-side ones."""
    values = sorted(set(c), reverse=True)
    counts = [multiplicity(c, v) for v in values]
    fiber = []
    for picks in product(*[range(q // 2 + 1) for q in counts]):
        p, r = [], []
        for v, q, take in zip(values, counts, picks):
            p += [v] * (2 * take)
            r += [v] * (q - 2 * take)
        r, p = partition(r), partition(p)
        if in_P_tilde(p) and in_Q(r, sum(r)) and in_R(r):
            fiber.append((r, p))
    best = min(len(p) for _, p in fiber)
    return fiber, [(r, p) for r, p in fiber if len(p) == best]


def test_iota_examples():
    assert iota((4,), (1, 1)) == (4, 1, 1)
    assert iota((), ()) == ()
    assert iota((2, 2), (3, 3, 1, 1)) == (3, 3, 2, 2, 1, 1)
    with pytest.raises(BadInput):
        iota((3,), ())
    with pytest.raises(BadInput):
        iota((2,), (2, 1))


def test_iota2_examples():
    m = iota2((2, 2), (4, 4))
    assert m.c == (4, 4, 2, 2) and m.eps_map() == {4: 0, 2: 1}
    m = iota2((2,), (2, 2))
    assert m.c == (2, 2, 2) and m.eps == ()
    m = iota2((4, 2), ())
    assert m.c == (4, 2) and m.eps == ()


def test_xi_examples():
    assert xi((4, 4), 0) == (5, 3)
    assert xi((2, 2), 1) == (3, 1, 1)
    assert xi((2, 2, 2, 2), 0) == (3, 2, 2, 1)
    assert xi((), 1) == (1,)
    assert xi((), 0) == ()
    with pytest.raises(BadInput):
        xi((4,), 0)  # odd length not allowed at kappa=0


def test_xi_inv_examples():
    assert xi_inv((5, 3), 0) == (4, 4)
    assert xi_inv((3, 1, 1), 1) == (2, 2)
    assert xi_inv((), 0) == ()
    with pytest.raises(NotInR):
        xi_inv((4, 4), 0)
    with pytest.raises(BadInput):
        xi_inv((5, 3), 1)  # parity mismatch


even_records = st.lists(st.integers(1, 6), max_size=6).map(
    lambda xs: tuple(sorted((2 * x for x in xs), reverse=True))
)


@given(even_records, st.integers(0, 1))
def test_xi_round_trip_and_landing(r, kappa):
    if kappa == 0 and len(r) % 2:
        r = r[1:]
    img = xi(r, kappa)
    assert list(img) == sorted(img, reverse=True)
    assert sum(img) == sum(r) + kappa
    assert in_Q(img, sum(r) + kappa) and in_R(img)
    assert xi_inv(img, kappa) == r


def test_psi_even_r_examples():
    assert psi_even_r((2, 1, 1)) == ((2,), (1, 1))
    assert psi_even_r((4, 4)) == ((4, 4), ())
    assert psi_even_r((1, 1, 1, 1)) == ((), (1, 1, 1, 1))
    with pytest.raises(BadInput):
        psi_even_r((3, 1))


def test_psi_marked_examples():
    m = MarkedPartition.build((4, 4, 2, 2), {4: 1, 2: 0})
    assert psi_marked(m) == ((4, 4), (2, 2))
    m = MarkedPartition.build((2, 2, 2), {})
    assert psi_marked(m) == ((2, 2, 2), ())
    m = MarkedPartition.build((3, 3), {})
    assert psi_marked(m) == ((), (3, 3))


def test_psi_orthogonal_examples_with_brute_force():
    # (5,3): the only fiber element
    fiber, minimizers = brute_min_fiber((5, 3))
    assert fiber == [((5, 3), ())]
    assert psi_orthogonal((5, 3), 0) == ((4, 4), ())
    # (4,4): singleton fiber with everything on the paired side
    fiber, minimizers = brute_min_fiber((4, 4))
    assert fiber == [((), (4, 4))]
    assert psi_orthogonal((4, 4), 0) == ((), (4, 4))
    # (3,3,1,1,1): the 1-block keeps a copy that the inverse then drops
    fiber, minimizers = brute_min_fiber((3, 3, 1, 1, 1))
    assert minimizers == [((1,), (3, 3, 1, 1))]
    assert psi_orthogonal((3, 3, 1, 1, 1), 1) == ((), (3, 3, 1, 1))


@pytest.mark.parametrize("n_amb", range(3, 16))
def test_minimizer_matches_brute_force(n_amb):
    for c in partitions_of(n_amb):
        if not in_Q(c, n_amb):
            continue
        _, minimizers = brute_min_fiber(c)
        assert len(minimizers) == 1, c
        assert orthogonal_fiber_minimizer(c) == minimizers[0]


def test_phi_examples():
    assert phi(context("B", 4), ClassSymbol.classical((), (3, 3, 1, 1))) == UnipotentSymbol.plain(
        (3, 3, 1, 1, 1)
    )
    assert phi(context("C", 2), ClassSymbol.classical((2,), (1, 1))) == UnipotentSymbol.plain(
        (2, 1, 1)
    )
    assert phi(context("D", 4), ClassSymbol.classical((4, 4), ())) == UnipotentSymbol.plain((5, 3))
    assert phi(context("A", 3), ClassSymbol.type_a((3, 1))) == UnipotentSymbol.plain((3, 1))
    got = phi(context("C", 2, "p2"), ClassSymbol.classical((2, 2), ()))
    assert got.marked == MarkedPartition.build((2, 2), {2: 1})


def test_psi_examples():
    assert psi(context("C", 2), UnipotentSymbol.plain((2, 1, 1))) == ClassSymbol.classical(
        (2,), (1, 1)
    )
    assert psi(context("D", 4), UnipotentSymbol.plain((4, 4))) == ClassSymbol.classical(
        (), (4, 4)
    )
    assert str(psi(context("F4"), UnipotentSymbol.named("C_3(a_1)"))) == "A_3+~A_1"


def test_rho_examples():
    c2p2 = context("C", 2, "p2")
    for bit in (0, 1):
        u = UnipotentSymbol.with_marks(MarkedPartition.build((2, 2), {2: bit}))
        assert rho(c2p2, u) == UnipotentSymbol.plain((2, 2))
    assert rho(context("F4", char="p2"), UnipotentSymbol.named("(B_2)_2")) == UnipotentSymbol.named(
        "B_2"
    )


def test_pi_examples():
    c2p2 = context("C", 2, "p2")
    got = pi(c2p2, UnipotentSymbol.plain((2, 2)))
    assert got.marked == MarkedPartition.build((2, 2), {2: 1})
    got = pi(c2p2, UnipotentSymbol.plain((2, 1, 1)))
    assert got.marked == MarkedPartition.build((2, 1, 1), {})
    assert pi(context("G2", char="p3"), UnipotentSymbol.named("~A_1")) == UnipotentSymbol.named(
        "~A_1"
    )


@pytest.mark.parametrize(
    "ctx",
    [
        context("A", 4),
        context("B", 3),
        context("B", 3, "p2"),
        context("C", 3),
        context("C", 3, "p2"),
        context("D", 4),
        context("D", 4, "p2"),
        context("G2", char="p3"),
        context("E6"),
    ],
)
def test_phi_psi_identity_small(ctx):
    for u in enumerate_unipotents(ctx):
        assert phi(ctx, psi(ctx, u)) == u


@pytest.mark.parametrize(
    "ctx",
    [context("B", 3), context("C", 3), context("C", 3, "p2"), context("D", 4), context("D", 4, "p2")],
)
def test_unique_minimum_by_full_scan(ctx):
    fibers = {}
    for C in enumerate_classes(ctx):
        fibers.setdefault(phi(ctx, C), []).append(C)
    assert sorted(map(str, fibers)) == sorted(map(str, enumerate_unipotents(ctx)))
    for u, fib in fibers.items():
        ms = sorted(m_of_class(ctx, C) for C in fib)
        assert ms.count(ms[0]) == 1
        best = min(fib, key=lambda C: m_of_class(ctx, C))
        assert psi(ctx, u) == best


def test_validation_rejects_foreign_symbols():
    with pytest.raises(BadInput):
        psi(context("C", 2), UnipotentSymbol.plain((3, 1)))
    with pytest.raises(BadInput):
        psi(context("B", 2), UnipotentSymbol.plain((4, 1)))
    with pytest.raises(BadInput):
        psi(context("D", 3, "p2"), UnipotentSymbol.with_marks(MarkedPartition.build((4, 1, 1), {})))
    with pytest.raises(BadInput):
        psi(context("E6"), UnipotentSymbol.named("nonsense"))


def test_enumerate_unipotents_counts():
    # marked symbols: one per marking of each admissible base partition
    assert [str(u) for u in enumerate_unipotents(context("C", 2, "p2"))] == [
        "c=4;eps=",
        "c=2,2;eps=2:0",
        "c=2,2;eps=2:1",
        "c=2,1,1;eps=",
        "c=1,1,1,1;eps=",
    ]
    assert len(enumerate_unipotents(context("D", 3, "p2"))) == 5
    assert [u.partition for u in enumerate_unipotents(context("B", 2))] == [
        (5,),
        (3, 1, 1),
        (2, 2, 1),
        (1, 1, 1, 1, 1),
    ]
