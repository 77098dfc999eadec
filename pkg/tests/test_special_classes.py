import pytest

from weylunip.classical_maps import phi, psi
from weylunip.errors import NotSpecial, ParseError
from weylunip.special_classes import (
    Bipartition,
    PairSequenceBC,
    PairSequenceD,
    bc_pair_sequence_of,
    d_pair_sequence_of,
    enumerate_A,
    enumerate_A_prime,
    enumerate_C,
    enumerate_C_prime,
    h,
    h_inv,
    in_A_prime,
    in_C,
    in_C0,
    in_C0_prime,
    in_C_prime,
    is_special_class,
    k,
    k_inv,
    load_tau_table,
    parse_bipartition,
    parse_pair_sequence_bc,
    parse_pair_sequence_d,
    special_class_of,
    special_classes,
    tau,
)
from weylunip.weyl_classes import ClassSymbol, context, is_split_weyl_class


def brute_A(n):
    """Independent recount of the B/C special set: pair up every partition of
    2n in place (padding odd length with one zero) and keep the pairings with
    equal pair parity and equal odd pairs."""
    from weylunip.partitions import partitions_of

    kept = set()
    for lam in partitions_of(2 * n):
        padded = lam if len(lam) % 2 == 0 else lam + (0,)
        pairs = tuple((padded[i], padded[i + 1]) for i in range(0, len(padded), 2))
        if all((a - b) % 2 == 0 and (a % 2 == 0 or a == b) for a, b in pairs):
            kept.add(pairs)
    return kept


def test_in_A_enumeration_n2():
    got = {x.pairs for x in enumerate_A(2)}
    assert got == {((4, 0),), ((2, 2),), ((1, 1), (1, 1))}
    assert got == brute_A(2)


@pytest.mark.parametrize("n", range(2, 9))
def test_enumerate_A_against_independent_recount(n):
    assert {x.pairs for x in enumerate_A(n)} == brute_A(n)


def test_in_C_examples():
    assert in_C(PairSequenceD(((4, 4, 1),)))
    assert in_C(PairSequenceD(((4, 4, 0),)))
    assert in_C0(PairSequenceD(((4, 4, 0),)))
    assert not in_C0(PairSequenceD(((4, 4, 1),)))
    # unequal even pair requires flag 1
    assert not in_C(PairSequenceD(((6, 4, 0),)))
    assert in_C(PairSequenceD(((6, 4, 1),)))
    # touching even pairs force flag 0 on both
    assert not in_C(PairSequenceD(((4, 4, 1), (4, 4, 0))))
    assert in_C(PairSequenceD(((4, 4, 0), (4, 4, 0))))
    assert in_C(PairSequenceD(((4, 4, 1), (2, 2, 0))))


def test_h_examples():
    assert h(PairSequenceBC(((2, 2),))) == Bipartition((1,), (1,))
    assert h(PairSequenceBC(((1, 1), (1, 1)))) == Bipartition((), (1, 1))
    assert h(PairSequenceBC(((4, 0),))) == Bipartition((2,), ())
    assert h_inv(Bipartition((2,), ())) == PairSequenceBC(((4, 0),))
    with pytest.raises(NotSpecial):
        h(PairSequenceBC(((2, 1),)))


def test_k_examples():
    assert k(PairSequenceD(((3, 3, 0),))) == Bipartition((2,), (1,))
    assert k(PairSequenceD(((4, 4, 1),))) == Bipartition((3,), (1,))
    assert k(PairSequenceD(((4, 4, 0),))) == Bipartition((2,), (2,))
    # diagonal bipartitions pull back to all-even flag-0 sequences
    assert k_inv(Bipartition((2, 1), (2, 1))) == PairSequenceD(((4, 4, 0), (2, 2, 0)))
    with pytest.raises(NotSpecial):
        k_inv(Bipartition((1,), (2,)))


@pytest.mark.parametrize("n", range(2, 13))
def test_h_round_trips(n):
    side = enumerate_A(n)
    prime = enumerate_A_prime(n)
    assert len(side) == len(prime)
    assert {str(h(x)) for x in side} == {str(b) for b in prime}
    for x in side:
        assert in_A_prime(h(x), n)
        assert h_inv(h(x)) == x
    for bp in prime:
        assert h(h_inv(bp)) == bp


@pytest.mark.parametrize("n", range(2, 13))
def test_k_round_trips_and_diagonal(n):
    side = enumerate_C(n)
    prime = enumerate_C_prime(n)
    assert len(side) == len(prime)
    for x in side:
        assert in_C_prime(k(x), n)
        assert k_inv(k(x)) == x
    for bp in prime:
        assert k(k_inv(bp)) == bp
    diag = {str(bp) for bp in prime if in_C0_prime(bp, n)}
    assert {str(k(x)) for x in side if in_C0(x)} == diag


def test_special_class_of_examples():
    assert special_class_of(context("C", 2), PairSequenceBC(((4, 0),))) == ClassSymbol.classical(
        (4,), ()
    )
    d4 = context("D", 4)
    split = special_class_of(d4, PairSequenceD(((4, 4, 0),)))
    assert split == ClassSymbol.classical((), (4, 4))
    assert is_split_weyl_class(d4, split)
    assert special_class_of(d4, PairSequenceD(((4, 4, 1),))) == ClassSymbol.classical((4, 4), ())


def test_is_special_class_examples():
    assert is_special_class(context("E8"), ClassSymbol.exceptional("E_8(a_6)"))
    assert not is_special_class(context("G2"), ClassSymbol.exceptional("G_2(a_1)"))
    assert not is_special_class(context("C", 2), ClassSymbol.classical((2,), (1, 1)))
    assert is_special_class(context("C", 2), ClassSymbol.classical((2, 2), ()))
    assert is_special_class(context("A", 4), ClassSymbol.type_a((3, 2)))
    # repeated even stable entries interleave illegally
    assert not is_special_class(context("D", 8), ClassSymbol.classical((6, 4, 4, 2), ()))
    assert is_special_class(context("D", 8), ClassSymbol.classical((6, 4), (3, 3)))


@pytest.mark.parametrize("n", range(3, 11))
def test_pair_sequence_to_class_is_injective_for_d(n):
    # the touching-pairs flag constraint exists precisely to make the class
    # assignment injective
    ctx = context("D", n)
    seen = {}
    for x in enumerate_C(n):
        s = special_class_of(ctx, x)
        assert (s.r, s.p) not in seen, (x, seen[(s.r, s.p)])
        seen[(s.r, s.p)] = x


def test_pair_sequence_recovery_is_faithful():
    for n in range(2, 9):
        ctx = context("C", n)
        for x in enumerate_A(n):
            assert bc_pair_sequence_of(special_class_of(ctx, x)) == x
        ctxd = context("D", max(n, 3))
        for x in enumerate_C(max(n, 3)):
            assert d_pair_sequence_of(special_class_of(ctxd, x)) == x


def test_tau_exceptional_spot_values():
    assert tau(context("G2"), ClassSymbol.exceptional("A_2")) == "θ'"
    assert tau(context("F4"), ClassSymbol.exceptional("B_4")) == "χ_{4,1}"
    assert tau(context("E8"), ClassSymbol.exceptional("D_4(a_1)")) == "1400_37"
    with pytest.raises(NotSpecial):
        tau(context("G2"), ClassSymbol.exceptional("A_1"))


def test_tau_classical():
    assert tau(context("C", 2), ClassSymbol.classical((2, 2), ())) == "y=1;z=1"
    assert tau(context("B", 2), ClassSymbol.classical((4,), ())) == "y=2;z="
    assert tau(context("D", 4), ClassSymbol.classical((), (4, 4))) == "y=2;z=2"
    assert tau(context("A", 3), ClassSymbol.type_a((2, 2))) == "2,2"
    with pytest.raises(NotSpecial):
        tau(context("C", 2), ClassSymbol.classical((2,), (1, 1)))


def test_tau_table_labels_round_trip():
    from weylunip.weyl_classes import parse_carter_label

    for family in ("G2", "F4", "E6", "E7", "E8"):
        for lab, _ in load_tau_table(family):
            assert parse_carter_label(str(lab)) == lab


def test_tau_table_sizes():
    # sizes of the shipped tables; the E7 source prints 35 rows
    assert {fam: len(load_tau_table(fam)) for fam in ("G2", "F4", "E6", "E7", "E8")} == {
        "G2": 3,
        "F4": 11,
        "E6": 17,
        "E7": 35,
        "E8": 46,
    }


def test_special_classes_are_section_fixed_points():
    for ctx in (context("B", 4), context("C", 4), context("D", 4)):
        for s in special_classes(ctx):
            assert psi(ctx, phi(ctx, s)) == s


def test_special_class_listing_split_marks():
    d4 = context("D", 4)
    split = [C for C in special_classes(d4) if is_split_weyl_class(d4, C)]
    assert ClassSymbol.classical((), (4, 4)) in split
    assert ClassSymbol.classical((), (2, 2, 2, 2)) in split


def test_text_forms():
    assert str(PairSequenceD(((4, 4, 1), (2, 2, 0)))) == "4,4:1|2,2:0"
    assert parse_pair_sequence_d("4,4:1|2,2:0") == PairSequenceD(((4, 4, 1), (2, 2, 0)))
    assert parse_pair_sequence_bc("4,0") == PairSequenceBC(((4, 0),))
    assert parse_bipartition("y=2,1;z=1") == Bipartition((2, 1), (1,))
    with pytest.raises(ParseError):
        parse_pair_sequence_d("4,4")
    with pytest.raises(ParseError):
        parse_bipartition("2,1;1")
