"""The class-to-unipotent surjection, its canonical section, and the
cross-characteristic comparison maps.

For the classical types everything is partition combinatorics:

* type C, good characteristic: merge the two cycle records;
* types C/B in characteristic 2: merge and mark the even values that came
  from the stable record;
* types B/D, good characteristic: first trade the all-even stable record
  for a mixed-parity one (``xi``), then merge;
* type D in characteristic 2: the marked merge, restricted to even-length
  records.

The section ``psi`` picks, in every fiber, the unique pair whose swap-cycle
record is shortest; the per-case rules live in ``psi_even_r``,
``psi_marked`` and ``psi_orthogonal``.  Exceptional types are table lookups.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from . import exceptional_tables
from .errors import BadInput, BoundExceeded, NotInR, ParseError
from .partitions import (
    MarkedPartition,
    Partition,
    check_partition,
    epsilon_domain,
    format_marked,
    format_partition,
    in_P_tilde,
    in_Q,
    in_R,
    in_S_kappa,
    in_T,
    multiplicity,
    odd_entries,
    parse_marked,
    parse_partition,
    partition,
    partitions_of,
)
from .weyl_classes import (
    DEFAULT_RANK_BOUND,
    ClassSymbol,
    GroupContext,
    validate_class,
)


@dataclass(frozen=True)
class UnipotentSymbol:
    """A unipotent class: a Jordan type, a marked Jordan type, or a name."""

    partition: Optional[Partition] = None
    marked: Optional[MarkedPartition] = None
    name: Optional[str] = None

    def __post_init__(self):
        if sum(x is not None for x in (self.partition, self.marked, self.name)) != 1:
            raise BadInput("unipotent symbol must have exactly one shape")

    @staticmethod
    def plain(c) -> "UnipotentSymbol":
        return UnipotentSymbol(partition=check_partition(c))

    @staticmethod
    def with_marks(m: MarkedPartition) -> "UnipotentSymbol":
        return UnipotentSymbol(marked=m)

    @staticmethod
    def named(name: str) -> "UnipotentSymbol":
        return UnipotentSymbol(name=name)

    @property
    def kind(self) -> str:
        if self.partition is not None:
            return "plain"
        if self.marked is not None:
            return "marked"
        return "named"

    def __str__(self) -> str:
        if self.kind == "plain":
            return format_partition(self.partition)
        if self.kind == "marked":
            return format_marked(self.marked)
        return self.name


def _uses_marks(ctx: GroupContext) -> bool:
    return ctx.family in ("B", "C", "D") and ctx.char == "p2"


def parse_unipotent(ctx: GroupContext, text: str) -> UnipotentSymbol:
    """Parse the text form of a unipotent class for the given context."""
    text = text.strip()
    if ctx.is_exceptional:
        table = exceptional_tables.load_table(ctx)
        if text not in table.unipotent_index:
            raise ParseError(f"unknown unipotent name {text!r} for {ctx}")
        return UnipotentSymbol.named(text)
    if _uses_marks(ctx):
        return UnipotentSymbol.with_marks(parse_marked(text))
    return UnipotentSymbol.plain(parse_partition(text))


def validate_unipotent(ctx: GroupContext, u: UnipotentSymbol) -> None:
    """Raise BadInput unless ``u`` is a unipotent class of the context's group."""
    if ctx.family == "A":
        if u.kind != "plain" or sum(u.partition) != ctx.rank + 1:
            raise BadInput(f"{u} is not a unipotent class of {ctx}")
        return
    if ctx.is_exceptional:
        if u.kind != "named":
            raise BadInput(f"{u} is not a unipotent class of {ctx}")
        table = exceptional_tables.load_table(ctx)
        if u.name not in table.unipotent_index:
            raise BadInput(f"unknown unipotent name {u.name!r} for {ctx}")
        return
    two_n = 2 * ctx.rank
    if _uses_marks(ctx):
        if u.kind != "marked" or not in_T(u.marked.c, two_n):
            raise BadInput(f"{u} is not a unipotent class of {ctx}")
        if ctx.family == "D" and len(u.marked.c) % 2 != 0:
            raise BadInput(f"{u} needs an even number of blocks in {ctx}")
        return
    if u.kind != "plain":
        raise BadInput(f"{u} is not a unipotent class of {ctx}")
    if ctx.family == "C":
        ok = in_T(u.partition, two_n)
    else:
        ok = in_Q(u.partition, two_n + ctx.kappa)
    if not ok:
        raise BadInput(f"{u} is not a unipotent class of {ctx}")


# --- the elementary maps ---------------------------------------------------


def iota(r: Partition, p: Partition) -> Partition:
    """Multiset union of the two cycle records, re-sorted decreasingly."""
    if not in_S_kappa(r, 1):
        raise BadInput(f"stable cycle record must have even entries: {r}")
    if not in_P_tilde(p):
        raise BadInput(f"swap-cycle record must pair up: {p}")
    return partition(r + p)


def iota2(r: Partition, p: Partition) -> MarkedPartition:
    """Merge and mark: an even value of even multiplicity gets bit 1 exactly
    when it occurs in the stable record ``r``."""
    c = iota(r, p)
    r_values = set(r)
    return MarkedPartition.build(c, {j: (1 if j in r_values else 0) for j in epsilon_domain(c)})


def xi(r: Partition, kappa: int) -> Partition:
    """Trade an all-even cycle record for its mixed-parity Jordan string.

    Entry t gains 1 when t is odd and the entry strictly drops from its
    predecessor (vacuously at t=1), loses 1 when t is even and the entry
    strictly dominates its successor (vacuously at the end), else is kept;
    a final 1 is appended when length+kappa is odd.
    """
    if not in_S_kappa(r, kappa):
        raise BadInput(f"not a valid stable cycle record for kappa={kappa}: {r}")
    sigma = len(r)
    out = []
    for t in range(1, sigma + 1):
        v = r[t - 1]
        if t % 2 == 1:
            v += 1 if (t == 1 or r[t - 2] > v) else 0
        else:
            v -= 1 if (t == sigma or v > r[t]) else 0
        out.append(v)
    if (sigma + kappa) % 2 == 1:
        out.append(1)
    return tuple(out)


def xi_inv(c: Partition, kappa: int) -> Partition:
    """Inverse of ``xi``: odd entries move by (-1)^position, even entries are
    kept, and a final entry equal to ``kappa`` is dropped."""
    if not in_R(c):
        raise NotInR(f"not in the image of the adjustment map: {c}")
    if sum(c) % 2 != kappa:
        raise BadInput(f"|c|={sum(c)} has wrong parity for kappa={kappa}")
    tau = len(c)
    keep = tau - 1 if (tau and c[-1] == kappa) else tau
    out = []
    for k in range(1, keep + 1):
        v = c[k - 1]
        if v % 2 == 1:
            v += 1 if k % 2 == 0 else -1
        out.append(v)
    return tuple(out)


# --- fiber minimizers ------------------------------------------------------


def psi_even_r(c: Partition) -> tuple[Partition, Partition]:
    """Shortest-p fiber element over a plain merge: even values go to the
    stable record, odd values to the swap record."""
    if sum(c) % 2 or not in_T(c, sum(c)):
        raise BadInput(f"odd value with odd multiplicity: {c}")
    r = tuple(x for x in c if x % 2 == 0)
    p = tuple(x for x in c if x % 2 == 1)
    return r, p


def psi_marked(cm: MarkedPartition) -> tuple[Partition, Partition]:
    """Shortest-p fiber element over a marked merge.

    Odd values always go to the swap record, as do even values of even
    multiplicity marked 0; every other even value goes to the stable record.
    """
    if sum(cm.c) % 2 or not in_T(cm.c, sum(cm.c)):
        raise BadInput(f"invalid marked partition base: {cm.c}")
    eps = cm.eps_map()
    r, p = [], []
    for x in cm.c:
        if x % 2 == 1 or eps.get(x) == 0:
            p.append(x)
        else:
            r.append(x)
    return tuple(r), tuple(p)


def _star_holds(e: int, r_odd: tuple[int, ...]) -> bool:
    """Gap condition for an even value against the decreasing odd entries:
    above the top, strictly inside an even-indexed gap, or below the bottom
    when the count is even.  An empty list counts as satisfied."""
    s = len(r_odd)
    if s == 0:
        return True
    if e > r_odd[0]:
        return True
    if s % 2 == 0 and r_odd[s - 1] > e:
        return True
    for v in range(1, (s - 1) // 2 + 1):
        if r_odd[2 * v - 1] > e > r_odd[2 * v]:
            return True
    return False


def orthogonal_fiber_minimizer(c: Partition) -> tuple[Partition, Partition]:
    """The unique shortest-p splitting of an orthogonal Jordan type into a
    mixed-parity stable string and a paired swap record.

    Odd values: odd multiplicity keeps one copy; even multiplicity keeps two
    copies or none according to the parity of the position where the value's
    block starts inside the decreasing list of odd entries.  Even values then
    go entirely to the swap record exactly when the gap condition holds
    against the odd entries just kept.
    """
    if not in_Q(c, sum(c)):
        raise BadInput(f"even value with odd multiplicity: {c}")
    odd_list = odd_entries(c)
    kept = Counter()
    start = 1
    for e in sorted(set(odd_list), reverse=True):
        q = multiplicity(c, e)
        if q % 2 == 1:
            kept[e] = 1
        else:
            kept[e] = 2 if start % 2 == 0 else 0
        start += q
    r_odd = tuple(sorted((e for e in kept for _ in range(kept[e])), reverse=True))
    r, p = [], []
    for x in c:
        if x % 2 == 1:
            continue
        if _star_holds(x, r_odd):
            p.append(x)
        else:
            r.append(x)
    used = Counter()
    for x in odd_list:
        if used[x] < kept[x]:
            r.append(x)
            used[x] += 1
        else:
            p.append(x)
    return partition(r), partition(p)


def psi_orthogonal(c: Partition, kappa: int) -> tuple[Partition, Partition]:
    """Shortest-p fiber element over the merge that follows ``xi``: compute
    the mixed-parity minimizer, then pull its stable string back through
    ``xi``."""
    if sum(c) % 2 != kappa:
        raise BadInput(f"|c|={sum(c)} has wrong parity for kappa={kappa}")
    if sum(c) < 3:
        raise BadInput(f"|c| must be at least 3: {c}")
    r_mixed, p = orthogonal_fiber_minimizer(c)
    return xi_inv(r_mixed, kappa), p


# --- the main maps ---------------------------------------------------------


def phi(ctx: GroupContext, C: ClassSymbol) -> UnipotentSymbol:
    """The surjection from classes of the Weyl group to unipotent classes."""
    validate_class(ctx, C)
    if ctx.family == "A":
        return UnipotentSymbol.plain(C.cycle_type)
    if ctx.is_exceptional:
        return UnipotentSymbol.named(exceptional_tables.phi_lookup(ctx, C.label))
    if ctx.char == "p2":
        return UnipotentSymbol.with_marks(iota2(C.r, C.p))
    if ctx.family == "C":
        return UnipotentSymbol.plain(iota(C.r, C.p))
    return UnipotentSymbol.plain(partition(xi(C.r, ctx.kappa) + C.p))


def psi(ctx: GroupContext, u: UnipotentSymbol) -> ClassSymbol:
    """The section of ``phi`` picking the fiber element with the smallest
    fixed space."""
    validate_unipotent(ctx, u)
    if ctx.family == "A":
        return ClassSymbol.type_a(u.partition)
    if ctx.is_exceptional:
        return ClassSymbol.exceptional(exceptional_tables.psi_lookup(ctx, u.name))
    if ctx.char == "p2":
        r, p = psi_marked(u.marked)
    elif ctx.family == "C":
        r, p = psi_even_r(u.partition)
    else:
        r, p = psi_orthogonal(u.partition, ctx.kappa)
    return ClassSymbol.classical(r, p)


def rho(ctx_p: GroupContext, u: UnipotentSymbol) -> UnipotentSymbol:
    """Characteristic-p unipotent class to its good-characteristic image:
    apply the good-characteristic surjection to the section's value."""
    return phi(ctx_p.good(), psi(ctx_p, u))


def pi(ctx_p: GroupContext, u0: UnipotentSymbol) -> UnipotentSymbol:
    """Good-characteristic unipotent class to its characteristic-p image:
    apply the characteristic-p surjection to the good section's value."""
    return phi(ctx_p, psi(ctx_p.good(), u0))


# --- enumeration -----------------------------------------------------------


def _marked_symbols(cs: Iterable[Partition], even_length_only: bool) -> list[UnipotentSymbol]:
    from itertools import product

    out = []
    for c in cs:
        if even_length_only and len(c) % 2:
            continue
        dom = epsilon_domain(c)
        for bits in product((0, 1), repeat=len(dom)):
            out.append(
                UnipotentSymbol.with_marks(MarkedPartition.build(c, dict(zip(dom, bits))))
            )
    return out


def enumerate_unipotents(
    ctx: GroupContext, bound: int = DEFAULT_RANK_BOUND
) -> list[UnipotentSymbol]:
    """All unipotent classes of the context, in a fixed deterministic order."""
    if ctx.is_exceptional:
        table = exceptional_tables.load_table(ctx)
        return [UnipotentSymbol.named(n) for n in table.unipotent_names()]
    if ctx.rank > bound:
        raise BoundExceeded(f"rank {ctx.rank} exceeds enumeration bound {bound}")
    if ctx.family == "A":
        return [UnipotentSymbol.plain(c) for c in partitions_of(ctx.rank + 1)]
    two_n = 2 * ctx.rank
    if ctx.char == "p2":
        base = [c for c in partitions_of(two_n) if in_T(c, two_n)]
        return _marked_symbols(base, even_length_only=(ctx.family == "D"))
    if ctx.family == "C":
        return [UnipotentSymbol.plain(c) for c in partitions_of(two_n) if in_T(c, two_n)]
    n_amb = two_n + ctx.kappa
    return [UnipotentSymbol.plain(c) for c in partitions_of(n_amb) if in_Q(c, n_amb)]
