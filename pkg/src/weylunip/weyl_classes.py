"""Conjugacy-class symbols for the Weyl groups of every simple type.

Classical classes are pairs (r, p): ``r`` holds the sizes of the cycles that
are stable under the flip i -> N-i+1 of the underlying permutation model
(all even), ``p`` the sizes of the remaining cycles (pairing up).  Type A
classes are cycle types, exceptional classes are admissible-diagram labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    BadInput,
    BoundExceeded,
    InvalidClass,
    ParseError,
    WrongFamily,
)
from .partitions import (
    Partition,
    check_partition,
    even_partitions_of,
    format_partition,
    in_P_tilde,
    in_S_kappa,
    paired_partitions_of,
    parse_partition,
    partitions_of,
)

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")
EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
CHAR_VARIANTS = {
    "A": ("good",),
    "B": ("good", "p2"),
    "C": ("good", "p2"),
    "D": ("good", "p2"),
    "G2": ("good", "p3"),
    "F4": ("good", "p2"),
    "E6": ("good",),
    "E7": ("good", "p2"),
    "E8": ("good", "p2", "p3"),
}
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

#: Safety bound for classical class/unipotent enumerations (rank).
DEFAULT_RANK_BOUND = 20


@dataclass(frozen=True)
class GroupContext:
    """Simple type, rank and characteristic variant.

    ``char`` is one of ``good``, ``p2``, ``p3``; ``good`` stands for any
    characteristic that is not singled out for the family.
    """

    family: str
    rank: int
    char: str = "good"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadInput(f"unknown family {self.family!r}")
        if self.is_exceptional:
            if self.rank != EXCEPTIONAL_RANK[self.family]:
                raise BadInput(
                    f"rank of {self.family} is fixed at {EXCEPTIONAL_RANK[self.family]}"
                )
        else:
            if self.rank < MIN_RANK[self.family]:
                raise BadInput(
                    f"rank of {self.family} must be >= {MIN_RANK[self.family]}"
                )
        if self.char not in CHAR_VARIANTS[self.family]:
            raise BadInput(
                f"characteristic variant {self.char!r} not valid for {self.family} "
                f"(allowed: {', '.join(CHAR_VARIANTS[self.family])})"
            )

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_RANK

    @property
    def is_classical_bcd(self) -> bool:
        return self.family in ("B", "C", "D")

    @property
    def kappa(self) -> int:
        """Cycle-record parity: 0 for type D, 1 for types B and C."""
        if not self.is_classical_bcd:
            raise WrongFamily(f"kappa undefined for family {self.family}")
        return 0 if self.family == "D" else 1

    def good(self) -> "GroupContext":
        """The good-characteristic variant of the same group."""
        return GroupContext(self.family, self.rank, "good")

    def __str__(self) -> str:
        return f"{self.family}{'' if self.is_exceptional else '_' + str(self.rank)}/{self.char}"


def context(family: str, rank: Optional[int] = None, char: str = "good") -> GroupContext:
    """Convenience constructor; the rank of an exceptional family is implied."""
    if rank is None:
        if family not in EXCEPTIONAL_RANK:
            raise BadInput(f"rank required for family {family!r}")
        rank = EXCEPTIONAL_RANK[family]
    return GroupContext(family, rank, char)


# --- Carter labels ---------------------------------------------------------

_COMPONENT_RE = re.compile(
    r"(?P<mult>\d+)?(?P<tilde>~)?(?P<letter>[A-G])(?P<primes>'{0,2})_(?P<sub>\d+)"
    r"(?P<qual>\((a_\d+)\))?"
)


@dataclass(frozen=True)
class CarterComponent:
    multiplier: int
    series: str  # "A", "~A", "B", ..., "G"
    subscript: int
    qualifier: Optional[str] = None  # e.g. "(a_1)"

    def __str__(self) -> str:
        return self._render(0)

    def _render(self, primes: int) -> str:
        mult = str(self.multiplier) if self.multiplier > 1 else ""
        return f"{mult}{self.series}{primes * chr(39)}_{self.subscript}{self.qualifier or ''}"


@dataclass(frozen=True)
class CarterLabel:
    """A class name built from simple-diagram components, e.g. D_4(a_1)+2A_1.

    ``primes`` counts trailing primes; ``parenthesized`` records whether they
    attach to the whole bracketed name, as in (3A_1)', rather than to the
    single component letter, as in A'_5.  Printing round-trips exactly.
    """

    components: tuple[CarterComponent, ...]
    primes: int = 0
    parenthesized: bool = False

    def __post_init__(self):
        if self.primes not in (0, 1, 2):
            raise BadInput("at most two primes supported")
        if self.primes and not self.parenthesized and len(self.components) != 1:
            raise BadInput("attached primes require a single component")

    @property
    def rank(self) -> int:
        """Sum of multiplier * subscript over the components."""
        return sum(c.multiplier * c.subscript for c in self.components)

    def __str__(self) -> str:
        if self.primes and not self.parenthesized:
            return self.components[0]._render(self.primes)
        body = "+".join(str(c) for c in self.components)
        if self.parenthesized:
            return f"({body})" + self.primes * "'"
        return body


def _parse_components(text: str, offset: int) -> tuple[tuple[CarterComponent, ...], int]:
    comps = []
    attached = 0
    pos = 0
    while True:
        m = _COMPONENT_RE.match(text, pos)
        if not m or (m.group("tilde") and m.group("primes")):
            raise ParseError(f"bad class label component in {text!r}", offset + pos)
        primes = len(m.group("primes"))
        if primes:
            attached = primes
        comps.append(
            CarterComponent(
                multiplier=int(m.group("mult") or 1),
                series=("~" if m.group("tilde") else "") + m.group("letter"),
                subscript=int(m.group("sub")),
                qualifier=m.group("qual"),
            )
        )
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise ParseError(f"expected '+' in {text!r}", offset + pos)
        pos += 1
    if attached and len(comps) != 1:
        raise ParseError(f"attached primes only allowed on a single component: {text!r}", offset)
    return tuple(comps), attached


def parse_carter_label(text: str) -> CarterLabel:
    """Parse a printed class label; tildes are written '~', primes \"'\"."""
    s = text.strip()
    if not s:
        raise ParseError("empty class label", 0)
    if s.startswith("("):
        depth = 0
        close = -1
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    close = i
                    break
        if close < 0:
            raise ParseError(f"unbalanced parenthesis in {s!r}", 0)
        tail = s[close + 1 :]
        if tail and set(tail) != {"'"}:
            raise ParseError(f"unexpected trailing text {tail!r} in {s!r}", close + 1)
        comps, attached = _parse_components(s[1:close], 1)
        if attached:
            raise ParseError(f"primes inside parentheses not supported: {s!r}", 1)
        return CarterLabel(comps, primes=len(tail), parenthesized=True)
    comps, attached = _parse_components(s, 0)
    return CarterLabel(comps, primes=attached, parenthesized=False)


# --- class symbols ---------------------------------------------------------


@dataclass(frozen=True)
class ClassSymbol:
    """A conjugacy class of a Weyl group, in one of three shapes.

    Exactly one of ``cycle_type`` (type A), the pair ``r``/``p`` (types
    B/C/D) or ``label`` (exceptional types) is set.  ``side`` optionally
    tags one of the two halves of a type-D class that splits in the index-2
    subgroup; it never takes part in equality.
    """

    cycle_type: Optional[Partition] = None
    r: Optional[Partition] = None
    p: Optional[Partition] = None
    label: Optional[CarterLabel] = None
    side: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        shapes = (
            self.cycle_type is not None,
            self.r is not None or self.p is not None,
            self.label is not None,
        )
        if sum(shapes) != 1:
            raise BadInput("class symbol must have exactly one shape")
        if shapes[1] and (self.r is None or self.p is None):
            raise BadInput("classical class symbol needs both r and p")

    @staticmethod
    def type_a(cycle_type) -> "ClassSymbol":
        return ClassSymbol(cycle_type=check_partition(cycle_type))

    @staticmethod
    def classical(r, p, side: Optional[str] = None) -> "ClassSymbol":
        return ClassSymbol(r=check_partition(r), p=check_partition(p), side=side)

    @staticmethod
    def exceptional(label) -> "ClassSymbol":
        if isinstance(label, str):
            label = parse_carter_label(label)
        return ClassSymbol(label=label)

    @property
    def kind(self) -> str:
        if self.cycle_type is not None:
            return "A"
        if self.label is not None:
            return "exceptional"
        return "classical"

    def __str__(self) -> str:
        if self.kind == "A":
            return format_partition(self.cycle_type)
        if self.kind == "classical":
            return f"r={format_partition(self.r)};p={format_partition(self.p)}"
        return str(self.label)


def parse_class(ctx: GroupContext, text: str) -> ClassSymbol:
    """Parse the text form of a class, dispatching on the context family."""
    text = text.strip()
    if ctx.family == "A":
        return ClassSymbol.type_a(parse_partition(text))
    if ctx.is_classical_bcd:
        m = re.fullmatch(r"r=(?P<r>[\d,]*);p=(?P<p>[\d,]*)", text)
        if not m:
            raise ParseError(f"classical class must look like 'r=...;p=...': {text!r}")
        return ClassSymbol.classical(parse_partition(m.group("r")), parse_partition(m.group("p")))
    return ClassSymbol.exceptional(parse_carter_label(text))


def validate_class(ctx: GroupContext, C: ClassSymbol) -> None:
    """Raise InvalidClass unless ``C`` is a class of the context's group."""
    if ctx.family == "A":
        if C.kind != "A" or sum(C.cycle_type) != ctx.rank + 1:
            raise InvalidClass(f"{C} is not a class of {ctx}")
        return
    if ctx.is_classical_bcd:
        if C.kind != "classical":
            raise InvalidClass(f"{C} is not a class of {ctx}")
        if not in_S_kappa(C.r, ctx.kappa):
            raise InvalidClass(f"invalid stable cycle record {C.r} for {ctx}")
        if not in_P_tilde(C.p):
            raise InvalidClass(f"unpaired swap-cycle record {C.p} for {ctx}")
        if sum(C.r) + sum(C.p) != 2 * ctx.rank:
            raise InvalidClass(f"|r|+|p| must be {2 * ctx.rank} in {ctx}: {C}")
        return
    if C.kind != "exceptional":
        raise InvalidClass(f"{C} is not a class of {ctx}")
    from . import exceptional_tables

    table = exceptional_tables.load_table(ctx)
    if C.label not in table.class_index:
        raise InvalidClass(f"label {C.label} unknown in {ctx}")


def m_of_class(ctx: GroupContext, C: ClassSymbol) -> int:
    """Dimension of the fixed space of the class on the reflection representation."""
    validate_class(ctx, C)
    if C.kind == "A":
        return len(C.cycle_type) - 1
    if C.kind == "classical":
        return len(C.p) // 2
    return ctx.rank - C.label.rank


def is_split_weyl_class(ctx: GroupContext, C: ClassSymbol) -> bool:
    """Type D only: whether the class meets the full (index-2-larger) group
    in two classes, i.e. has no flip-stable cycles and only even cycle sizes."""
    if ctx.family != "D":
        raise WrongFamily(f"split classes only exist in type D, not {ctx.family}")
    validate_class(ctx, C)
    return C.r == () and all(x % 2 == 0 for x in C.p)


def enumerate_classes(ctx: GroupContext, bound: int = DEFAULT_RANK_BOUND) -> list[ClassSymbol]:
    """All classes of the context, duplicate-free, in a fixed deterministic order.

    For type D the list is at the level of the ambient permutation group
    (split classes appear once; see ``is_split_weyl_class``).
    """
    if ctx.is_exceptional:
        from . import exceptional_tables

        table = exceptional_tables.load_table(ctx)
        return [ClassSymbol.exceptional(lab) for row in table.rows for lab in row.classes]
    if ctx.rank > bound:
        raise BoundExceeded(f"rank {ctx.rank} exceeds enumeration bound {bound}")
    if ctx.family == "A":
        return [ClassSymbol.type_a(p) for p in partitions_of(ctx.rank + 1)]
    two_n = 2 * ctx.rank
    out = []
    for rsum in range(two_n, -1, -2):
        rs = even_partitions_of(rsum)
        if ctx.kappa == 0:
            rs = [r for r in rs if len(r) % 2 == 0]
        for r in rs:
            for p in paired_partitions_of(two_n - rsum):
                out.append(ClassSymbol.classical(r, p))
    return out
