"""Integer partitions and the membership predicates the class maps run on.

A partition is stored canonically as a weakly decreasing tuple of positive
integers with no trailing zeros.  Formulas that are stated for zero-padded
sequences are implemented by treating missing entries as zeros on read.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from .errors import BadInput, BoundExceeded, NotInQ, ParseError

Partition = tuple[int, ...]

#: Largest N accepted by ``enumerate_partitions`` unless overridden.
DEFAULT_ENUMERATION_BOUND = 40


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts`` into a partition (sort decreasingly, drop zeros)."""
    out = tuple(sorted(parts, reverse=True))
    if out and out[-1] < 0:
        raise BadInput(f"negative entry in partition: {out}")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def check_partition(p) -> Partition:
    """Validate that ``p`` already is a canonical partition and return it."""
    p = tuple(p)
    if any(not isinstance(x, int) or x <= 0 for x in p):
        raise BadInput(f"partition entries must be positive integers: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise BadInput(f"partition entries must be weakly decreasing: {p}")
    return p


def multiplicity(p: Partition, j: int) -> int:
    """Number of entries of ``p`` equal to ``j``."""
    return sum(1 for x in p if x == j)


def in_P_tilde(p: Partition) -> bool:
    """Entries pair up in place: p1=p2, p3=p4, ...

    Equivalent to every value occurring an even number of times.
    """
    return len(p) % 2 == 0 and all(p[i] == p[i + 1] for i in range(0, len(p), 2))


def _check_kappa(kappa: int) -> None:
    if kappa not in (0, 1):
        raise BadInput(f"kappa must be 0 or 1, got {kappa!r}")


def in_S_kappa(r: Partition, kappa: int) -> bool:
    """All entries even; for kappa=0 additionally an even number of entries."""
    _check_kappa(kappa)
    if any(x % 2 for x in r):
        return False
    return kappa == 1 or len(r) % 2 == 0


def in_T(c: Partition, two_n: int) -> bool:
    """|c| = two_n and every odd value occurs an even number of times."""
    if two_n % 2:
        raise BadInput(f"two_n must be even, got {two_n}")
    if sum(c) != two_n:
        return False
    return all(multiplicity(c, j) % 2 == 0 for j in set(c) if j % 2 == 1)


def in_Q(c: Partition, N: int) -> bool:
    """|c| = N and every even value occurs an even number of times."""
    if sum(c) != N:
        return False
    return all(multiplicity(c, j) % 2 == 0 for j in set(c) if j % 2 == 0)


def odd_entries(p: Partition) -> Partition:
    """The odd entries of ``p``, in their (decreasing) order."""
    return tuple(x for x in p if x % 2 == 1)


def in_R(r: Partition) -> bool:
    """Gap/parity conditions cutting out the image of the even-to-mixed
    adjustment map inside the orthogonal partitions.

    With J the positions of odd entries and r^1 >= ... >= r^s the odd
    entries themselves, requires: a nonempty ``r`` starts with an odd entry;
    an even-length ``r`` also ends with one; r^u > r^{u+1} for odd u; and for
    even u no entry of ``r`` lies strictly between r^u and r^{u+1}.
    """
    if not in_Q(r, sum(r)):
        raise NotInQ(f"even value with odd multiplicity: {r}")
    tau = len(r)
    if tau == 0:
        return True
    if r[0] % 2 == 0:
        return False
    if tau % 2 == 0 and r[tau - 1] % 2 == 0:
        return False
    odd = odd_entries(r)
    s = len(odd)
    for u in range(1, s):
        if u % 2 == 1:
            if odd[u - 1] <= odd[u]:
                return False
        else:
            hi, lo = odd[u - 1], odd[u]
            if any(hi > x > lo for x in r):
                return False
    return True


# --- marked partitions -----------------------------------------------------


def epsilon_domain(c: Partition) -> tuple[int, ...]:
    """Even values of ``c`` with even positive multiplicity, decreasing."""
    return tuple(
        sorted(
            (j for j in set(c) if j % 2 == 0 and multiplicity(c, j) % 2 == 0),
            reverse=True,
        )
    )


@dataclass(frozen=True)
class MarkedPartition:
    """A partition together with a 0/1 marking of the qualifying even values.

    The marking domain is forced by the ambient partition: exactly the even
    values whose multiplicity is even and positive.
    """

    c: Partition
    eps: tuple[tuple[int, int], ...]  # (value, bit) pairs, decreasing values

    def __post_init__(self):
        check_partition(self.c)
        dom = epsilon_domain(self.c)
        if tuple(j for j, _ in self.eps) != dom:
            raise BadInput(
                f"marking domain {tuple(j for j, _ in self.eps)} does not match "
                f"required domain {dom} of {self.c}"
            )
        if any(b not in (0, 1) for _, b in self.eps):
            raise BadInput(f"marking bits must be 0 or 1: {self.eps}")

    @staticmethod
    def build(c: Iterable[int], marks: dict[int, int] | None = None) -> "MarkedPartition":
        """Construct from a partition and a {value: bit} mapping."""
        c = partition(c)
        marks = marks or {}
        dom = epsilon_domain(c)
        extra = set(marks) - set(dom)
        if extra:
            raise BadInput(f"marks {sorted(extra)} outside marking domain {dom}")
        return MarkedPartition(c, tuple((j, marks.get(j, 0)) for j in dom))

    def eps_map(self) -> dict[int, int]:
        return dict(self.eps)

    def eps_of(self, j: int) -> int:
        for k, b in self.eps:
            if k == j:
                return b
        raise BadInput(f"{j} not in marking domain of {self.c}")


# --- enumeration -----------------------------------------------------------


def _gen_partitions(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=256)
def partitions_of(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` (parts <= max_part), lexicographically decreasing."""
    if n < 0:
        raise BadInput(f"cannot partition {n}")
    return tuple(_gen_partitions(n, max_part if max_part is not None else n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Number of partitions of ``n`` via the pentagonal-number recurrence.

    Independent of ``partitions_of``; used to cross-check exhaustiveness.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 == 1 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def enumerate_partitions(
    n: int,
    pred: Callable[[Partition], bool] | None = None,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> list[Partition]:
    """Partitions of ``n`` satisfying ``pred``, lexicographically decreasing."""
    if n > bound:
        raise BoundExceeded(f"partition enumeration of {n} exceeds bound {bound}")
    items = partitions_of(n)
    if pred is None:
        return list(items)
    return [p for p in items if pred(p)]


def even_partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` with all parts even, lexicographically decreasing."""
    if n % 2:
        return []
    return [tuple(2 * x for x in q) for q in partitions_of(n // 2)]


def paired_partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` whose entries pair up in place (p1=p2, p3=p4, ...)."""
    if n % 2:
        return []
    out = []
    for q in partitions_of(n // 2):
        doubled = []
        for x in q:
            doubled += [x, x]
        out.append(tuple(doubled))
    return out


# --- text forms ------------------------------------------------------------


def format_partition(p: Partition) -> str:
    """Comma-separated decreasing entries; the empty partition prints as ''."""
    return ",".join(str(x) for x in p)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad partition text {text!r}: {exc}") from None
    if any(x <= 0 for x in parts):
        raise ParseError(f"partition entries must be positive: {text!r}")
    return partition(parts)


def format_epsilon(eps: tuple[tuple[int, int], ...]) -> str:
    """Semicolon-separated ``value:bit`` pairs, decreasing values."""
    return ";".join(f"{j}:{b}" for j, b in eps)


def parse_epsilon(text: str) -> tuple[tuple[int, int], ...]:
    text = text.strip()
    if not text:
        return ()
    pairs = []
    for tok in text.split(";"):
        if ":" not in tok:
            raise ParseError(f"bad marking pair {tok!r}")
        j, b = tok.split(":", 1)
        try:
            pairs.append((int(j), int(b)))
        except ValueError:
            raise ParseError(f"bad marking pair {tok!r}") from None
    return tuple(sorted(pairs, reverse=True))


def format_marked(m: MarkedPartition) -> str:
    return f"c={format_partition(m.c)};eps={format_epsilon(m.eps)}"


def parse_marked(text: str) -> MarkedPartition:
    text = text.strip()
    if not text.startswith("c=") or ";eps=" not in text:
        raise ParseError(f"marked partition must look like 'c=...;eps=...': {text!r}")
    c_part, eps_part = text[2:].split(";eps=", 1)
    c = parse_partition(c_part)
    eps = parse_epsilon(eps_part)
    return MarkedPartition.build(c, dict(eps))
