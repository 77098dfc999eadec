"""Brute-force verifiers for the theorem-level claims, exhaustive at bounded rank.

Every verifier recomputes the objects it checks by enumeration rather than
through the formula under test: fibers come from scanning the full class
list, membership in the adjusted-image set comes from its own predicate and
never from the image of the adjustment map, and counts are recomputed from
scratch.  Reports are deterministic (timing is kept out of the
machine-readable records).
"""

from __future__ import annotations

import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import product

from .classical_maps import (
    UnipotentSymbol,
    enumerate_unipotents,
    orthogonal_fiber_minimizer,
    phi,
    pi,
    psi,
    rho,
    xi,
    xi_inv,
)
from .exceptional_tables import (
    EXPECTED_CLASS_COUNTS,
    REPLACEMENTS,
    SUBSCRIPTED_NAME_RE,
    load_table,
)
from .partitions import (
    even_partitions_of,
    in_P_tilde,
    in_Q,
    in_R,
    multiplicity,
    partition,
    partitions_of,
)
from .special_classes import (
    enumerate_A,
    enumerate_A_prime,
    enumerate_C,
    enumerate_C_prime,
    h,
    h_inv,
    in_A_prime,
    in_C0,
    in_C0_prime,
    in_C_prime,
    k,
    k_inv,
    load_tau_table,
    special_class_of,
)
from .weyl_classes import (
    CHAR_VARIANTS,
    EXCEPTIONAL_RANK,
    GroupContext,
    enumerate_classes,
    is_split_weyl_class,
    m_of_class,
)

#: Default rank bound for exhaustive fiber scans.
DEFAULT_FIBER_BOUND = 12
#: Default size bound for the adjustment-map bijection check.
DEFAULT_XI_BOUND = 24
#: Default ambient-size bound for the fiber-minimum uniqueness check.
DEFAULT_MIN_BOUND = 25
#: Default total bound for the special-set bijection checks.
DEFAULT_SPECIAL_BOUND = 30


@dataclass
class VerificationReport:
    """Outcome of one verifier on one context: instance counts per assertion
    class and the failures, each a (input, expected, got) triple."""

    suite: str
    context: str
    counters: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def checked(self) -> int:
        return sum(self.counters.values())

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, assertion: str, n: int = 1) -> None:
        self.counters[assertion] = self.counters.get(assertion, 0) + n

    def fail(self, assertion: str, inp, expected, got) -> None:
        self.failures.append((assertion, str(inp), str(expected), str(got)))

    def record_lines(self) -> list[str]:
        """One machine-readable line per assertion class; timing excluded so
        records are reproducible bit for bit."""
        fails = Counter(a for a, *_ in self.failures)
        lines = []
        for assertion in sorted(set(self.counters) | set(fails)):
            n = self.counters.get(assertion, 0)
            f = fails.get(assertion, 0)
            status = "pass" if f == 0 else "fail"
            lines.append(
                f"suite={self.suite} context={self.context} assertion={assertion} "
                f"checked={n} failures={f} status={status}"
            )
        return lines

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"[{status}] suite={self.suite} context={self.context} "
            f"checked={self.checked} failures={len(self.failures)} "
            f"elapsed={self.elapsed:.2f}s"
        )


def _timed(fn):
    def wrap(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report

    wrap.__name__ = fn.__name__
    wrap.__doc__ = fn.__doc__
    return wrap


def fiber_map(ctx: GroupContext, bound: int = DEFAULT_FIBER_BOUND):
    """Full fibers of the surjection, computed by scanning every class."""
    fibers = defaultdict(list)
    for C in enumerate_classes(ctx, bound=bound):
        fibers[phi(ctx, C)].append(C)
    return fibers


def fiber_of(ctx: GroupContext, u: UnipotentSymbol, bound: int = DEFAULT_FIBER_BOUND):
    """The fiber over one unipotent class, section value first."""
    first = psi(ctx, u)
    rest = [C for C in fiber_map(ctx, bound)[u] if C != first]
    return [first] + rest


def _is_distinguished_good_char(ctx: GroupContext, u: UnipotentSymbol) -> bool:
    """Good characteristic only: distinguished Jordan types have all parts
    even and distinct (type C) or all parts odd and distinct (types B/D)."""
    c = u.partition
    if len(set(c)) != len(c):
        return False
    want = 0 if ctx.family == "C" else 1
    return all(x % 2 == want for x in c)


@_timed
def verify_theorem_0_2(ctx: GroupContext, bound: int = DEFAULT_FIBER_BOUND) -> VerificationReport:
    """Every fiber has a unique fixed-space minimizer and the section picks it.

    Also checks that the enumerated fibers cover exactly the enumerated
    unipotent classes, that split type-D classes sit alone in their fibers,
    and (good characteristic) that distinguished Jordan types have
    singleton fibers.
    """
    report = VerificationReport("theorem02", str(ctx))
    fibers = fiber_map(ctx, bound)
    unipotents = enumerate_unipotents(ctx, bound=bound)
    report.count("surjective-onto-enumeration")
    if set(fibers) != set(unipotents) or len(unipotents) != len(set(unipotents)):
        report.fail(
            "surjective-onto-enumeration",
            ctx,
            f"{len(unipotents)} unipotent classes",
            f"{len(fibers)} fiber images",
        )
    for u in unipotents:
        fib = fibers[u]
        ms = [m_of_class(ctx, C) for C in fib]
        mmin = min(ms)
        report.count("unique-minimum")
        if ms.count(mmin) != 1:
            report.fail("unique-minimum", u, "one minimizer", f"{ms.count(mmin)} of {len(fib)}")
            continue
        report.count("section-is-minimizer")
        argmin = fib[ms.index(mmin)]
        if psi(ctx, u) != argmin:
            report.fail("section-is-minimizer", u, argmin, psi(ctx, u))
        if ctx.family == "D":
            split = [C for C in fib if is_split_weyl_class(ctx, C)]
            report.count("split-fibers-singleton")
            if split and len(fib) != 1:
                report.fail("split-fibers-singleton", u, "singleton fiber", f"{len(fib)} classes")
        if (
            not ctx.is_exceptional
            and ctx.family != "A"
            and ctx.char == "good"
            and _is_distinguished_good_char(ctx, u)
        ):
            report.count("distinguished-fiber-singleton")
            if len(fib) != 1:
                report.fail("distinguished-fiber-singleton", u, 1, len(fib))
    return report


@_timed
def verify_phi_psi_identity(ctx: GroupContext, bound: int = DEFAULT_FIBER_BOUND) -> VerificationReport:
    """The surjection composed with its section is the identity."""
    report = VerificationReport("phipsi", str(ctx))
    for u in enumerate_unipotents(ctx, bound=bound):
        report.count("phi-psi-identity")
        back = phi(ctx, psi(ctx, u))
        if back != u:
            report.fail("phi-psi-identity", u, u, back)
    # elliptic classes are fixed points of the section composed the other way
    for C in enumerate_classes(ctx, bound=bound):
        if m_of_class(ctx, C) == 0:
            report.count("elliptic-fixed-point")
            back = psi(ctx, phi(ctx, C))
            if back != C:
                report.fail("elliptic-fixed-point", C, C, back)
    return report


@_timed
def verify_xi_bijection(n_max: int = DEFAULT_XI_BOUND) -> VerificationReport:
    """The adjustment map is a bijection from all-even records onto the
    gap-condition set, with the stated inverse; image membership is decided
    by the predicate, never by the map."""
    report = VerificationReport("xi", f"N<={n_max}")
    for kappa in (0, 1):
        for n in range(0, n_max + 1, 2):
            source = even_partitions_of(n)
            if kappa == 0:
                source = [r for r in source if len(r) % 2 == 0]
            target = [
                c for c in partitions_of(n + kappa) if in_Q(c, n + kappa) and in_R(c)
            ]
            images = []
            for r in source:
                img = xi(r, kappa)
                images.append(img)
                report.count("image-in-target")
                if list(img) != sorted(img, reverse=True) or not in_R(img):
                    report.fail("image-in-target", (r, kappa), "member of target set", img)
                report.count("inverse-roundtrip")
                if xi_inv(img, kappa) != r:
                    report.fail("inverse-roundtrip", (r, kappa), r, xi_inv(img, kappa))
            report.count("injective")
            if len(set(images)) != len(images):
                report.fail("injective", (n, kappa), len(images), len(set(images)))
            report.count("image-equals-target")
            if sorted(images) != sorted(target):
                report.fail("image-equals-target", (n, kappa), len(target), len(set(images)))
    return report


def _iota_tilde_fibers(c):
    """All splittings of ``c`` into (mixed-parity record in the gap set,
    paired record), found by trying every even sub-multiset for the paired
    side."""
    values = sorted(set(c), reverse=True)
    counts = [multiplicity(c, v) for v in values]
    fibers = []
    for picks in product(*[range(0, q // 2 + 1) for q in counts]):
        p = []
        r = []
        for v, q, take in zip(values, counts, picks):
            p += [v] * (2 * take)
            r += [v] * (q - 2 * take)
        r = partition(r)
        p = partition(p)
        if in_P_tilde(p) and in_Q(r, sum(r)) and in_R(r):
            fibers.append((r, p))
    return fibers


@_timed
def verify_fiber_minimum(n_max: int = DEFAULT_MIN_BOUND) -> VerificationReport:
    """Uniqueness of the shortest-p splitting of every orthogonal Jordan
    type, against full fiber enumeration, and agreement with the rule-based
    minimizer; also checks that merging the minimizer back gives the input."""
    report = VerificationReport("fiber-min", f"n<={n_max}")
    for n_amb in range(1, n_max + 1):
        for c in partitions_of(n_amb):
            if not in_Q(c, n_amb):
                continue
            fib = _iota_tilde_fibers(c)
            best = min(len(p) for _, p in fib)
            minimizers = [(r, p) for r, p in fib if len(p) == best]
            report.count("unique-minimum")
            if len(minimizers) != 1:
                report.fail("unique-minimum", c, 1, len(minimizers))
                continue
            report.count("rules-match-minimum")
            computed = orthogonal_fiber_minimizer(c)
            if computed != minimizers[0]:
                report.fail("rules-match-minimum", c, minimizers[0], computed)
            report.count("merge-roundtrip")
            if partition(computed[0] + computed[1]) != c:
                report.fail("merge-roundtrip", c, c, partition(computed[0] + computed[1]))
    return report


@_timed
def verify_rho_pi(ctx: GroupContext, bound: int = DEFAULT_FIBER_BOUND) -> VerificationReport:
    """The comparison maps factor the two surjections/sections as claimed:
    rho o phi_p = phi_0 on classes, psi_p o pi = psi_0 on good-characteristic
    unipotents, rho surjective, pi injective, rho o pi = identity; in type C
    characteristic 2, rho forgets the marking."""
    report = VerificationReport("rhopi", str(ctx))
    good = ctx.good()
    for C in enumerate_classes(ctx, bound=bound):
        report.count("rho-factors-phi")
        left = rho(ctx, phi(ctx, C))
        right = phi(good, C)
        if left != right:
            report.fail("rho-factors-phi", C, right, left)
    goods = enumerate_unipotents(good, bound=bound)
    pis = []
    for u0 in goods:
        img = pi(ctx, u0)
        pis.append(img)
        report.count("psi-factors-pi")
        if psi(ctx, img) != psi(good, u0):
            report.fail("psi-factors-pi", u0, psi(good, u0), psi(ctx, img))
        report.count("rho-pi-identity")
        if rho(ctx, img) != u0:
            report.fail("rho-pi-identity", u0, u0, rho(ctx, img))
    report.count("pi-injective")
    if len(set(pis)) != len(pis):
        report.fail("pi-injective", ctx, len(pis), len(set(pis)))
    bads = enumerate_unipotents(ctx, bound=bound)
    report.count("rho-surjective")
    images = {rho(ctx, u) for u in bads}
    if images != set(goods):
        report.fail("rho-surjective", ctx, len(goods), len(images))
    if ctx.family == "C" and ctx.char == "p2":
        for u in bads:
            report.count("rho-forgets-marks")
            if rho(ctx, u).partition != u.marked.c:
                report.fail("rho-forgets-marks", u, u.marked.c, rho(ctx, u))
    if ctx.is_exceptional:
        for u in bads:
            m = SUBSCRIPTED_NAME_RE.match(u.name)
            expected = m.group("base") if m else u.name
            report.count("rho-strips-subscript")
            if rho(ctx, u).name != expected:
                report.fail("rho-strips-subscript", u, expected, rho(ctx, u).name)
    return report


@_timed
def verify_tables(family: str) -> VerificationReport:
    """Structural integrity of the exceptional tables: class counts, the
    partition property, strict minimality of the leading label, and the
    bad-characteristic tables differing from the good one exactly by the
    declared replacement rows."""
    report = VerificationReport("tables", family)
    rank = EXCEPTIONAL_RANK[family]
    good_ctx = GroupContext(family, rank, "good")
    good = load_table(good_ctx)
    for char in CHAR_VARIANTS[family]:
        ctx = GroupContext(family, rank, char)
        table = load_table(ctx)  # loading already runs the structural checks
        labels = [lab for row in table.rows for lab in row.classes]
        report.count("class-count")
        if len(labels) != EXPECTED_CLASS_COUNTS[family] or len(set(labels)) != len(labels):
            report.fail("class-count", ctx, EXPECTED_CLASS_COUNTS[family], len(labels))
        report.count("same-class-set")
        if set(labels) != {lab for row in good.rows for lab in row.classes}:
            report.fail("same-class-set", ctx, "class set of good table", "differs")
        for row in table.rows:
            first_m = rank - row.classes[0].rank
            for other in row.classes[1:]:
                report.count("first-strictly-minimal")
                if rank - other.rank <= first_m:
                    report.fail("first-strictly-minimal", row.unipotent, f"> {first_m}", rank - other.rank)
        # at most one elliptic class per fiber (forced by unique minimality)
        for row in table.rows:
            report.count("at-most-one-elliptic")
            elliptic = [lab for lab in row.classes if lab.rank == rank]
            if len(elliptic) > 1:
                report.fail("at-most-one-elliptic", row.unipotent, "<=1", len(elliptic))
        if char == "good":
            continue
        reps = REPLACEMENTS[(family, char)]
        expected_rows = []
        for row in good.rows:
            hit = [r for r in reps if r[0] == row.unipotent]
            if hit:
                for classes, unip in hit[0][1]:
                    expected_rows.append((classes, unip))
            else:
                expected_rows.append((tuple(str(l) for l in row.classes), row.unipotent))
        actual_rows = [(tuple(str(l) for l in row.classes), row.unipotent) for row in table.rows]
        report.count("variant-is-good-plus-replacements")
        if actual_rows != expected_rows:
            report.fail(
                "variant-is-good-plus-replacements", ctx, f"{len(expected_rows)} rows", f"{len(actual_rows)} rows"
            )
    return report


@_timed
def verify_special(ctx: GroupContext, check_maps: bool = True, bound: int = DEFAULT_FIBER_BOUND) -> VerificationReport:
    """Round trips and coherence of the special-class machinery.

    Classical contexts: the two translation maps are mutually inverse
    bijections between independently enumerated sides, the all-even-flag-0
    part maps onto the diagonal bipartitions, special classes are fixed by
    section-after-surjection (good characteristic), and type-D specialness
    of the split kind coincides with the split predicate.  Exceptional
    contexts: the table is a bijection whose classes are section images.
    """
    report = VerificationReport("special", str(ctx))
    if ctx.is_exceptional:
        rows = load_tau_table(ctx.family)
        good = load_table(ctx.good())
        section_images = {row.classes[0] for row in good.rows}
        report.count("bijective-table")
        if len({lab for lab, _ in rows}) != len(rows) or len({rep for _, rep in rows}) != len(rows):
            report.fail("bijective-table", ctx.family, "distinct rows", "duplicates")
        for lab, _ in rows:
            report.count("classes-are-section-images")
            if lab not in section_images:
                report.fail("classes-are-section-images", lab, "section image", "not an image")
        return report
    if ctx.family == "A":
        report.count("type-a-trivial")
        return report
    n = ctx.rank
    if ctx.family in ("B", "C"):
        side = enumerate_A(n)
        side_prime = enumerate_A_prime(n)
        fwd, back, member = h, h_inv, in_A_prime
    else:
        side = enumerate_C(n)
        side_prime = enumerate_C_prime(n)
        fwd, back, member = k, k_inv, in_C_prime
    report.count("cardinalities-match")
    if len(side) != len(side_prime):
        report.fail("cardinalities-match", ctx, len(side), len(side_prime))
    images = []
    for x in side:
        bp = fwd(x)
        images.append(bp)
        report.count("image-in-interlacing-set")
        if not member(bp, n):
            report.fail("image-in-interlacing-set", x, "interlacing", bp)
        report.count("roundtrip-from-pairs")
        if back(bp) != x:
            report.fail("roundtrip-from-pairs", x, x, back(bp))
    report.count("image-equals-interlacing-set")
    if sorted(map(str, images)) != sorted(map(str, side_prime)):
        report.fail("image-equals-interlacing-set", ctx, len(side_prime), len(set(map(str, images))))
    for bp in side_prime:
        report.count("roundtrip-from-bipartitions")
        if fwd(back(bp)) != bp:
            report.fail("roundtrip-from-bipartitions", bp, bp, fwd(back(bp)))
    if ctx.family == "D":
        diag = [bp for bp in side_prime if in_C0_prime(bp, n)]
        diag_images = [k(x) for x in side if in_C0(x)]
        report.count("flag0-onto-diagonal")
        if sorted(map(str, diag_images)) != sorted(map(str, diag)):
            report.fail("flag0-onto-diagonal", ctx, len(diag), len(diag_images))
    if check_maps:
        good = ctx.good()
        for x in side:
            s = special_class_of(good, x)
            report.count("section-fixes-special")
            back_s = psi(good, phi(good, s))
            if back_s != s:
                report.fail("section-fixes-special", x, s, back_s)
            if ctx.family == "D":
                report.count("split-coherence")
                if is_split_weyl_class(good, s) != in_C0(x):
                    report.fail("split-coherence", x, in_C0(x), is_split_weyl_class(good, s))
    return report


def acceptance_contexts(bound: int = DEFAULT_FIBER_BOUND) -> list[GroupContext]:
    """All classical contexts up to the bound plus every exceptional variant."""
    out = []
    for family, lo in (("B", 2), ("C", 2), ("D", 3)):
        for n in range(lo, bound + 1):
            for char in CHAR_VARIANTS[family]:
                out.append(GroupContext(family, n, char))
    for family in ("G2", "F4", "E6", "E7", "E8"):
        for char in CHAR_VARIANTS[family]:
            out.append(GroupContext(family, EXCEPTIONAL_RANK[family], char))
    return out
