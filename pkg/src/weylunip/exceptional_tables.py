"""Fiber tables for the exceptional types, one data file per variant.

Each file row lists the classes of one fiber (minimizer first) and the
unipotent-class name it maps to.  Transcription is the dominant error
source, so files carry pinned checksums and every load re-runs the
structural sanity checks.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import (
    TableIntegrityError,
    UnknownClass,
    UnknownContext,
    UnknownUnipotent,
)
from .weyl_classes import (
    EXCEPTIONAL_RANK,
    CarterLabel,
    GroupContext,
    parse_carter_label,
)

TABLE_FILES = {
    ("G2", "good"): "fiber_g2_good.tbl",
    ("G2", "p3"): "fiber_g2_p3.tbl",
    ("F4", "good"): "fiber_f4_good.tbl",
    ("F4", "p2"): "fiber_f4_p2.tbl",
    ("E6", "good"): "fiber_e6_good.tbl",
    ("E7", "good"): "fiber_e7_good.tbl",
    ("E7", "p2"): "fiber_e7_p2.tbl",
    ("E8", "good"): "fiber_e8_good.tbl",
    ("E8", "p2"): "fiber_e8_p2.tbl",
    ("E8", "p3"): "fiber_e8_p3.tbl",
}

CHECKSUMS = {
    "fiber_e6_good.tbl": "02545ed53cc5bc10172fb725ddb5d96a28ce95eca996b6af61cbd5c5711c88b7",
    "fiber_e7_good.tbl": "9128b587ae2b0c84177c3f2d0b578094616cc56d0f44050de5c1b6b1e51a3d15",
    "fiber_e7_p2.tbl": "a043c674a4848e00534f73ab0538209ac26236c4bba53afe6229a873a59243a4",
    "fiber_e8_good.tbl": "b0e1c36e15c4c4c3f797293677c6af11f0045167a91d5c31d1a487f4ba91fad3",
    "fiber_e8_p2.tbl": "23bf920c8a932702ed9471219fa598808e509eb758d24abc9428836e699c1551",
    "fiber_e8_p3.tbl": "e3680f706f78ebab3a6b87c45968d6d49ec7996c3a46f81cdd405df75e159097",
    "fiber_f4_good.tbl": "0ff9c84a2c6e87b3ad0992c250f30ded2311ba1580751fa7ed326f539d173952",
    "fiber_f4_p2.tbl": "45b76cb00fadb1cfc412d5ae161b0747ca2dd183eab479887f3cdfaf0ae51961",
    "fiber_g2_good.tbl": "274e6adb7f8e1598f7bc8ddbe9f4e198ebc947c19d39ec9f72352755ecd07453",
    "fiber_g2_p3.tbl": "54d726208a48e297d8c964c45312fe332a42ae7f4a82fc1f91fdaf57c340e884",
}

EXPECTED_CLASS_COUNTS = {"G2": 6, "F4": 25, "E6": 25, "E7": 60, "E8": 112}

#: How each bad-characteristic table differs from its good-characteristic
#: sibling: {(family, char): [(replaced unipotent name, [(classes, name), ...])]}.
#: The replacement rows splice in at the position of the replaced row.
REPLACEMENTS = {
    ("G2", "p3"): [
        ("~A_1", [(("A_1+~A_1",), "~A_1"), (("~A_1",), "(~A_1)_3")]),
    ],
    ("F4", "p2"): [
        ("~A_1", [(("2A_1",), "~A_1"), (("~A_1",), "(~A_1)_2")]),
        ("~A_2+A_1", [(("A_2+~A_2",), "~A_2+A_1"), (("~A_2+A_1",), "(~A_2+A_1)_2")]),
        ("B_2", [(("A_3",), "B_2"), (("B_2",), "(B_2)_2")]),
        ("C_3(a_1)", [(("A_3+~A_1",), "C_3(a_1)"), (("B_2+A_1",), "(C_3(a_1))_2")]),
    ],
    ("E7", "p2"): [
        ("A_3+A_2", [(("D_4(a_1)+2A_1",), "A_3+A_2"), (("A_3+A_2",), "(A_3+A_2)_2")]),
    ],
    ("E8", "p2"): [
        ("A_3+A_2", [(("(2A_3)'",), "A_3+A_2"), (("A_3+A_2",), "(A_3+A_2)_2")]),
        ("D_4+A_2", [(("D_4+A_3",), "D_4+A_2"), (("D_4+A_2",), "(D_4+A_2)_2")]),
        ("D_5+A_2", [(("A_7+A_1",), "D_5+A_2"), (("D_5+A_2",), "(D_5+A_2)_2")]),
        ("D_7(a_1)", [(("D_8(a_2)",), "D_7(a_1)"), (("D_7(a_1)",), "(D_7(a_1))_2")]),
    ],
    ("E8", "p3"): [
        ("A_7", [(("D_8(a_3)",), "A_7"), (("A''_7",), "(A_7)_3")]),
    ],
}

_ROW_RE = re.compile(r"classes\s*=\s*(?P<classes>[^;]+?)\s*;\s*unipotent\s*=\s*(?P<unip>\S+)\s*$")

# a unipotent name carrying a bad-characteristic subscript, e.g. (B_2)_2
SUBSCRIPTED_NAME_RE = re.compile(r"^\((?P<base>.+)\)_(?P<p>[23])$")


@dataclass(frozen=True)
class FiberRow:
    classes: tuple[CarterLabel, ...]
    unipotent: str


@dataclass(frozen=True)
class FiberTable:
    context: GroupContext
    rows: tuple[FiberRow, ...]

    @property
    def class_index(self) -> dict[CarterLabel, FiberRow]:
        return self._class_index()

    @property
    def unipotent_index(self) -> dict[str, FiberRow]:
        return self._unipotent_index()

    @lru_cache(maxsize=None)
    def _class_index(self):
        return {lab: row for row in self.rows for lab in row.classes}

    @lru_cache(maxsize=None)
    def _unipotent_index(self):
        return {row.unipotent: row for row in self.rows}

    def unipotent_names(self) -> list[str]:
        return [row.unipotent for row in self.rows]


def _read_table_text(filename: str) -> str:
    data = resources.files("weylunip.data").joinpath(filename).read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    expected = CHECKSUMS[filename]
    if digest != expected:
        raise TableIntegrityError(
            f"{filename}: checksum {digest} differs from pinned {expected}"
        )
    return data.decode("utf-8")


def _parse_rows(filename: str) -> list[tuple[tuple[str, ...], str]]:
    rows = []
    for line in _read_table_text(filename).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = _ROW_RE.match(line)
        if not m:
            raise TableIntegrityError(f"{filename}: unparsable row {line!r}")
        rows.append((tuple(c.strip() for c in m.group("classes").split("|")), m.group("unip")))
    return rows


def _label_m(family: str, label: CarterLabel) -> int:
    return EXCEPTIONAL_RANK[family] - label.rank


@lru_cache(maxsize=None)
def _load(family: str, char: str) -> FiberTable:
    filename = TABLE_FILES[(family, char)]
    ctx = GroupContext(family, EXCEPTIONAL_RANK[family], char)
    rows = tuple(
        FiberRow(tuple(parse_carter_label(c) for c in classes), unip)
        for classes, unip in _parse_rows(filename)
    )
    # structural checks: rows partition the class set, names are unique,
    # the leading class of every row strictly minimizes the fixed-space dim
    seen = {}
    for row in rows:
        for lab in row.classes:
            if lab in seen:
                raise TableIntegrityError(f"{filename}: label {lab} occurs twice")
            seen[lab] = row
            if parse_carter_label(str(lab)) != lab:
                raise TableIntegrityError(f"{filename}: label {lab} does not round-trip")
    total = sum(len(row.classes) for row in rows)
    if total != EXPECTED_CLASS_COUNTS[family]:
        raise TableIntegrityError(
            f"{filename}: {total} classes listed, expected {EXPECTED_CLASS_COUNTS[family]}"
        )
    names = [row.unipotent for row in rows]
    if len(set(names)) != len(names):
        raise TableIntegrityError(f"{filename}: duplicate unipotent names")
    for row in rows:
        first_m = _label_m(family, row.classes[0])
        for other in row.classes[1:]:
            if _label_m(family, other) <= first_m:
                raise TableIntegrityError(
                    f"{filename}: first class of fiber {row.unipotent} does not "
                    f"strictly minimize the fixed-space dimension"
                )
    return FiberTable(ctx, rows)


def load_table(ctx: GroupContext) -> FiberTable:
    """The fiber table of an exceptional context, fully sanity-checked."""
    if (ctx.family, ctx.char) not in TABLE_FILES:
        raise UnknownContext(f"no table for context {ctx}")
    return _load(ctx.family, ctx.char)


def phi_lookup(ctx: GroupContext, label: CarterLabel | str) -> str:
    """Unipotent name of the fiber containing ``label``."""
    if isinstance(label, str):
        label = parse_carter_label(label)
    table = load_table(ctx)
    row = table.class_index.get(label)
    if row is None:
        raise UnknownClass(f"label {label} not in the table for {ctx}")
    return row.unipotent


def fiber(ctx: GroupContext, unipotent: str) -> tuple[CarterLabel, ...]:
    """The ordered class list mapped to ``unipotent`` (minimizer first)."""
    table = load_table(ctx)
    row = table.unipotent_index.get(unipotent)
    if row is None:
        raise UnknownUnipotent(f"unipotent name {unipotent!r} not in the table for {ctx}")
    return row.classes


def psi_lookup(ctx: GroupContext, unipotent: str) -> CarterLabel:
    """First (fixed-space-minimizing) class of the fiber of ``unipotent``."""
    return fiber(ctx, unipotent)[0]
