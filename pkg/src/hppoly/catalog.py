"""Named matroid catalog with fixed 0-indexed element numbering.

Rank-3 entries are specified by their point-line geometry (every line lists
the collinear elements; a k-subset is a basis exactly when it lies on no
line).  Rank-4 entries are specified by their non-bases.  The numbering of
every named entry is part of the contract: the search fixtures and niceness
examples address concrete elements.  catalog_manifest() exposes the whole
table in machine-readable form, including the known half-plane /
transversal-niceness status of each entry (True / False / None=unknown).
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable

from .matroids import Matroid, Presentation, complete_graph, graphic_matroid, transversal_matroid
from .poly import mask_of


def rank3_from_lines(n: int, lines: Iterable[Iterable[int]]) -> Matroid:
    """Simple rank-3 matroid on n >= 3 points given its nontrivial lines."""
    line_masks = [mask_of(line, n) for line in lines]
    for a, b in itertools.combinations(line_masks, 2):
        if (a & b).bit_count() > 1:
            raise ValueError("two lines share more than one point")
    bases = []
    for cand in itertools.combinations(range(n), 3):
        cm = sum(1 << e for e in cand)
        if not any(cm & lm == cm for lm in line_masks):
            bases.append(cm)
    return Matroid(n, bases)


def uniform_matroid(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, [mask_of(c, n) for c in itertools.combinations(range(n), r)], validate=False)


def from_nonbases(n: int, r: int, nonbases: Iterable[Iterable[int]]) -> Matroid:
    nb = {mask_of(s, n) for s in nonbases}
    bases = [
        m
        for c in itertools.combinations(range(n), r)
        if (m := sum(1 << e for e in c)) not in nb
    ]
    return Matroid(n, bases)


# rank-3 line tables (0-indexed elements)
_FANO_LINES = [(0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 3, 6), (1, 4, 6), (2, 5, 6), (1, 3, 5)]

_LINE_TABLES: dict[str, tuple[int, list[tuple[int, ...]]]] = {
    "MK4": (6, [(0, 1, 2), (0, 4, 5), (2, 3, 5), (1, 3, 4)]),
    "W3": (6, [(0, 1, 2), (2, 3, 4), (4, 5, 0)]),
    "Q6": (6, [(0, 1, 2), (0, 3, 4)]),
    "P6": (6, [(0, 1, 2)]),
    "F7": (7, _FANO_LINES),
    "F7m": (7, _FANO_LINES[:6]),                       # drop line {1,3,5}
    "F7mm": (7, [(0, 1, 2), (2, 3, 4), (0, 4, 5), (1, 4, 6), (2, 5, 6)]),
    "MK4pe": (7, [(0, 1, 2), (0, 4, 5), (1, 4, 6), (2, 5, 6)]),
    "F7m3": (7, [(0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 3, 6)]),
    "F7m4": (7, [(0, 1, 2), (0, 4, 5), (0, 3, 6)]),
    "W3pe": (7, [(0, 1, 2), (2, 3, 4), (0, 4, 5)]),
    "F7m5": (7, [(0, 1, 2), (0, 4, 5)]),
    "F7m6": (7, [(0, 1, 2)]),
    "P7": (7, [(2, 3, 4), (0, 3, 6), (1, 5, 6), (0, 1, 2), (0, 4, 5)]),
    "P7p": (7, [(0, 1, 2), (2, 3, 4), (0, 4, 5), (1, 5, 6)]),
    "P7pp": (7, [(0, 1, 2), (2, 3, 4), (1, 5, 6)]),
    "P7ppp": (7, [(2, 3, 4), (1, 5, 6)]),
    "Q7": (7, [(0, 1, 2), (0, 3, 4, 5)]),
    "S7": (7, [(0, 1, 2, 3)]),
    "MK4plus": (7, [(0, 1, 2, 6), (0, 4, 5), (2, 3, 5), (1, 3, 4)]),
    "W3plus": (7, [(0, 1, 2, 6), (2, 3, 4), (0, 4, 5)]),
    "Pappus": (9, [(0, 1, 2), (3, 4, 5), (1, 3, 6), (2, 4, 8), (2, 3, 7),
                   (0, 5, 7), (0, 4, 6), (1, 5, 8), (6, 7, 8)]),
    "NonPappus": (9, [(0, 1, 2), (3, 4, 5), (1, 3, 6), (2, 4, 8), (2, 3, 7),
                      (0, 5, 7), (0, 4, 6), (1, 5, 8)]),
    "NonPappus_del1": (8, [(2, 3, 4), (0, 2, 5), (1, 3, 7), (1, 2, 6), (0, 4, 7)]),
    "NonPappus_del9": (8, [(0, 1, 2), (3, 4, 5), (1, 3, 6), (2, 3, 7), (0, 5, 7), (0, 4, 6)]),
    "NonPappus_del9_pe": (9, [(0, 1, 2), (3, 4, 5), (1, 3, 6), (2, 3, 7), (0, 5, 7), (0, 4, 6)]),
}

_P8_NONBASES = [
    (0, 1, 2, 7), (0, 1, 3, 6), (0, 2, 3, 5), (1, 2, 3, 4), (0, 3, 4, 7),
    (1, 2, 5, 6), (0, 4, 5, 6), (1, 4, 5, 7), (2, 4, 6, 7), (3, 5, 6, 7),
]

_V8_NONBASES = [(0, 1, 2, 3), (0, 1, 4, 5), (2, 3, 4, 5), (2, 3, 6, 7), (4, 5, 6, 7)]

# half-plane-property / niceness status; None = open
_STATUS: dict[str, dict] = {
    "MK4":     dict(hpp=True,  nice=False, conice=False, note="graphic; not transversal"),
    "W3":      dict(hpp=True,  nice=False, conice=False, note="unimodular-representable over C"),
    "Q6":      dict(hpp=True,  nice=True,  conice=True),
    "P6":      dict(hpp=True,  nice=True,  conice=True),
    "F7":      dict(hpp=False, nice=False, conice=False),
    "F7m":     dict(hpp=False, nice=False, conice=False),
    "F7mm":    dict(hpp=False, nice=False, conice=False),
    "MK4pe":   dict(hpp=False, nice=False, conice=False),
    "F7m3":    dict(hpp=False, nice=False, conice=False),
    "F7m4":    dict(hpp=None,  nice=False, conice=False),
    "W3pe":    dict(hpp=None,  nice=False, conice=False),
    "F7m5":    dict(hpp=True,  nice=False, conice=True),
    "F7m6":    dict(hpp=True,  nice=True,  conice=None),
    "P7":      dict(hpp=True,  nice=False, conice=False, note="unimodular-representable over C"),
    "P7p":     dict(hpp=None,  nice=False, conice=False),
    "P7pp":    dict(hpp=True,  nice=False, conice=True),
    "P7ppp":   dict(hpp=True,  nice=True,  conice=None),
    "Q7":      dict(hpp=True,  nice=True,  conice=False),
    "S7":      dict(hpp=True,  nice=True,  conice=None),
    "MK4plus": dict(hpp=True,  nice=False, conice=False),
    "W3plus":  dict(hpp=None,  nice=False, conice=False),
    "F7m4pe":  dict(hpp=None,  nice=False, conice=False),
    "W3pepf":  dict(hpp=None,  nice=False, conice=False),
    "W3pluspe": dict(hpp=None, nice=False, conice=False),
    "P7ppe":   dict(hpp=None,  nice=False, conice=False),
    "P8":      dict(hpp=False, nice=False, conice=False),
    "P8p":     dict(hpp=False, nice=False, conice=False),
    "P8pp":    dict(hpp=False, nice=False, conice=False),
    "V8":      dict(hpp=None,  nice=False, conice=False),
    "Pappus":  dict(hpp=False, nice=False, conice=False),
    "NonPappus": dict(hpp=False, nice=False, conice=False),
    "NonPappus_del1": dict(hpp=None, nice=False, conice=False),
    "NonPappus_del9": dict(hpp=None, nice=False, conice=False),
    "NonPappus_del9_pe": dict(hpp=False, nice=False, conice=False),
}

_FAMILY_RE = re.compile(
    r"""^(?P<kind>[UCDEFLMN])_\{(?P<args>[-0-9,;]+)\}$""", re.VERBOSE
)


def _family_lines(kind: str, parts: list[int], nprime: int):
    """Line layout for the rank-3 point/line families; returns (n, lines)."""
    if kind == "L":
        lines = []
        off = 0
        for size in parts:
            lines.append(tuple(range(off, off + size)))
            off += size
        return off + nprime, lines
    if kind == "D":
        n1, n2 = parts
        l1 = (0,) + tuple(range(1, n1))
        l2 = (0,) + tuple(range(n1, n1 + n2 - 1))
        return n1 + n2 - 1 + nprime, [l1, l2]
    if kind == "C":
        n1, n2, n3 = parts
        # simplex vertices 0,1,2; line12 has n1 points, line23 n2, line31 n3
        nxt = 3
        lines = []
        for (a, b), size in zip([(0, 1), (1, 2), (2, 0)], (n1, n2, n3)):
            inner = tuple(range(nxt, nxt + size - 2))
            nxt += size - 2
            lines.append((a, b) + inner)
        return nxt + nprime, lines
    if kind == "E":
        n1, n2, n3 = parts
        middle = tuple(range(n2))
        l1 = (0,) + tuple(range(n2, n2 + n1 - 1))
        l3 = (1,) + tuple(range(n2 + n1 - 1, n2 + n1 + n3 - 2))
        return n2 + n1 + n3 - 2 + nprime, [middle, l1, l3]
    if kind == "F":
        n1, n2, n3 = parts
        l1 = (0,) + tuple(range(1, n1))
        l2 = (0,) + tuple(range(n1, n1 + n2 - 1))
        l3 = tuple(range(n1 + n2 - 1, n1 + n2 - 1 + n3))
        return n1 + n2 - 1 + n3 + nprime, [l1, l2, l3]
    raise ValueError(f"unknown family {kind}")


def _parse_family(name: str) -> Matroid | None:
    m = _FAMILY_RE.match(name)
    if not m:
        return None
    kind = m.group("kind")
    args = m.group("args")
    if ";" in args:
        head, tail = args.split(";")
        nprime = int(tail)
    else:
        head, nprime = args, 0
    parts = [int(v) for v in head.split(",") if v != ""]
    if kind == "U":
        if len(parts) != 2:
            raise ValueError(f"bad uniform matroid name {name}")
        return uniform_matroid(*parts)
    if kind == "M":
        n1, n2 = parts
        if min(n1, n2) < 2:
            raise ValueError("M family needs both line sizes >= 2")
        n = n1 + n2 + 2
        l1 = tuple(range(0, n1 + 1))
        l2 = (0,) + tuple(range(n1 + 1, n1 + n2 + 1))
        return rank3_from_lines(n, [l1, l2])
    if kind == "N":
        (k,) = parts
        if k < 1:
            raise ValueError("N family needs k >= 1")
        n = 2 * k + 1
        a0 = sorted({0, 1} | {j for j in range(3, 2 * k - 1, 2)} | {2 * k - 1, 2 * k})
        sets = [a0] + [[2 * j - 2, 2 * j - 1, 2 * j] for j in range(1, k + 1)]
        return transversal_matroid(Presentation.from_sets(n, sets))
    n, lines = _family_lines(kind, parts, nprime)
    return rank3_from_lines(n, lines)


def catalog(name: str) -> Matroid:
    """Fetch a catalog matroid by name (see catalog_names())."""
    if name in _LINE_TABLES:
        n, lines = _LINE_TABLES[name]
        return rank3_from_lines(n, lines)
    if name == "P8":
        return from_nonbases(8, 4, _P8_NONBASES)
    if name == "P8p":
        return catalog("P8").relax((0, 3, 4, 7))
    if name == "P8pp":
        return catalog("P8p").relax((1, 2, 5, 6))
    if name == "V8":
        return from_nonbases(8, 4, _V8_NONBASES)
    if name == "F7m4pe":
        return catalog("F7m4").free_extension()
    if name == "W3pepf":
        return catalog("W3pe").free_extension()
    if name == "W3pluspe":
        return catalog("W3plus").free_extension()
    if name == "P7ppe":
        return catalog("P7p").free_extension()
    if name == "Q7del7":
        return catalog("Q7").delete([6])
    if name == "K4":
        return graphic_matroid(complete_graph(4))
    fam = _parse_family(name)
    if fam is not None:
        return fam
    raise KeyError(f"unknown catalog name: {name}")


def catalog_names() -> list[str]:
    """All fixed catalog names (parametric families are name patterns)."""
    fixed = list(_LINE_TABLES) + [
        "P8", "P8p", "P8pp", "V8", "F7m4pe", "W3pepf", "W3pluspe", "P7ppe", "Q7del7", "K4",
    ]
    return sorted(fixed)


def family_patterns() -> list[str]:
    return [
        "U_{r,n}", "L_{n1,n2,n3;n'}", "L_{n1,n2;n'}", "L_{n1;n'}",
        "C_{n1,n2,n3;n'}", "D_{n1,n2;n'}", "E_{n1,n2,n3;n'}",
        "F_{n1,n2,n3;n'}", "M_{n1,n2}", "N_{k}",
    ]


def catalog_manifest() -> dict:
    """Machine-readable catalog: definitions plus known status flags."""
    out = {}
    for name, (n, lines) in _LINE_TABLES.items():
        out[name] = {
            "n": n,
            "rank": 3,
            "lines": [list(line) for line in lines],
            "status": _STATUS.get(name, {}),
        }
    out["P8"] = {"n": 8, "rank": 4, "nonbases": [list(s) for s in _P8_NONBASES],
                 "status": _STATUS["P8"]}
    out["P8p"] = {"n": 8, "rank": 4, "relax_of": "P8", "relaxed": [0, 3, 4, 7],
                  "status": _STATUS["P8p"]}
    out["P8pp"] = {"n": 8, "rank": 4, "relax_of": "P8p", "relaxed": [1, 2, 5, 6],
                   "status": _STATUS["P8pp"]}
    out["V8"] = {"n": 8, "rank": 4, "nonbases": [list(s) for s in _V8_NONBASES],
                 "status": _STATUS["V8"]}
    for name, base in [("F7m4pe", "F7m4"), ("W3pepf", "W3pe"),
                       ("W3pluspe", "W3plus"), ("P7ppe", "P7p")]:
        out[name] = {"free_extension_of": base, "status": _STATUS[name]}
    out["families"] = family_patterns()
    return out


def presentation_of(name: str) -> Presentation:
    """Known transversal presentations used by the weight-verification demos."""
    if name == "W3":
        return Presentation.from_sets(6, [(3, 4, 5), (0, 1, 5), (1, 2, 3)])
    if name == "Q6":
        # two 3-point lines through 0 plus the free point 5
        return Presentation.from_sets(6, [(0, 1, 2, 3, 4), (1, 2, 5), (3, 4, 5)])
    m = re.match(r"^M_\{(\d+),(\d+)\}$", name)
    if m:
        n1, n2 = int(m.group(1)), int(m.group(2))
        n = n1 + n2 + 2
        ax = tuple(range(0, n1 + n2 + 1))
        ay = tuple(range(1, n1 + 1)) + (n1 + n2 + 1,)
        az = tuple(range(n1 + 1, n1 + n2 + 1)) + (n1 + n2 + 1,)
        return Presentation.from_sets(n, [ax, ay, az])
    m = re.match(r"^L_\{(\d+),(\d+),(\d+)\}$", name)
    if m:
        sizes = [int(m.group(i)) for i in (1, 2, 3)]
        n = sum(sizes)
        off = [0, sizes[0], sizes[0] + sizes[1]]
        lines = [set(range(off[i], off[i] + sizes[i])) for i in range(3)]
        sets = [sorted(set(range(n)) - line) for line in lines]
        return Presentation.from_sets(n, sets)
    m = re.match(r"^U_\{(\d+),(\d+)\}$", name)
    if m:
        r, n = int(m.group(1)), int(m.group(2))
        return Presentation.from_sets(n, [tuple(range(n))] * r)
    raise KeyError(f"no stock presentation for {name}")
