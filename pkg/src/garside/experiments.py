"""Exhaustive class statistics for elements of summit canonical length 1.

For a structure on B_n and a Delta power i, every element Delta^i s with
s a simple element other than 1 and Delta is examined; those whose class
has summit infimum i and summit canonical length 1 are grouped into
conjugacy classes, and per class the sizes of the super summit set and
of the set of sliding circuits are recorded.

At canonical length 1 the super summit set consists entirely of elements
Delta^i t, so classes can be enumerated by marking off simples as their
classes are computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .circuits import Budgets, compute_sss, sliding_circuit_set
from .core import GarsideElement, GarsideStructure, delta_power, from_simple, multiply
from .sliding import slide_to_circuit


@dataclass(frozen=True)
class ClassStatistics:
    """One conjugacy class: its canonical representative and set sizes."""

    representative: GarsideElement
    sss_size: int
    sc_size: int

    @property
    def ratio(self) -> float:
        return self.sss_size / self.sc_size


@dataclass(frozen=True)
class StatisticsRow:
    """One table row: aggregate statistics over all classes of one (n, i)."""

    structure: str
    n: int
    i: int
    classes: int
    max_sss: int
    max_sc: int
    max_ratio: float
    cmean_sss: float
    cmean_sc: float
    cmean_ratio: float
    emean_sss: float
    emean_sc: float
    emean_ratio: float


def enumerate_length_one_classes(
    st: GarsideStructure, i: int = 0, budgets: Budgets | None = None
) -> list:
    """All conjugacy classes with summit infimum i and summit canonical
    length 1, as ClassStatistics sorted by class representative."""
    budgets = budgets or Budgets()
    results = []
    assigned: set = set()
    for s in st.simples():
        if st.is_trivial(s) or st.is_delta(s):
            continue
        x = multiply(delta_power(st, i), from_simple(st, s))
        if x in assigned:
            continue
        rep, _, _ = slide_to_circuit(x, budgets.max_trajectory_states)
        if rep.inf != i or rep.canonical_length != 1:
            continue
        sss = compute_sss(x, budgets)
        sc = sliding_circuit_set(x, budgets)
        assigned.update(sss)
        representative = min(sc, key=lambda v: v.sort_key())
        results.append(ClassStatistics(representative, len(sss), len(sc)))
    results.sort(key=lambda c: c.representative.sort_key())
    return results


def statistics_row(
    structure_label: str, n: int, i: int, classes: list
) -> StatisticsRow:
    """Aggregate a class list; element means weight each class by its
    super-summit-set size."""
    k = len(classes)
    total_sss = sum(c.sss_size for c in classes)
    return StatisticsRow(
        structure=structure_label,
        n=n,
        i=i,
        classes=k,
        max_sss=max(c.sss_size for c in classes),
        max_sc=max(c.sc_size for c in classes),
        max_ratio=max(c.ratio for c in classes),
        cmean_sss=sum(c.sss_size for c in classes) / k,
        cmean_sc=sum(c.sc_size for c in classes) / k,
        cmean_ratio=sum(c.ratio for c in classes) / k,
        emean_sss=sum(c.sss_size * c.sss_size for c in classes) / total_sss,
        emean_sc=sum(c.sss_size * c.sc_size for c in classes) / total_sss,
        emean_ratio=sum(c.sss_size * c.ratio for c in classes) / total_sss,
    )


CSV_HEADER = (
    "structure,n,i,classes,max_sss,max_sc,max_ratio,"
    "cmean_sss,cmean_sc,cmean_ratio,emean_sss,emean_sc,emean_ratio"
)


def _fmt(v) -> str:
    """Numbers to 6 significant digits, integers without a decimal point."""
    if isinstance(v, int):
        return str(v)
    return format(v, ".6g")


def row_to_csv(row: StatisticsRow) -> str:
    return ",".join(
        [
            row.structure,
            str(row.n),
            str(row.i),
            str(row.classes),
            str(row.max_sss),
            str(row.max_sc),
            _fmt(row.max_ratio),
            _fmt(row.cmean_sss),
            _fmt(row.cmean_sc),
            _fmt(row.cmean_ratio),
            _fmt(row.emean_sss),
            _fmt(row.emean_sc),
            _fmt(row.emean_ratio),
        ]
    )


def emit_csv(rows: list) -> str:
    return "\n".join([CSV_HEADER] + [row_to_csv(r) for r in rows]) + "\n"


def emit_json(rows: list) -> str:
    out = []
    for r in rows:
        d = {"structure": r.structure, "n": r.n, "i": r.i, "classes": r.classes,
             "max_sss": r.max_sss, "max_sc": r.max_sc}
        for name in ("max_ratio", "cmean_sss", "cmean_sc", "cmean_ratio",
                     "emean_sss", "emean_sc", "emean_ratio"):
            d[name] = float(_fmt(getattr(r, name)))
        out.append(d)
    return json.dumps(out, indent=2) + "\n"
