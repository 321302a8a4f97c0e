"""Multiplication tables of the one-generated nilpotent Novikov algebras of dimension 1 to 6.

Each family lists its parameters, the polynomials that must not vanish
(``nonzero``), a default generic sample and the table body in the text
format of :mod:`novikov_lab.dsl` (the ``dim`` line is added on load).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class FamilyData:
    id: str
    dim: int
    params: tuple[str, ...]
    table: str
    default: tuple = ()
    nonzero: tuple[str, ...] = ()
    note: str = ""


def _f(id, dim, table, params=(), default=(), nonzero=(), note=""):
    rows = "\n".join(line.strip() for line in table.strip().splitlines())
    return FamilyData(id, dim, tuple(params), rows, tuple(default), tuple(nonzero), note)


_N5_07 = """
e1*e1 = e2
e1*e2 = e3
e1*e3 = (2-lambda) e4
e1*e4 = (3-2*lambda) e5
e2*e1 = lambda e3
e2*e2 = lambda e4
e2*e3 = (lambda*(2-lambda)) e5
e3*e1 = lambda e4
e3*e2 = lambda e5
e4*e1 = lambda e5
"""

_N5_12 = """
e1*e1 = e2
e1*e2 = e3
e1*e3 = 2 e4
e1*e4 = (2*lambda+1) e5
e2*e1 = e4
e2*e2 = lambda e5
e2*e3 = -2 e5
e3*e1 = lambda e5
e3*e2 = 2 e5
e4*e1 = -e5
"""

_N5_13 = """
e1*e1 = e2
e1*e2 = e3
e1*e3 = e4 - 2 e5
e1*e4 = e5
e2*e1 = e3 + e4 + lambda e5
e2*e2 = e4
e2*e3 = e5
e3*e1 = e4
e3*e2 = e5
e4*e1 = e5
"""

_N6_20 = """
e1*e1 = e2
e1*e2 = e3
e1*e3 = lambda e5
e1*e4 = mu e5
e1*e5 = (2*mu-1) e6
e2*e1 = e4
e2*e2 = e5
e2*e3 = (lambda*(2-mu)) e6
e2*e4 = (mu*(2-mu)) e6
e3*e1 = e5
e4*e1 = (2-mu) e5
e3*e2 = (3-(lambda+1)*(2-mu)) e6
e4*e2 = (2-mu) e6
e5*e1 = (2-mu) e6
"""

_N6_22 = """
e1*e1 = e2
e1*e2 = e3
e1*e3 = lambda e5
e1*e4 = e5 + e6
e1*e5 = e6
e2*e1 = e4
e2*e2 = e5
e2*e3 = lambda e6
e2*e4 = e6
e3*e1 = e5
e4*e1 = e5 - e6
e3*e2 = (2-lambda) e6
e4*e2 = e6
e5*e1 = e6
"""

_N6_25 = """
e1*e1 = e2
e1*e2 = e3
e1*e3 = e5
e1*e4 = lambda e5
e1*e5 = -2 e6
e2*e1 = e4
e2*e3 = e6
e2*e4 = lambda e6
e3*e2 = -e6
e4*e1 = -lambda e5
e5*e1 = e6
"""

_N6_29_EXTRA = """
e1*e5 = (4-3*lambda) e6
e2*e4 = (lambda*(3-2*lambda)) e6
e3*e3 = (lambda*(2-lambda)) e6
e4*e2 = lambda e6
e5*e1 = lambda e6
"""


def _replace(table: str, old: str, new: str) -> str:
    assert old in table, old
    return table.replace(old, new)


FAMILIES: tuple[FamilyData, ...] = (
    _f("N1_01", 1, ""),
    _f("N2_01", 2, "e1*e1 = e2"),
    _f("N3_01", 3, "e1*e1 = e2\ne2*e1 = e3"),
    _f("N3_02", 3, "e1*e1 = e2\ne1*e2 = e3\ne2*e1 = lambda e3", ["lambda"], ["2"]),
    _f("N4_01", 4, "e1*e1 = e2\ne1*e2 = e3\ne2*e1 = e4"),
    _f("N4_02", 4, "e1*e1 = e2\ne2*e1 = e3\ne1*e3 = e4\ne3*e1 = -e4"),
    _f(
        "N4_03",
        4,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = (2-lambda) e4
        e2*e1 = lambda e3
        e2*e2 = lambda e4
        e3*e1 = lambda e4
        """,
        ["lambda"],
        ["-1"],
    ),
    _f("N4_04", 4, "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = 2 e4\ne2*e1 = e4"),
    _f(
        "N4_05",
        4,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4
        e2*e1 = e3 + e4
        e2*e2 = e4
        e3*e1 = e4
        """,
    ),
    # dimension 5
    _f("N5_01", 5, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = e5\ne2*e1 = e3\ne3*e1 = -e5"),
    _f(
        "N5_02",
        5,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = (2-lambda) e5
        e2*e1 = lambda e3 + e4
        e2*e2 = lambda e5
        e3*e1 = lambda e5
        """,
        ["lambda"],
        ["2"],
    ),
    _f(
        "N5_03",
        5,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = lambda e5
        e1*e4 = mu e5
        e2*e1 = e4
        e2*e2 = e5
        e3*e1 = e5
        e4*e1 = (2-mu) e5
        """,
        ["lambda", "mu"],
        ["2", "3"],
    ),
    _f(
        "N5_04",
        5,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e5\ne1*e4 = lambda e5\ne2*e1 = e4\ne4*e1 = -lambda e5",
        ["lambda"],
        ["2"],
        ["lambda"],
    ),
    _f(
        "N5_05",
        5,
        """
        e1*e1 = e2
        e1*e3 = e4
        e1*e4 = 2 e5
        e2*e1 = e3
        e2*e3 = -e5
        e3*e1 = -e4
        e4*e1 = -e5
        """,
    ),
    _f(
        "N5_06",
        5,
        """
        e1*e1 = e2
        e1*e2 = e5
        e1*e3 = e4
        e1*e4 = 2 e5
        e2*e1 = e3
        e2*e3 = -e5
        e3*e1 = -e4
        e4*e1 = -e5
        """,
    ),
    _f("N5_07", 5, _N5_07, ["lambda"], ["-1"]),
    _f("N5_08", 5, "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne1*e4 = e5\ne2*e1 = e5"),
    _f(
        "N5_09",
        5,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4
        e1*e4 = lambda e5
        e2*e3 = 2 e5
        e3*e2 = -2 e5
        e4*e1 = e5
        """,
        ["lambda"],
        ["2"],
    ),
    _f(
        "N5_10",
        5,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4
        e1*e4 = e5
        e2*e1 = e3 + e5
        e2*e2 = e4
        e2*e3 = e5
        e3*e1 = e4
        e3*e2 = e5
        e4*e1 = e5
        """,
    ),
    _f(
        "N5_11",
        5,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4 + lambda e5
        e1*e4 = 2 e5
        e2*e1 = e4
        e2*e2 = e5
        e3*e1 = e5
        """,
        ["lambda"],
        ["2"],
    ),
    _f("N5_12", 5, _N5_12, ["lambda"], ["2"]),
    _f("N5_13", 5, _N5_13, ["lambda"], ["2"]),
    # dimension 6
    _f(
        "N6_01",
        6,
        "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e5\ne1*e4 = e6\ne2*e1 = e4\ne4*e1 = -e6",
    ),
    _f(
        "N6_02",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e5
        e1*e4 = lambda e6
        e2*e1 = e4
        e2*e2 = e6
        e3*e1 = e6
        e4*e1 = (2-lambda) e6
        """,
        ["lambda"],
        ["3"],
    ),
    _f(
        "N6_03",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = lambda e5 + mu e6
        e1*e4 = e5
        e2*e1 = e4
        e2*e2 = e6
        e3*e1 = e6
        e4*e1 = -e5 + 2 e6
        """,
        ["lambda", "mu"],
        ["2", "3"],
    ),
    _f(
        "N6_04",
        6,
        """
        e1*e1 = e2
        e1*e2 = e5
        e1*e3 = e4
        e1*e4 = 2 e6
        e2*e1 = e3
        e2*e3 = -e6
        e3*e1 = -e4
        e4*e1 = -e6
        """,
    ),
    _f(
        "N6_05",
        6,
        _replace(_N5_07, "e2*e1 = lambda e3", "e2*e1 = lambda e3 + e6"),
        ["lambda"],
        ["-1"],
    ),
    _f(
        "N6_06",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4
        e1*e4 = lambda e5
        e2*e1 = e6
        e2*e3 = 2 e5
        e3*e2 = -2 e5
        e4*e1 = e5
        """,
        ["lambda"],
        ["2"],
    ),
    _f(
        "N6_07",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4
        e1*e4 = e5
        e2*e1 = e5
        e2*e3 = 2 e6
        e3*e2 = -2 e6
        e4*e1 = e6
        """,
    ),
    _f(
        "N6_08",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4
        e1*e4 = e5
        e2*e3 = 2 e6
        e3*e2 = -2 e6
        e4*e1 = e6
        """,
    ),
    _f(
        "N6_09",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4 + e6
        e1*e4 = 2 e5
        e2*e1 = e4
        e2*e2 = e5
        e3*e1 = e5
        """,
    ),
    _f("N6_10", 6, _replace(_N5_12, "e1*e3 = 2 e4", "e1*e3 = 2 e4 + e6"), ["lambda"], ["2"]),
    _f(
        "N6_11",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4 + lambda e6
        e1*e4 = e5 + 2 e6
        e2*e1 = e4
        e2*e2 = e6
        e2*e3 = -2 e5
        e3*e1 = e6
        e3*e2 = 2 e5
        e4*e1 = -e5
        """,
        ["lambda"],
        ["2"],
    ),
    _f("N6_12", 6, _replace(_N5_13, "e2*e1 = e3 + e4 + lambda e5", "e2*e1 = e3 + e4 + e6")),
    _f(
        "N6_13",
        6,
        """
        e1*e1 = e2
        e1*e2 = e4
        e1*e3 = e5
        e1*e4 = e6
        e1*e5 = 2 e6
        e2*e1 = e3
        e2*e3 = -e6
        e3*e1 = -e5
        e5*e1 = -e6
        """,
    ),
    _f(
        "N6_14",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e5 + e6
        e1*e4 = alpha e6
        e1*e5 = e6
        e2*e1 = e3 + e4
        e2*e2 = e5
        e2*e3 = e6
        e3*e1 = e5
        e3*e2 = e6
        e4*e1 = (-(alpha+1)) e6
        e5*e1 = e6
        """,
        ["alpha"],
        ["2"],
    ),
    _f(
        "N6_15",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = -e5 + e6
        e1*e5 = -3 e6
        e2*e1 = 3 e3 + e4
        e2*e2 = 3 e5
        e2*e3 = -3 e6
        e3*e1 = 3 e5
        e3*e2 = 3 e6
        e4*e1 = -3 e6
        e5*e1 = 3 e6
        """,
    ),
    _f(
        "N6_16",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = (2-lambda) e5
        e1*e4 = e6
        e1*e5 = (3-2*lambda) e6
        e2*e1 = lambda e3 + e4
        e2*e2 = lambda e5
        e2*e3 = (lambda*(2-lambda)) e6
        e3*e1 = lambda e5
        e3*e2 = lambda e6
        e4*e1 = -e6
        e5*e1 = lambda e6
        """,
        ["lambda"],
        ["2"],
        ["3-lambda"],
    ),
    _f(
        "N6_17",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e5
        e1*e4 = e6
        e1*e5 = alpha e6
        e2*e1 = e4
        e2*e3 = 2 e6
        e3*e2 = -2 e6
        e4*e1 = -e6
        e5*e1 = e6
        """,
        ["alpha"],
        ["2"],
        note="printed table also lists e3*e1 = e6, which breaks right-commutativity; "
        "the extension of N5_02(0) by Delta14 - Delta41 + alpha Delta15 + 2 Delta23 - 2 Delta32 + Delta51 has no such product",
    ),
    _f(
        "N6_18",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e5
        e1*e4 = (alpha+2) e6
        e1*e5 = e6
        e2*e1 = e4
        e2*e2 = e6
        e3*e1 = e6
        e4*e1 = -alpha e6
        """,
        ["alpha"],
        ["2"],
    ),
    _f(
        "N6_19",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e5
        e1*e4 = (alpha+2) e6
        e1*e5 = beta e6
        e2*e1 = e4
        e2*e2 = e6
        e2*e3 = 2 e6
        e3*e1 = e6
        e3*e2 = -2 e6
        e4*e1 = -alpha e6
        e5*e1 = e6
        """,
        ["alpha", "beta"],
        ["2", "3"],
    ),
    _f("N6_20", 6, _N6_20, ["lambda", "mu"], ["2", "3"]),
    _f(
        "N6_21",
        6,
        _replace(_N6_20, "e1*e3 = lambda e5", "e1*e3 = lambda e5 + e6"),
        ["lambda", "mu"],
        ["2", "3"],
        ["2-mu"],
    ),
    _f("N6_22", 6, _N6_22, ["lambda"], ["2"]),
    _f(
        "N6_23",
        6,
        _replace(
            _replace(_replace(_N6_22, "e1*e3 = lambda e5", "e1*e3 = e5 + nu e6"), "e2*e3 = lambda e6", "e2*e3 = e6"),
            "e3*e2 = (2-lambda) e6",
            "e3*e2 = e6",
        ),
        ["nu"],
        ["3"],
        ["nu"],
    ),
    _f(
        "N6_24",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = lambda e5
        e1*e4 = 2 e5 + e6
        e1*e5 = e6
        e2*e1 = e4
        e2*e2 = e5
        e3*e1 = e5
        e3*e2 = e6
        e4*e1 = -e6
        """,
        ["lambda"],
        ["2"],
        note="printed table lacks e4*e1 = -e6, without which left-symmetry fails on (1, 2, 1)",
    ),
    _f("N6_25", 6, _N6_25, ["lambda"], ["2"], ["lambda"]),
    _f(
        "N6_26",
        6,
        _replace(
            _replace(_N6_25, "e1*e4 = lambda e5", "e1*e4 = lambda e5 + e6"),
            "e4*e1 = -lambda e5",
            "e4*e1 = -lambda e5 - e6",
        ),
        ["lambda"],
        ["2"],
        ["lambda"],
    ),
    _f(
        "N6_27",
        6,
        """
        e1*e1 = e2
        e1*e3 = e4
        e1*e4 = 2 e5
        e1*e5 = 3 e6
        e2*e1 = e3
        e2*e3 = -e5
        e2*e4 = -2 e6
        e3*e1 = -e4
        e3*e3 = e6
        e4*e1 = -e5
        e5*e1 = -e6
        """,
    ),
    _f(
        "N6_28",
        6,
        """
        e1*e1 = e2
        e1*e2 = e5
        e1*e3 = e4
        e1*e4 = 2 e5
        e1*e5 = 3 e6
        e2*e1 = e3
        e2*e2 = -e6
        e2*e3 = -e5
        e2*e4 = -2 e6
        e3*e1 = -e4 - 2 e6
        e3*e3 = e6
        e4*e1 = -e5
        e5*e1 = -e6
        """,
    ),
    _f("N6_29", 6, _N5_07 + _N6_29_EXTRA, ["lambda"], ["-1"]),
    _f(
        "N6_30",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e4 = -e5
        e1*e5 = -2 e6
        e2*e1 = 2 e3 + e6
        e2*e2 = 2 e4
        e2*e4 = -2 e6
        e3*e1 = 2 e4
        e3*e2 = 2 e5
        e4*e1 = 2 e5
        e4*e2 = 2 e6
        e5*e1 = 2 e6
        """,
        note="printed table has e2*e4 = -e6; right-commutativity on (1, 1, 4) forces -2 e6",
    ),
    _f(
        "N6_31",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4
        e1*e4 = 3 e5
        e1*e5 = e6
        e2*e3 = 2 e6
        e3*e2 = -2 e6
        e4*e1 = e6
        """,
    ),
    _f("N6_32", 6, "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = 2 e4\ne1*e4 = 3 e5\ne1*e5 = e6\ne2*e1 = e6"),
    _f(
        "N6_33",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4
        e1*e4 = e5
        e1*e5 = e6
        e2*e1 = e3 + e6
        e2*e2 = e4
        e2*e3 = e5
        e2*e4 = e6
        e3*e1 = e4
        e3*e2 = e5
        e3*e3 = e6
        e4*e1 = e5
        e4*e2 = e6
        e5*e1 = e6
        """,
    ),
    _f(
        "N6_34",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4
        e1*e4 = e5
        e1*e5 = 2 e6
        e2*e1 = e5 + lambda e6
        e2*e2 = e6
        e3*e1 = e6
        """,
        ["lambda"],
        ["2"],
    ),
    _f(
        "N6_35",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4
        e1*e4 = e5
        e1*e5 = 2 e6
        e2*e1 = e5
        e2*e2 = e6
        e2*e3 = lambda e6
        e3*e1 = e6
        e3*e2 = -lambda e6
        e4*e1 = lambda e6
        """,
        ["lambda"],
        ["2"],
        ["lambda"],
    ),
    _f(
        "N6_36",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4 - 2 e6
        e1*e4 = e5
        e1*e5 = e6
        e2*e1 = e3 + e5
        e2*e2 = e4
        e2*e3 = e5
        e2*e4 = e6
        e3*e1 = e4
        e3*e2 = e5
        e3*e3 = e6
        e4*e1 = e5
        e4*e2 = e6
        e5*e1 = e6
        """,
    ),
    _f(
        "N6_37",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = 2 e4 + lambda e5
        e1*e4 = 2 e5 + mu e6
        e1*e5 = e6
        e2*e1 = e4
        e2*e2 = e5
        e2*e3 = (-2*mu) e6
        e3*e1 = e5
        e3*e2 = (1+2*mu) e6
        e4*e1 = -mu e6
        """,
        ["lambda", "mu"],
        ["2", "3"],
    ),
    _f(
        "N6_38",
        6,
        """
        e1*e1 = e2
        e1*e2 = e3
        e1*e3 = e4 - 2 e5 + (1-2*lambda) e6
        e1*e4 = e5 - 2 e6
        e1*e5 = e6
        e2*e1 = e3 + e4 + lambda e5
        e2*e2 = e4
        e2*e3 = e5 - e6
        e2*e4 = e6
        e3*e1 = e4
        e3*e2 = e5
        e3*e3 = e6
        e4*e1 = e5 + e6
        e4*e2 = e6
        e5*e1 = e6
        """,
        ["lambda"],
        ["2"],
    ),
)


@dataclass(frozen=True)
class TemplateData:
    """Automorphism family (row-major, columns are images of e1, e2, ...) and its alpha* formulas."""

    rows: tuple[tuple[str, ...], ...]
    variables: tuple[str, ...]
    formula: tuple[str, ...]
    nonzero: tuple[str, ...] = ()
    printed: tuple[str, ...] = ()  # the published formula when it disagrees with ``formula``


@dataclass(frozen=True)
class BaseCaseData:
    """Cocycle classes and automorphisms of a family member used as an extension base.

    ``fixed`` pins parameters (e.g. lambda = 0); ``nonzero`` restricts the rest.
    """

    id: str
    family: str
    nablas: tuple[str, ...]
    templates: tuple[TemplateData, ...]
    fixed: tuple[tuple[str, str], ...] = ()
    nonzero: tuple[str, ...] = ()


def _t(rows, variables, formula, nonzero=("x",), printed=()):
    grid = tuple(tuple(c.strip() for c in r.split(",")) for r in rows)
    return TemplateData(grid, tuple(variables.split()), tuple(formula), tuple(nonzero), tuple(printed))


BASE_CASES: tuple[BaseCaseData, ...] = (
    BaseCaseData(
        "N4_01",
        "N4_01",
        ("D13", "D14 - D41", "D22 + D31 + 2 D41"),
        (
            _t(
                ["x, 0, 0, 0", "y, x^2, 0, 0", "z, x*y, x^3, 0", "v, x*y, 0, x^3"],
                "x y z v",
                ["x^4*alpha1", "x^4*alpha2", "x^4*alpha3"],
            ),
        ),
    ),
    BaseCaseData(
        "N4_02",
        "N4_02",
        ("D12", "2 D14 - D23 - D41"),
        (
            _t(
                ["x, 0, 0, 0", "0, x^2, 0, 0", "y, 0, x^3, 0", "z, 0, 0, x^4"],
                "x y z",
                ["x^3*alpha1", "x^5*alpha2"],
            ),
        ),
    ),
    BaseCaseData(
        "N4_03",
        "N4_03",
        ("D21", "(3-2*lambda) D14 + (lambda*(2-lambda)) D23 + lambda D32 + lambda D41"),
        (
            _t(
                ["x, 0, 0, 0", "0, x^2, 0, 0", "y, 0, x^3, 0", "z, 2*x*y, 0, x^4"],
                "x y z",
                ["x^2*(x*alpha1 + 2*lambda*(lambda-1)*y*alpha2)", "x^5*alpha2"],
            ),
        ),
        nonzero=("lambda*(lambda-1)",),
    ),
    BaseCaseData(
        "N4_03(0)",
        "N4_03",
        ("D14", "D21", "2 D23 - 2 D32 + D41"),
        (
            _t(
                ["x, 0, 0, 0", "y, x^2, 0, 0", "z, x*y, x^3, 0", "t, 2*x*z, 2*x^2*y, x^4"],
                "x y z t",
                ["x^5*alpha1", "x^3*alpha2 + (4*x^2*z - 2*x*y^2)*alpha3", "x^5*alpha3"],
            ),
        ),
        fixed=(("lambda", "0"),),
    ),
    BaseCaseData(
        "N4_03(1)",
        "N4_03",
        ("D21", "D14 + D23 + D32 + D41"),
        (
            _t(
                ["x, 0, 0, 0", "y, x^2, 0, 0", "z, 2*x*y, x^3, 0", "t, 2*x*z + y^2, 3*x^2*y, x^4"],
                "x y z t",
                ["x^3*alpha1", "x^5*alpha2"],
            ),
        ),
        fixed=(("lambda", "1"),),
    ),
    BaseCaseData(
        "N4_04",
        "N4_04",
        ("D13", "2 D14 + D22 + D31", "D14 - 2 D23 + 2 D32 - D41"),
        (
            _t(
                ["1, 0, 0, 0", "x, 1, 0, 0", "y, x, 1, 0", "z, x + 2*y, 2*x, 1"],
                "x y z",
                ["alpha1 + 2*(x - 2*x^2 + 4*y)*alpha3", "alpha2", "alpha3"],
                (),
            ),
        ),
    ),
    BaseCaseData(
        "N4_05",
        "N4_05",
        ("D21", "-2 D13 + D14 + D23 + D32 + D41"),
        (
            _t(
                ["1, 0, 0, 0", "x, 1, 0, 0", "y, 2*x, 1, 0", "z, x^2 + x + 2*y, 3*x, 1"],
                "x y z",
                ["alpha1", "alpha2"],
                (),
            ),
        ),
    ),
    BaseCaseData(
        "N5_01",
        "N5_01",
        ("D14", "2 D13 + D22 + D41", "2 D15 - D23 - D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, 0, -x^2*y, x^2*y, x^4",
                ],
                "x y z v w",
                ["x^4*alpha1 + 2*x^3*y*alpha3", "x^4*alpha2 - x^3*y*alpha3", "x^5*alpha3"],
            ),
        ),
    ),
    BaseCaseData(
        "N5_02",
        "N5_02",
        ("D14 - D41", "D13 - lambda D41", "(3-2*lambda) D15 + (lambda*(2-lambda)) D23 + lambda D32 + lambda D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, (lambda+1)*x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, lambda*y^2 + 2*x*z, (-lambda^2 + 2*lambda + 2)*x^2*y, lambda^2*(lambda-1)*x^2*y, x^4",
                ],
                "x y z v w",
                [
                    "x^4*alpha1 + x^3*y*lambda^2*(lambda-1)*(3-2*lambda)*alpha3",
                    "x^4*alpha2 + x^3*y*lambda*(lambda-1)*(lambda-3)*alpha3",
                    "x^5*alpha3",
                ],
            ),
        ),
        nonzero=("lambda",),
    ),
    BaseCaseData(
        "N5_02(0)",
        "N5_02",
        ("D14 - D41", "2 D14 + D22 + D31", "D15", "2 D23 - 2 D32 + D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, 2*x*z, 2*x^2*y, 0, x^4",
                ],
                "x y z v w",
                ["x^4*alpha1", "x^4*alpha2", "x^5*alpha3", "x^5*alpha4"],
            ),
        ),
        fixed=(("lambda", "0"),),
    ),
    BaseCaseData(
        "N5_03",
        "N5_03",
        (
            "D13",
            "D14 - D41",
            "(2*mu-1) D15 + (lambda*(2-mu)) D23 + (mu*(2-mu)) D24 + (3-(lambda+1)*(2-mu)) D32"
            " + (2-mu) D42 + (2-mu) D51",
        ),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, (lambda+1)*x*z + 2*x*v + y^2, (lambda+mu+1)*x^2*y, (4-mu)*x^2*y, x^4",
                ],
                "x y z v w",
                [
                    "x^4*alpha1 + x^3*y*alpha3*(mu+1)*(2*mu-1+lambda*(mu-2))",
                    "x^4*alpha2 + x^3*y*alpha3*(mu-1)*(mu-2)^2",
                    "x^5*alpha3",
                ],
            ),
        ),
    ),
    BaseCaseData(
        "N5_04",
        "N5_04",
        ("D14 - D41", "D22 + D31 + 2 D41", "-2 D15 + D23 + lambda D24 - D32 + D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, x*y, 0, x^3, 0",
                    "w, x*z, (lambda+1)*x^2*y, -lambda*x^2*y, x^4",
                ],
                "x y z v w",
                [
                    "x^4*alpha1 + 2*x^3*y*lambda*(lambda+2)*alpha3",
                    "x^4*alpha2 + x^3*y*lambda*alpha3",
                    "x^5*alpha3",
                ],
            ),
        ),
        nonzero=("lambda",),
    ),
    BaseCaseData(
        "N5_05",
        "N5_05",
        ("D12", "3 D15 - 2 D24 + D33 - D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "0, x^2, 0, 0, 0",
                    "y, 0, x^3, 0, 0",
                    "z, 0, 0, x^4, 0",
                    "v, x*z, -x^2*y, 0, x^5",
                ],
                "x y z v",
                ["x^3*alpha1 + 3*x^2*z*alpha2", "x^6*alpha2"],
            ),
        ),
    ),
    BaseCaseData(
        "N5_06",
        "N5_06",
        ("D12", "3 D15 - D22 - 2 D24 - 2 D31 + D33 - D51"),
        (
            _t(
                ["1, 0, 0, 0, 0", "0, 1, 0, 0, 0", "x, 0, 1, 0, 0", "y, 0, 0, 1, 0", "z, y, -x, 0, 1"],
                "x y z",
                ["alpha1 + 3*y*alpha2", "alpha2"],
                (),
            ),
            _t(
                ["-1, 0, 0, 0, 0", "0, 1, 0, 0, 0", "x, 0, -1, 0, 0", "y, 0, 0, 1, 0", "z, -y, -x, 0, -1"],
                "x y z",
                ["-alpha1 + 3*y*alpha2", "alpha2"],
                (),
            ),
        ),
    ),
    BaseCaseData(
        "N5_07",
        "N5_07",
        ("D21", "(4-3*lambda) D15 + (lambda*(3-2*lambda)) D24 + (lambda*(2-lambda)) D33 + lambda D42 + lambda D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "0, x^2, 0, 0, 0",
                    "0, 0, x^3, 0, 0",
                    "y, 0, 0, x^4, 0",
                    "z, (3-lambda)*x*y, 0, 0, x^5",
                ],
                "x y z",
                ["x^3*alpha1 - 3*x^2*y*lambda*(lambda-1)*(lambda-2)*alpha2", "x^6*alpha2"],
            ),
        ),
        nonzero=("lambda*(lambda-1)",),
    ),
    BaseCaseData(
        "N5_07(0)",
        "N5_07",
        ("D15", "D21", "2 D23 - 2 D32 + D41"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, x*y, x^3, 0, 0",
                    "v, 2*x*z, 2*x^2*y, x^4, 0",
                    "w, 3*x*v, 6*x^2*z, 3*x^3*y, x^5",
                ],
                "x y z v w",
                ["x^6*alpha1", "x^3*alpha2 + 2*x*(2*x*z - y^2)*alpha3", "x^5*alpha3"],
            ),
        ),
        fixed=(("lambda", "0"),),
    ),
    BaseCaseData(
        "N5_07(1)",
        "N5_07",
        ("D21", "D15 + D24 + D33 + D42 + D51"),
        (
            _t(
                [
                    "x, 0, 0, 0, 0",
                    "y, x^2, 0, 0, 0",
                    "z, 2*x*y, x^3, 0, 0",
                    "v, 2*x*z + y^2, 3*x^2*y, x^4, 0",
                    "w, 2*x*v + 2*y*z, 3*x^2*z + 3*x*y^2, 4*x^3*y, x^5",
                ],
                "x y z v w",
                ["x^3*alpha1", "x^6*alpha2"],
            ),
        ),
        fixed=(("lambda", "1"),),
    ),
    BaseCaseData(
        "N5_08",
        "N5_08",
        ("D21", "2 D15 + D22 + D31", "D23 - D32 + D41"),
        (
            _t(
                ["1, 0, 0, 0, 0", "x, 1, 0, 0, 0", "y, x, 1, 0, 0", "z, y, x, 1, 0", "v, x + z, y, x, 1"],
                "x y z v",
                ["alpha1 - (x^2 - 2*y)*alpha3", "alpha2", "alpha3"],
                (),
            ),
            _t(
                ["-1, 0, 0, 0, 0", "x, 1, 0, 0, 0", "y, -x, -1, 0, 0", "z, -y, x, 1, 0", "v, -x - z, y, -x, -1"],
                "x y z v",
                ["-alpha1 + (x^2 + 2*y)*alpha3", "alpha2", "-alpha3"],
                (),
            ),
        ),
    ),
    BaseCaseData(
        "N5_10",
        "N5_10",
        ("D12", "-2 D13 + D15 + D24 + D33 + D42 + D51"),
        (
            _t(
                [
                    "1, 0, 0, 0, 0",
                    "x, 1, 0, 0, 0",
                    "y, 2*x, 1, 0, 0",
                    "z, x^2 + 2*y, 3*x, 1, 0",
                    "v, 2*x*y + x + 2*z, 3*x^2 + 3*y, 4*x, 1",
                ],
                "x y z v",
                ["alpha1 + x*alpha2", "alpha2"],
                (),
                ["alpha1 - 4*x*alpha2", "alpha2"],
            ),
            _t(
                [
                    "-1, 0, 0, 0, 0",
                    "x, 1, 0, 0, 0",
                    "y, -2*x, -1, 0, 0",
                    "z, x^2 - 2*y, 3*x, 1, 0",
                    "v, 2*x*y - x - 2*z, -3*x^2 + 3*y, -4*x, -1",
                ],
                "x y z v",
                ["-alpha1 + x*alpha2", "alpha2"],
                (),
                ["-alpha1 - 4*x*alpha2", "alpha2"],
            ),
        ),
    ),
    BaseCaseData(
        "N5_11",
        "N5_11",
        ("D13", "D15 + D32", "D14 - 2 D23 + 2 D32 - D41"),
        (
            _t(
                [
                    "1, 0, 0, 0, 0",
                    "x, 1, 0, 0, 0",
                    "y, x, 1, 0, 0",
                    "z, x + 2*y, 2*x, 1, 0",
                    "v, x^2 + (lambda+1)*y + 2*z, (lambda+3)*x + 4*y, 2*x, 1",
                ],
                "x y z v",
                ["alpha1 + (3*x + 4*y - 2*x^2)*alpha2 + (8*y + 2*x - 4*x^2)*alpha3", "alpha2", "alpha3"],
                (),
            ),
        ),
    ),
    BaseCaseData(
        "N5_13",
        "N5_13",
        ("D21", "(1-2*lambda) D13 - 2 D14 + D15 - D23 + D24 + D33 + D41 + D42 + D51"),
        (
            _t(
                [
                    "1, 0, 0, 0, 0",
                    "x, 1, 0, 0, 0",
                    "y, 2*x, 1, 0, 0",
                    "z, x^2 + x + 2*y, 3*x, 1, 0",
                    "v, lambda*x + 2*x*y - 2*y + 2*z, 3*x^2 - 3*x + 3*y, 4*x, 1",
                ],
                "x y z v",
                ["alpha1 - (lambda*x + x^2 - x - y)*alpha2", "alpha2"],
                (),
                ["alpha1 - (lambda*x - x^2 + x + y)*alpha2", "alpha2"],
            ),
        ),
    ),
)


@dataclass(frozen=True)
class ConstructionData:
    """How a family member arises as a central extension of a smaller algebra.

    ``base`` names a base case (whose nablas are then combined with the
    coefficient rows in ``nabla``) or a bare family (then ``forms`` lists the
    cocycles directly). ``base_params`` gives base parameters as expressions
    in the target's parameters; unlisted ones are taken by name.
    ``fixed`` pins target parameters, e.g. ``(("lambda", "0"),)``.
    """

    target: str
    base: str
    nabla: tuple[tuple[str, ...], ...] = ()
    forms: tuple[str, ...] = ()
    base_params: tuple[tuple[str, str], ...] = ()
    fixed: tuple[tuple[str, str], ...] = ()
    note: str = ""

    @property
    def id(self) -> str:
        if not self.fixed:
            return self.target
        return f"{self.target}({','.join(v for _, v in self.fixed)})"


def _c(target, base, *nabla, forms=(), base_params=(), fixed=(), note=""):
    rows = tuple(tuple(c.strip() for c in row.split(",")) for row in nabla)
    return ConstructionData(target, base, rows, tuple(forms), tuple(base_params), tuple(fixed), note)


_DERIVED = "representative found by hand; no printed orbit computation for this step"

CONSTRUCTIONS: tuple[ConstructionData, ...] = (
    _c("N2_01", "N1_01", forms=["D11"], note=_DERIVED),
    _c("N3_01", "N2_01", forms=["D21"], note=_DERIVED),
    _c("N3_02", "N2_01", forms=["D12 + lambda D21"], note=_DERIVED),
    _c("N4_01", "N2_01", forms=["D12", "D21"], note=_DERIVED),
    _c("N4_02", "N3_01", forms=["D13 - D31"], note=_DERIVED),
    _c("N4_03", "N3_02", forms=["(2-lambda) D13 + lambda D22 + lambda D31"], note=_DERIVED),
    _c("N4_04", "N3_02", forms=["2 D13 + D21"], base_params=[("lambda", "0")], note=_DERIVED),
    _c("N4_05", "N3_02", forms=["D13 + D21 + D22 + D31"], base_params=[("lambda", "1")], note=_DERIVED),
    _c("N5_01", "N3_01", forms=["D12", "D13 - D31"], note=_DERIVED),
    _c("N5_02", "N3_02", forms=["D21", "(2-lambda) D13 + lambda D22 + lambda D31"], note=_DERIVED),
    _c("N5_03", "N4_01", "lambda, mu, 1"),
    _c("N5_04", "N4_01", "1, lambda, 0"),
    _c("N5_05", "N4_02", "0, 1"),
    _c("N5_06", "N4_02", "1, 1"),
    _c("N5_07", "N4_03", "0, 1"),
    _c("N5_07", "N4_03(0)", "1, 0, 0", fixed=[("lambda", "0")]),
    _c("N5_07", "N4_03(1)", "0, 1", fixed=[("lambda", "1")]),
    _c(
        "N5_08",
        "N4_03(0)",
        "1/2, 1, 0",
        note="printed representative is nabla1 + nabla2; it reaches the table only through x^2 = 2,"
        " so the rational sample uses nabla1/2 + nabla2 from the same orbit",
    ),
    _c("N5_09", "N4_03(0)", "lambda, 0, 1"),
    _c("N5_10", "N4_03(1)", "1, 1"),
    _c("N5_11", "N4_04", "lambda, 1, 0"),
    _c("N5_12", "N4_04", "0, lambda, 1"),
    _c("N5_13", "N4_05", "lambda, 1"),
    _c("N6_01", "N4_01", "1, 0, 0", "0, 1, 0"),
    _c("N6_02", "N4_01", "1, 0, 0", "0, lambda, 1"),
    _c("N6_03", "N4_01", "lambda, 1, 0", "mu, 0, 1"),
    _c("N6_04", "N4_02", "1, 0", "0, 1"),
    _c("N6_05", "N4_03", "1, 0", "0, 1"),
    _c("N6_05", "N4_03(0)", "1, 0, 0", "0, 1, 0", fixed=[("lambda", "0")]),
    _c("N6_05", "N4_03(1)", "1, 0", "0, 1", fixed=[("lambda", "1")]),
    _c("N6_06", "N4_03(0)", "lambda, 0, 1", "0, 1, 0"),
    _c("N6_07", "N4_03(0)", "1, 1, 0", "0, 0, 1"),
    _c("N6_08", "N4_03(0)", "1, 0, 0", "0, 0, 1"),
    _c("N6_09", "N4_04", "1, 0, 0", "0, 1, 0"),
    _c("N6_10", "N4_04", "1, 0, 0", "0, lambda, 1"),
    _c("N6_11", "N4_04", "lambda, 1, 0", "0, 0, 1"),
    _c("N6_12", "N4_05", "1, 0", "0, 1"),
    _c("N6_13", "N5_01", "1, 0, 1"),
    _c("N6_14", "N5_02", "alpha, 1, 1", base_params=[("lambda", "1")]),
    _c("N6_15", "N5_02", "0, 1, 1", base_params=[("lambda", "3")]),
    _c("N6_16", "N5_02", "1, 0, 1"),
    _c("N6_16", "N5_02(0)", "1, 0, 1, 0", fixed=[("lambda", "0")]),
    _c("N6_17", "N5_02(0)", "1, 0, alpha, 1"),
    _c("N6_18", "N5_02(0)", "alpha, 1, 1, 0"),
    _c("N6_19", "N5_02(0)", "alpha, 1, beta, 1"),
    _c("N6_20", "N5_03", "0, 0, 1"),
    _c("N6_21", "N5_03", "1, 0, 1"),
    _c("N6_22", "N5_03", "0, 1, 1", base_params=[("mu", "1")]),
    _c("N6_23", "N5_03", "nu, 1, 1", base_params=[("lambda", "1"), ("mu", "1")]),
    _c("N6_24", "N5_03", "0, 1, 1", base_params=[("mu", "2")]),
    _c("N6_25", "N5_04", "0, 0, 1"),
    _c("N6_26", "N5_04", "1, 0, 1"),
    _c("N6_27", "N5_05", "0, 1"),
    _c("N6_28", "N5_06", "0, 1"),
    _c("N6_29", "N5_07", "0, 1"),
    _c("N6_29", "N5_07(0)", "1, 0, 0", fixed=[("lambda", "0")]),
    _c("N6_29", "N5_07(1)", "0, 1", fixed=[("lambda", "1")]),
    _c("N6_30", "N5_07", "1, 1", base_params=[("lambda", "2")]),
    _c("N6_31", "N5_07(0)", "1, 0, 1"),
    _c("N6_32", "N5_07(0)", "1, 1, 0"),
    _c("N6_33", "N5_07(1)", "1, 1"),
    _c("N6_34", "N5_08", "lambda, 1, 0"),
    _c("N6_35", "N5_08", "0, 1, lambda"),
    _c("N6_36", "N5_10", "0, 1"),
    _c("N6_37", "N5_11", "0, 1, mu"),
    _c("N6_38", "N5_13", "0, 1"),
)


@dataclass(frozen=True)
class EquivalenceData:
    """A claimed isomorphism between two family members.

    Arguments are expressions in the ``free`` variables, which default to
    the listed sample values.
    """

    claim: str
    left: str
    left_args: tuple[str, ...]
    right: str
    right_args: tuple[str, ...]
    free: tuple[tuple[str, str], ...] = ()


EQUIVALENCES: tuple[EquivalenceData, ...] = (
    EquivalenceData("N5_04(0) ~ N5_02(0)", "N5_04", ("0",), "N5_02", ("0",)),
    EquivalenceData("N6_16(3) ~ N6_05(3)", "N6_16", ("3",), "N6_05", ("3",)),
    EquivalenceData(
        "N6_21(lambda,2) ~ N6_20(lambda,2)", "N6_21", ("lambda", "2"), "N6_20", ("lambda", "2"), (("lambda", "3"),)
    ),
    EquivalenceData("N6_23(0) ~ N6_22(1)", "N6_23", ("0",), "N6_22", ("1",)),
    EquivalenceData("N6_25(0) ~ N6_06(-2)", "N6_25", ("0",), "N6_06", ("-2",)),
    EquivalenceData("N6_26(0) ~ N6_17(-2)", "N6_26", ("0",), "N6_17", ("-2",)),
    EquivalenceData("N6_35(0) ~ N6_34(0)", "N6_35", ("0",), "N6_34", ("0",)),
    EquivalenceData("N6_34(lambda) ~ N6_34(-lambda)", "N6_34", ("lambda",), "N6_34", ("-lambda",), (("lambda", "1"),)),
    EquivalenceData("N6_35(lambda) ~ N6_35(-lambda)", "N6_35", ("lambda",), "N6_35", ("-lambda",), (("lambda", "1"),)),
)
