"""Count report rows and their CSV / JSON serialization."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Context, Decimal
from typing import Optional, Sequence

from .asymptotics import EstimateValue

FIELDS = ("p", "x", "exact", "dp_exact", "estimate_log10", "ratio", "primitive", "nonprimitive")
SIX_PLACES = Decimal("0.000001")
_CTX = Context(prec=50)


@dataclass(frozen=True)
class CountReportRow:
    p: int
    x: int
    exact: Optional[int]
    dp_exact: int
    estimate_log10: Decimal
    ratio: Optional[Decimal]
    primitive: Optional[int]
    nonprimitive: Optional[int]

    def __post_init__(self) -> None:
        if self.exact is not None and self.primitive is not None:
            if self.primitive + self.nonprimitive != self.exact:
                raise ValueError(f"primitive split does not add up for p={self.p}, x={self.x}")

    @classmethod
    def build(
        cls,
        p: int,
        x: int,
        exact: Optional[int],
        dp_exact: int,
        estimate: EstimateValue,
        primitive: Optional[int] = None,
    ) -> "CountReportRow":
        log10 = estimate.value.log10(context=_CTX).quantize(SIX_PLACES, context=_CTX)
        ratio = None
        if exact is not None:
            ratio = _CTX.divide(Decimal(exact), estimate.value).quantize(SIX_PLACES, context=_CTX)
        nonprimitive = None if primitive is None or exact is None else exact - primitive
        return cls(p, x, exact, dp_exact, log10, ratio, primitive, nonprimitive)

    def as_strings(self) -> dict[str, str]:
        def s(v: object) -> str:
            return "" if v is None else str(v)

        return {
            "p": str(self.p),
            "x": str(self.x),
            "exact": s(self.exact),
            "dp_exact": str(self.dp_exact),
            "estimate_log10": f"{self.estimate_log10:f}",
            "ratio": "" if self.ratio is None else f"{self.ratio:f}",
            "primitive": s(self.primitive),
            "nonprimitive": s(self.nonprimitive),
        }

    def as_json(self) -> dict[str, object]:
        d = self.as_strings()
        return {
            "p": self.p,
            "x": self.x,
            "exact": d["exact"] or None,
            "dp_exact": d["dp_exact"],
            "estimate_log10": d["estimate_log10"],
            "ratio": d["ratio"] or None,
            "primitive": self.primitive,
            "nonprimitive": self.nonprimitive,
        }


def emit_report(rows: Sequence[CountReportRow], fmt: str = "csv") -> bytes:
    rows = sorted(rows, key=lambda r: (r.p, r.x))
    if fmt == "json":
        return (json.dumps([r.as_json() for r in rows], indent=2) + "\n").encode()
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r.as_strings())
    return buf.getvalue().encode()


def read_report(data: bytes, fmt: str = "csv") -> list[CountReportRow]:
    """Inverse of :func:`emit_report`."""
    if fmt == "json":
        items = [{k: ("" if v is None else str(v)) for k, v in obj.items()} for obj in json.loads(data)]
    else:
        items = list(csv.DictReader(io.StringIO(data.decode())))

    def opt_int(v: str) -> Optional[int]:
        return int(v) if v else None

    return [
        CountReportRow(
            p=int(d["p"]),
            x=int(d["x"]),
            exact=opt_int(d["exact"]),
            dp_exact=int(d["dp_exact"]),
            estimate_log10=Decimal(d["estimate_log10"]),
            ratio=Decimal(d["ratio"]) if d["ratio"] else None,
            primitive=opt_int(d["primitive"]),
            nonprimitive=opt_int(d["nonprimitive"]),
        )
        for d in items
    ]


def emit_table(header: Sequence[str], rows: Sequence[Sequence[object]], fmt: str = "csv") -> bytes:
    """Generic CSV / JSON table for the non-report subcommands."""
    if fmt == "json":
        return (json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n").encode()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _cell(v) for v in row])
    return buf.getvalue().encode()


def _cell(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
