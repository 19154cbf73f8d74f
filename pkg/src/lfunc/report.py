"""
Deterministic JSON, CSV and text rendering of results
"""
import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Sequence

from mpmath import mp
from pydantic import BaseModel

from ..exact.poly import IntPoly
from ..exact.quadint import QuadInt
from ..exact.roots import RootOfUnity
from ..linalg.matrix import IntMatrix
from ..torus.skew import SkewMatrix
from ..utils.errors import UsageError

REAL_DIGITS = 20

COMPARE_COLUMNS = ("p", "ap", "trAp", "curve_factor", "torus_factor", "excluded", "equal")


def format_real(x, digits: int = REAL_DIGITS) -> str:
    """Exactly `digits` significant digits, round-half-even"""
    if not isinstance(x, mp.mpf):
        x = mp.mpf(x)
    return mp.nstr(x, digits, strip_zeros=False)


def format_complex(z, digits: int = REAL_DIGITS) -> str:
    if not isinstance(z, mp.mpc):
        z = mp.mpc(z)
    if z.imag == 0:
        return format_real(z.real, digits)
    sign = "-" if z.imag < 0 else "+"
    return f"{format_real(z.real, digits)}{sign}{format_real(abs(z.imag), digits)}j"


def to_jsonable(obj: Any) -> Any:
    """Plain JSON values; exact numbers as text, reals as 20-digit strings"""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, BaseModel):
        return {name: to_jsonable(getattr(obj, name)) for name in type(obj).model_fields}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, IntMatrix):
        return obj.format()
    if isinstance(obj, SkewMatrix):
        return obj.format()
    if isinstance(obj, (QuadInt, RootOfUnity, IntPoly, Fraction)):
        return str(obj)
    if isinstance(obj, mp.mpf):
        return format_real(obj)
    if isinstance(obj, mp.mpc):
        return format_complex(obj)
    if hasattr(obj, "_mpi_"):
        lo, hi = obj._mpi_
        return [format_real(mp.make_mpf(lo)), format_real(mp.make_mpf(hi))]
    if isinstance(obj, float):
        return format_real(obj)
    if isinstance(obj, complex):
        return format_complex(obj)
    return str(obj)


def _cell(value: Any) -> str:
    value = to_jsonable(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return "" if value is None else str(value)


def _rows(data: Any) -> Optional[List[dict]]:
    if isinstance(data, (list, tuple)) and all(isinstance(r, (BaseModel, dict)) for r in data):
        return [r if isinstance(r, dict) else {k: getattr(r, k) for k in type(r).model_fields} for r in data]
    return None


def render_json(data: Any) -> str:
    return json.dumps(to_jsonable(data), indent=2, ensure_ascii=True) + "\n"


def render_csv(data: Any, columns: Optional[Sequence[str]] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    rows = _rows(data)
    if rows is not None:
        header = list(columns or (rows[0].keys() if rows else COMPARE_COLUMNS))
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in header])
    else:
        plain = to_jsonable(data)
        if not isinstance(plain, dict):
            raise UsageError("csv output needs a table or a record")
        writer.writerow(["key", "value"])
        for key, value in plain.items():
            writer.writerow([key, _cell(value)])
    return buffer.getvalue()


def render_text(data: Any) -> str:
    rows = _rows(data)
    if rows is not None:
        return "".join(" ".join(f"{k}={_cell(v)}" for k, v in row.items()) + "\n" for row in rows)
    plain = to_jsonable(data)
    if isinstance(plain, dict):
        return "".join(f"{k}: {_cell(v)}\n" for k, v in plain.items())
    return f"{_cell(plain)}\n"


def render(data: Any, fmt: str = "json") -> str:
    if fmt == "json":
        return render_json(data)
    if fmt == "csv":
        return render_csv(data)
    if fmt == "text":
        return render_text(data)
    raise UsageError(f"unknown output format {fmt!r}")


def write_report(data: Any, fmt: str = "json", out: Optional[str] = None) -> str:
    """Render and write to `out`, or just return the text when out is None"""
    text = render(data, fmt)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text
