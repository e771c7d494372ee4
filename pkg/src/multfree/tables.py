"""Reproduce the tables of multiplicity-free groups and diff them against the
stored expectations in data/tables.json."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import comb, factorial

from .closed_forms import closed_form
from .induction import induced_trivial, is_multiplicity_free, rank
from .partitions import partition_count
from .permgroups.group import DEFAULT_CENSUS_CAP
from .permgroups.spec import construct, parse_spec

PASS, FAIL, REPORT, ERRATUM, RECORDED, SKIPPED = (
    "PASS",
    "FAIL",
    "REPORT",
    "ERRATUM",
    "RECORDED",
    "SKIPPED",
)

_NAMESPACE = {"__builtins__": {}, "comb": comb, "factorial": factorial, "p": partition_count, "min": min, "None": None}


def evaluate(expr: str | None, params: dict):
    if expr is None:
        return None
    return eval(expr, dict(_NAMESPACE), dict(params))  # expressions come from the shipped data file


@lru_cache(maxsize=1)
def _load() -> dict:
    text = (resources.files("multfree") / "data" / "tables.json").read_text()
    return json.loads(text)


def load_tables() -> dict:
    return _load()["tables"]


def membership_expectations() -> dict:
    """Printed parameter sets for the S_2 wr S_k subgroup families."""
    return {k: v for k, v in _load()["membership"].items() if not k.startswith("_")}


def param_key(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def expand_params(spec: dict) -> list[dict]:
    """``{"k": [2,3]}`` or ``{"k,n": [[1,2],[1,3]]}`` to a list of dicts."""
    out: list[dict] = []
    for names, values in spec.items():
        keys = names.split(",")
        for v in values:
            v = v if isinstance(v, list) else [v]
            out.append(dict(zip(keys, v)))
    return out


@dataclass
class Measured:
    spec: str
    n: int
    index: int
    rank: int
    mf: bool
    method: str


def measure(spec: str, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1, catalog=None) -> Measured:
    """Degree, index, rank and MF verdict, by census when feasible."""
    parsed = parse_spec(spec)
    group = construct(parsed, catalog)
    index = factorial(group.n) // group.order()
    if group.census_available(cap):
        vec = induced_trivial(group, cap, threads).vector
        method = "brute"
    else:
        vec = closed_form(parsed, catalog)
        if vec is None:
            raise LookupError(f"neither a census nor a closed form for {spec}")
        method = "closed"
    return Measured(str(parsed), group.n, index, rank(vec), is_multiplicity_free(vec), method)


@dataclass
class RowResult:
    table: str
    row: int
    label: str
    params: dict
    spec: str
    status: str
    measured: Measured | None = None
    expected: dict = field(default_factory=dict)
    note: str = ""

    def line(self) -> str:
        p = f" [{param_key(self.params)}]" if self.params else ""
        if self.measured is None:
            return f"{self.table}.{self.row}{p}\t{self.spec}\t{self.status}\t{self.note}"
        m = self.measured
        exp = self.expected
        exp_text = f"expected n={exp.get('n')} index={exp.get('index')} rank={exp.get('rank')}"
        text = f"{self.table}.{self.row}{p}\t{m.spec}\tn={m.n}\tindex={m.index}\trank={m.rank}\tmf={m.mf}\t{self.status}"
        if self.status in (FAIL, ERRATUM):
            text += f"\t({exp_text})"
        if self.note:
            text += f"\t{self.note}"
        return text

    def as_dict(self) -> dict:
        out = {
            "table": self.table,
            "row": self.row,
            "label": self.label,
            "params": self.params,
            "spec": self.spec,
            "status": self.status,
            "expected": self.expected,
            "note": self.note,
        }
        if self.measured is not None:
            out["measured"] = self.measured.__dict__
        return out


def _judge(measured: Measured, expected: dict, erratum: dict | None) -> tuple[str, str]:
    ok = (
        measured.n == expected["n"]
        and measured.index == expected["index"]
        and measured.mf == expected["mf"]
        and (expected["rank"] is None or measured.rank == expected["rank"])
    )
    if ok:
        return (PASS if expected["rank"] is not None else REPORT), ""
    if erratum is not None:
        corrected = dict(expected, **{k: v for k, v in erratum.items() if k != "note"})
        if (
            measured.n == corrected["n"]
            and measured.index == corrected["index"]
            and measured.mf == corrected["mf"]
            and measured.rank == corrected["rank"]
        ):
            return ERRATUM, erratum.get("note", "")
    return FAIL, ""


def run_row(
    table: str,
    number: int,
    row: dict,
    params: list[dict] | None = None,
    cap: int = DEFAULT_CENSUS_CAP,
    threads: int = 1,
    catalog=None,
) -> list[RowResult]:
    label = row["label"]
    if row.get("kind") == "verdict":
        out = []
        for spec in row["specs"]:
            try:
                m = measure(spec, cap, threads, catalog)
            except LookupError as exc:
                out.append(RowResult(table, number, label, {}, spec, SKIPPED, note=str(exc)))
                continue
            verdict = "multiplicity free" if m.mf else "not multiplicity free"
            out.append(RowResult(table, number, label, {}, spec, RECORDED, m, note=verdict))
        return out
    if params is None:
        params = expand_params(row["params"]) if "params" in row else [{}]
    results = []
    for p in params:
        env = dict(p)
        for name, expr in row.get("derived", {}).items():
            env[name] = evaluate(expr, env)
        spec = row["spec"].format(**env)
        expected = {
            "n": evaluate(row["degree"], env),
            "index": evaluate(row["index"], env),
            "rank": evaluate(row["rank"], env),
            "mf": True,
        }
        try:
            m = measure(spec, cap, threads, catalog)
        except LookupError as exc:
            results.append(RowResult(table, number, label, p, spec, SKIPPED, expected=expected, note=str(exc)))
            continue
        erratum = row.get("errata", {}).get(param_key(p))
        status, note = _judge(m, expected, erratum)
        results.append(RowResult(table, number, label, p, spec, status, m, expected, note))
    return results


def run_table(
    table: str | int,
    rows: list[int] | None = None,
    params: list[dict] | None = None,
    cap: int = DEFAULT_CENSUS_CAP,
    threads: int = 1,
    catalog=None,
) -> list[RowResult]:
    """Rows are numbered from 1 in table order.  ``params`` overrides the
    stored parameter list of the selected parametric rows."""
    table = str(table)
    data = load_tables()
    if table not in data:
        raise KeyError(f"unknown table {table}; known: {', '.join(data)}")
    out = []
    for number, row in enumerate(data[table]["rows"], 1):
        if rows and number not in rows:
            continue
        use = params if (params is not None and "params" in row) else None
        out.extend(run_row(table, number, row, use, cap, threads, catalog))
    return out


def parse_param_override(items: list[str]) -> list[dict]:
    """``["k=5,6"]`` or ``["k=5..7", "n=9"]`` to a list of parameter dicts."""
    names, values = [], []
    for item in items:
        name, _, text = item.partition("=")
        if not name or not text:
            raise ValueError(f"bad parameter {item!r}; use name=v1,v2 or name=a..b")
        vals: list[int] = []
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                vals.extend(range(int(lo), int(hi) + 1))
            else:
                vals.append(int(part))
        names.append(name.strip())
        values.append(vals)
    return [dict(zip(names, combo)) for combo in itertools.product(*values)]
