"""
Output rendering. JSON is canonical; the table and CSV forms are built from
the same payload dictionaries with pandas.
"""
import json
from typing import Any

import pandas as pd

from ..models.lattice import LatticeShape, iter_points


class ReportRenderer:
    def __init__(self, fmt: str = "json"):
        self.fmt = fmt

    @staticmethod
    def _json(payload: dict[str, Any]) -> str:
        return json.dumps(payload, indent=2) + "\n"

    @staticmethod
    def _table(frame: pd.DataFrame, header: str = "") -> str:
        text = frame.to_string(float_format=lambda x: f"{x:.10g}")
        return f"{header}\n{text}\n" if header else f"{text}\n"

    def index(self, payload: dict[str, Any]) -> str:
        """Single-method output of ``compute``"""
        if self.fmt == "json":
            return self._json(payload)
        method, values = payload["method"], payload["values"]
        attributes = range(1, payload["n"] + 1)
        bi_index = isinstance(values[0], list)
        if self.fmt == "csv":
            rows = []
            for i, row in zip(attributes, values):
                if bi_index:
                    rows.append((i, method, sum(row)))
                    rows.extend((i, f"{method}[{j}]", x) for j, x in enumerate(row, start=1))
                else:
                    rows.append((i, method, row))
            return pd.DataFrame(rows, columns=["attribute", "method", "value"]).to_csv(index=False)
        if bi_index:
            frame = pd.DataFrame(values, index=pd.Index(attributes, name="attribute"),
                                 columns=[f"j={j}" for j in range(1, payload["k"] + 1)])
            frame["sum"] = frame.sum(axis=1)
        else:
            frame = pd.DataFrame({method: values}, index=pd.Index(attributes, name="attribute"))
        text = self._table(frame, f"method: {method}  (n={payload['n']}, k={payload['k']})")
        if "check" in payload:
            check = payload["check"]
            text += f"sum of importances:       {check['sum']:.12g}\n"
            if "diagonal_variation" in check:
                text += f"total diagonal variation: {check['diagonal_variation']:.12g}\n"
            else:
                text += f"top value v(k_N):         {check['top_value']:.12g}\n"
        return text

    def compare(self, payload: dict[str, Any]) -> str:
        if self.fmt == "json":
            return self._json(payload)
        columns = payload["columns"]
        attributes = range(1, payload["n"] + 1)
        if self.fmt == "csv":
            rows = [(i, method, values[i - 1]) for method, values in columns.items() for i in attributes]
            return pd.DataFrame(rows, columns=["attribute", "method", "value"]).to_csv(index=False)
        frame = pd.DataFrame(columns, index=pd.Index(attributes, name="attribute"))
        frame.loc["sum"] = frame.sum(axis=0)
        text = self._table(frame, f"n={payload['n']}, k={payload['k']}")
        text += f"total diagonal variation: {payload['sum_identity_rhs']:.12g}\n"
        text += f"v(k_N):                   {payload['top_value']:.12g}\n"
        for method, table in payload["bi_index"].items():
            detail = pd.DataFrame(table, index=pd.Index(attributes, name="attribute"),
                                  columns=[f"j={j}" for j in range(1, payload["k"] + 1)])
            text += "\n" + self._table(detail, f"{method} by level")
        return text

    def verify(self, payload: dict[str, Any]) -> str:
        if self.fmt == "json":
            return self._json(payload)
        frame = pd.DataFrame(
            [(r["axiom"], r["passed"], r["violation"], r["tolerance"], r.get("note") or "") for r in payload["reports"]],
            columns=["axiom", "passed", "violation", "tolerance", "note"],
        )
        if self.fmt == "csv":
            return frame.to_csv(index=False)
        lines = [f"method={payload['method']} n={payload['n']} k={payload['k']} "
                 f"trials={payload['trials']} seed={payload['seed']} tol={payload['tolerance']:g}"]
        for r in payload["reports"]:
            mark = "✅" if r["passed"] else "❌"
            note = f"  [{r['note']}]" if r.get("note") else ""
            lines.append(f"{mark} {r['axiom']:<13} violation {r['violation']:.3e}{note}")
        lines.append("all axioms hold" if payload["passed"] else "some axioms FAILED")
        return "\n".join(lines) + "\n"

    def table_file(self, payload: dict[str, Any]) -> str:
        """A dense game or Möbius table, as produced by ``moebius`` and ``gai-eval``"""
        if self.fmt == "json":
            return self._json(payload)
        shape = LatticeShape(payload["n"], payload["k"])
        label = "m" if payload["kind"] == "moebius" else "v"
        frame = pd.DataFrame(
            [list(x.coords) + [value] for x, value in zip(iter_points(shape), payload["values"]["dense"])],
            columns=[f"x{i}" for i in range(1, shape.n + 1)] + [label],
        )
        if self.fmt == "csv":
            return frame.to_csv(index=False)
        return self._table(frame.set_index([f"x{i}" for i in range(1, shape.n + 1)]), f"{payload['kind']} n={shape.n} k={shape.k}")
