"""
Report Module
Formats computation results as text, JSON or CSV for the command line.
"""
import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from .classifier import SCHEMA, AttractorReport
from .graphs.counting import GraphStats
from .polynomials.intpoly import IntPoly, format_poly
from .search.components import HEADERS, TableRow
from .search.realization import Realization
from .utils.error_handler import ConfigError

logger = logging.getLogger('indatt.report')

FORMATS = ("text", "json", "csv")


class ReportFormatter:
    def __init__(self, fmt: str = "text"):
        """
        Initialize the formatter

        Args:
            fmt (str): One of text, json, csv
        """
        if fmt not in FORMATS:
            raise ConfigError(f"Reports can be text, json or csv, got '{fmt}'")
        self.fmt = fmt

    def _json(self, payload: Dict[str, Any]) -> str:
        return json.dumps({"schema": SCHEMA, **payload}, indent=2)

    def _csv(self, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    def attractor_report(self, report: AttractorReport) -> str:
        """
        Format a classification

        Args:
            report (AttractorReport): The classification

        Returns:
            str: "class=Segment k=4 segment=[-1,0] ..." or a JSON document
        """
        data = report.as_dict()
        if self.fmt == "json":
            return json.dumps(data, indent=2)
        if self.fmt == "csv":
            keys = [k for k in data if k != "schema"]
            return self._csv(keys, [[_cell(data[k]) for k in keys]])

        parts = [f"class={data['class']}"]
        if report.k is not None:
            parts.append(f"k={report.k}")
            parts.append(f"segment={data['segment']}")
        parts.append(f"alpha={report.alpha}")
        parts.append(f"minusOneMultiplicity={report.minus_one_multiplicity}")
        parts.append(f"fractalRelation={data['fractalRelation']}")
        parts.append(f"connected={_cell(report.connected)}")
        parts.append(f"fractalIsCircle={_cell(report.fractal_is_circle)}")
        if report.numeric is not None and report.numeric.failed:
            parts.append("corroboration=failed")
        elif report.numeric is not None:
            parts.append(f"hausdorffToSegment={report.numeric.hausdorff_to_segment:.6g}")
            parts.append(f"depth={report.numeric.depth}")
        return " ".join(parts)

    def graph_stats(self, stats: GraphStats) -> str:
        data = stats.as_dict()
        if self.fmt == "json":
            return self._json({"stats": data})
        if self.fmt == "csv":
            keys = [k for k in data if k != "degrees"]
            return self._csv(keys, [[data[k] for k in keys]])
        lines = [f"{key}={value}" for key, value in data.items() if key != "degrees"]
        lines.append("degrees=" + ",".join(str(d) for d in stats.degrees))
        lines.append(f"edgeIdentity={_cell(stats.edge_identity_holds())}")
        lines.append(f"degreeIdentity={_cell(stats.degree_identity_holds())}")
        lines.append(f"triangleBound={stats.triangle_bound()} holds={_cell(stats.triangle_bound_holds())}")
        return "\n".join(lines)

    def table(self, case: str, k: int, rows: List[TableRow]) -> str:
        """
        Format component-table rows in their column order

        Args:
            case (str): Full case name
            k (int): Segment index
            rows (list): Rows to print

        Returns:
            str: Formatted table
        """
        header = list(HEADERS[case]) + ["independence polynomial"]
        body = [row.cell_texts() + [row.verdict] for row in rows]
        if self.fmt == "json":
            return self._json({
                "case": case,
                "k": k,
                "columns": header,
                "rows": [dict(zip(header, cells)) for cells in body],
            })
        if self.fmt == "csv":
            return self._csv(header, body)
        widths = [max(len(str(r[i])) for r in [header] + body) for i in range(len(header))]
        lines = [" | ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
        lines.append("-+-".join("-" * w for w in widths))
        for cells in body:
            lines.append(" | ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip())
        return "\n".join(lines)

    def factorizations(self, target: IntPoly, factorizations: List[Sequence[IntPoly]]) -> str:
        texts = ["".join(f"({format_poly(f)})" for f in fs) for fs in factorizations]
        if self.fmt == "json":
            return self._json({
                "target": format_poly(target),
                "factorizations": [[format_poly(f) for f in fs] for fs in factorizations],
            })
        if self.fmt == "csv":
            return self._csv(["factors", "product"], [[len(fs), t] for fs, t in zip(factorizations, texts)])
        return "\n".join(texts)

    def realizations(self, k: int, realizations: List[Realization]) -> str:
        """
        Format the realization pipeline

        Args:
            k (int): Segment index
            realizations (list): One entry per component split

        Returns:
            str: Formatted summary
        """
        entries = []
        for r in realizations:
            entries.append({
                "case": r.solution.case_kind,
                "params": list(r.solution.params),
                "product": r.solution.product_text(),
                "verdict": r.verdict.value,
                "graphs": r.graph_count,
                "factors": [
                    {"factor": format_poly(f.factor), "verdict": f.verdict.value,
                     "connectedRealizations": f.count, "reason": f.reason}
                    for f in r.factors
                ],
            })
        if self.fmt == "json":
            return self._json({"k": k, "realizations": entries})
        if self.fmt == "csv":
            return self._csv(
                ["case", "product", "verdict", "graphs"],
                [[e["case"], e["product"], e["verdict"], _cell(e["graphs"])] for e in entries]
            )
        if not entries:
            return f"k={k}: no disconnected graphs"
        lines = []
        for e in entries:
            lines.append(f"{e['product']} [{e['case']}] {e['verdict']} graphs={_cell(e['graphs'])}")
            for f in e["factors"]:
                lines.append(f"  {f['factor']}: {f['verdict']} connected={_cell(f['connectedRealizations'])}")
        return "\n".join(lines)

    def checks(self, results: List[Any]) -> str:
        """Pass/fail table of invariant checks."""
        if self.fmt == "json":
            return self._json({"checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)}
                for r in results
            ]})
        if self.fmt == "csv":
            return self._csv(["name", "passed", "detail", "seconds"],
                             [[r.name, _cell(r.passed), r.detail, f"{r.seconds:.3f}"] for r in results])
        width = max((len(r.name) for r in results), default=0)
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.seconds:7.2f}s  {r.detail}"
                 for r in results]
        failed = sum(not r.passed for r in results)
        lines.append(f"{len(results) - failed}/{len(results)} checks passed")
        return "\n".join(lines)


def _cell(value: Optional[Any]) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
