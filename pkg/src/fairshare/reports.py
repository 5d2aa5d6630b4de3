"""Plain-text rendering of solution and trace documents.

The marginal table is laid out the classic way: one row per arrival
order, player columns, a totals row, and a final row dividing the totals
by the number of orders.
"""

from __future__ import annotations

from typing import Any, Mapping


def _align(rows: list[list[str]], gap: str = "  ") -> str:
    if not rows:
        return ""
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [
            cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append(gap.join(cells).rstrip())
    return "\n".join(lines)


def _exact(entry: Mapping[str, str]) -> str:
    return entry["exact"]


def _both(entry: Mapping[str, str]) -> str:
    exact, decimal = entry["exact"], entry["decimal"]
    if exact == decimal:
        return exact
    return f"{exact} ({decimal})"


def render_marginal_table(table: Mapping[str, Any]) -> str:
    players = table["players"]
    rows: list[list[str]] = [["Entry order", *players]]
    for row in table["rows"]:
        rows.append([row["order"], *(_exact(cell) for cell in row["cells"])])
    rows.append(["Total", *(_exact(t) for t in table["totals"])])
    order_count = len(table["rows"])
    shapley_cells = []
    for total, reduced in zip(table["totals"], table["shapley"]):
        if "/" in total["exact"]:
            shapley_cells.append(reduced["exact"])
        else:
            shapley_cells.append(f"{total['exact']}/{order_count}")
    rows.append(["Shapley value", *shapley_cells])
    return _align(rows)


def render_axioms(axioms: Mapping[str, Any]) -> str:
    lines = [f"Efficiency: {'pass' if axioms['efficiency'] else 'FAIL'}"]
    for entry in axioms.get("symmetry", []):
        a, b = entry["players"]
        lines.append(
            f"Symmetry {a}~{b}: "
            f"{'symmetric' if entry['symmetric'] else 'asymmetric'}, "
            f"values {'equal' if entry['equal_value'] else 'differ'}"
        )
    for entry in axioms.get("dummy", []):
        lines.append(
            f"Dummy {entry['player']}: "
            f"{'dummy' if entry['dummy'] else 'contributes'}, "
            f"value {'zero' if entry['zero_value'] else 'nonzero'}"
        )
    if "additivity_with_self" in axioms:
        lines.append(
            f"Additivity (game + itself): "
            f"{'pass' if axioms['additivity_with_self'] else 'FAIL'}"
        )
    return "\n".join(lines)


def render_solution(doc: Mapping[str, Any]) -> str:
    sections = []
    header = [f"Players: {', '.join(doc['players'])}", f"Method: {doc['method']}"]
    if "process_tag" in doc:
        header.append(f"Process tag: {doc['process_tag']}")
    sections.append("\n".join(header))

    rows = [["Player", "Shapley value", "Cost share", "Rational"]]
    for label in doc["players"]:
        rows.append(
            [
                label,
                _both(doc["shapley"][label]),
                _both(doc["cost_shares"][label]),
                "yes" if doc["rationality"][label] else "NO",
            ]
        )
    rows.append(["Total", "", _both(doc["total_cost"]), ""])
    sections.append(_align(rows))

    if "marginal_table" in doc:
        sections.append(render_marginal_table(doc["marginal_table"]))

    sections.append(render_axioms(doc["axioms"]))

    if "core" in doc:
        core = doc["core"]
        if core["in_core"]:
            sections.append("Core: allocation is in the core")
        else:
            blockers = ",".join(core["blocking_coalition"])
            sections.append(
                f"Core: BLOCKED by {{{blockers}}} "
                f"(excess {_both(core['blocking_excess'])})"
            )

    if "budgets" in doc:
        rows = [["Player", "Budget", "Share", "Variance", "Status"]]
        for label in doc["players"]:
            entry = doc["budgets"]["players"][label]
            rows.append(
                [
                    label,
                    _both(entry["budget"]),
                    _both(entry["share"]),
                    _both(entry["variance"]),
                    "OVER BUDGET" if entry["over_budget"] else "within",
                ]
            )
        budget_text = _align(rows)
        flags = doc["budgets"]["corrective_flags"]
        if flags:
            budget_text += (
                f"\nInitiate corrective action for: {', '.join(flags)}"
            )
        sections.append(budget_text)

    return "\n\n".join(sections) + "\n"


def render_trace(doc: Mapping[str, Any]) -> str:
    lines = [
        f"Policy: {doc['policy']}  seed: {doc['seed']}  max rounds: {doc['max_rounds']}"
    ]
    for event in doc["events"]:
        coalition = "{" + ",".join(event["coalition"]) + "}"
        text = f"Round {event['round']}: {event['kind']} {coalition}"
        if "shares" in event:
            text += "  shares " + ", ".join(s["decimal"] for s in event["shares"])
        if "stable" in event:
            text += f"  (stable: {'yes' if event['stable'] else 'not yet'})"
        lines.append(text)
    if doc["stable"]:
        lines.append(f"Stable at round {doc['rounds']}.")
    else:
        lines.append(f"Round limit reached after {doc['rounds']} rounds without stability.")
    structure = "  ".join("{" + ",".join(block) + "}" for block in doc["final_structure"])
    lines.append(f"Final structure: {structure}")
    lines.append(
        "Final shares: "
        + "  ".join(f"{label}={entry['decimal']}" for label, entry in doc["final_shares"].items())
    )
    lines.append(
        "Stages: "
        + "  ".join(f"{label}={stage}" for label, stage in doc["stages"].items())
    )
    return "\n".join(lines) + "\n"
