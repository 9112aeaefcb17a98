"""
Terminal rendering.

Tables go through a rich Console with a fixed width and no colour so the
output is byte-identical between runs and terminals.
"""

import json
from io import StringIO
from typing import Any

from rich import box
from rich.console import Console
from rich.table import Table

from .reproduce import Reproduction

CONSOLE_WIDTH = 160


def _console() -> Console:
    return Console(
        file=StringIO(),
        width=CONSOLE_WIDTH,
        no_color=True,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
    )


def render_table(rep: Reproduction) -> str:
    table = Table(title=rep.title, box=box.ASCII, title_justify="left")
    for column in rep.columns:
        table.add_column(column, overflow="fold")
    for row in rep.rows:
        table.add_row(*row)

    console = _console()
    console.print(table)
    for note in rep.notes:
        console.print(note, markup=False)
    for diff in rep.diffs:
        console.print(f"DIFF {diff}", markup=False)
    if not rep.diffs:
        console.print("no differences", markup=False)
    return console.file.getvalue()


def render_structured(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def render(rep: Reproduction, output_format: str) -> str:
    if output_format == "structured":
        return render_structured(rep.to_dict())
    return render_table(rep)
