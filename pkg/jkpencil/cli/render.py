"""
Report rendering: JSON is the source of truth, text is a view of it.
"""

import sys
from abc import ABC, abstractmethod
from typing import Any, TextIO

from jkpencil.cli.io import dump_json


class ReportRenderer(ABC):
    """Abstract sink for command reports."""

    @abstractmethod
    def render(self, title: str, report: dict[str, Any]) -> None:
        """Write one report."""
        pass


class JsonRenderer(ReportRenderer):
    """Prints the report as JSON on stdout; identical input gives identical bytes."""

    def __init__(self, indent: int = 2, stream: TextIO | None = None):
        self.indent = indent
        self.stream = stream

    def render(self, title: str, report: dict[str, Any]) -> None:
        stream = self.stream or sys.stdout
        stream.write(dump_json(report, self.indent))
        stream.write("\n")


class ConsoleRenderer(ReportRenderer):
    """Human-readable rendering with rich, or plain text when rich is missing."""

    def __init__(self, use_rich: bool = True, stream: TextIO | None = None):
        """
        Initialize console renderer.

        Args:
            use_rich: Whether to use rich library for formatting.
            stream: Output stream, stdout by default.
        """
        self.use_rich = use_rich
        self.stream = stream
        self._console = None

        if use_rich:
            try:
                from rich.console import Console
                self._console = Console(file=stream) if stream is not None else Console()
            except ImportError:
                self.use_rich = False

    def render(self, title: str, report: dict[str, Any]) -> None:
        if self.use_rich and self._console:
            self._render_rich(title, report)
        else:
            self._render_plain(title, report)

    @staticmethod
    def _verdict_style(report: dict[str, Any]) -> str:
        for key in ("passed", "complete", "admissible", "compatible", "casimir"):
            if isinstance(report.get(key), bool):
                return "bold green" if report[key] else "bold red"
        return "bold cyan"

    def _render_rich(self, title: str, report: dict[str, Any]) -> None:
        from rich.panel import Panel
        from rich.pretty import Pretty
        from rich.table import Table

        table = Table(show_header=False, box=None, pad_edge=False)
        table.add_column(style="bold")
        table.add_column()
        for key, value in report.items():
            if isinstance(value, (dict, list)):
                table.add_row(key, Pretty(value, expand_all=False))
            else:
                table.add_row(key, str(value))
        self._console.print(Panel(table, title=title, style=self._verdict_style(report), expand=False))

    def _render_plain(self, title: str, report: dict[str, Any]) -> None:
        stream = self.stream or sys.stdout
        print(f"\n[{title.upper()}]", file=stream)
        print("-" * 40, file=stream)
        for key, value in report.items():
            if isinstance(value, (dict, list)):
                print(f"{key}:", file=stream)
                for line in dump_json(value, 2).splitlines():
                    print(f"  {line}", file=stream)
            else:
                print(f"{key}: {value}", file=stream)
        print("-" * 40, file=stream)


def make_renderer(fmt: str, use_rich: bool = True, indent: int = 2) -> ReportRenderer:
    if fmt == "text":
        return ConsoleRenderer(use_rich=use_rich)
    return JsonRenderer(indent=indent)
