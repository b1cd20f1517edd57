import logging
import os
from io import StringIO
from typing import Any, Iterable, Sequence

from rich import box
from rich.console import Console, Group
from rich.panel import Panel
from rich.rule import Rule
from rich.syntax import Syntax
from rich.table import Table

from src.utils import (
    escape_code_brackets,
    Singleton
)

YELLOW_HEX = "#d4b702"


def _resolve_level(level: int | str | None) -> int:
    if level is None:
        level = os.getenv("FINSLER_LOG_LEVEL", "INFO")
    if isinstance(level, str):
        value = getattr(logging, level.upper(), logging.INFO)
        return value if isinstance(value, int) else logging.INFO
    return int(level)


class FinslerLogger(logging.Logger, metaclass=Singleton):
    def __init__(self, name="finsler", level=logging.INFO):
        super().__init__(name, level)

        self.formatter = logging.Formatter(
            fmt="\033[92m%(asctime)s - %(name)s:%(levelname)s\033[0m: %(filename)s:%(lineno)s - %(message)s",
            datefmt="%H:%M:%S",
        )

        # stdout carries reports; rich output goes to stderr until a log file is attached
        self.console = Console(stderr=True)
        self.file_console = Console(file=StringIO())
        self._initialized = False

    def init_logger(self, log_path: str, level: int | str | None = None) -> None:
        """
        Attach a stderr console handler and an append-mode file handler.

        Args:
            log_path (str): The log file path.
            level (int | str, optional): Logging level; defaults to FINSLER_LOG_LEVEL or INFO.
        """
        level = _resolve_level(level)
        self.setLevel(level)

        for handler in list(self.handlers):
            self.removeHandler(handler)
            handler.close()

        console_handler = logging.StreamHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(self.formatter)
        self.addHandler(console_handler)

        file_handler = logging.FileHandler(log_path, mode="a", encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(self.formatter)
        self.addHandler(file_handler)

        self.console = Console(width=100, stderr=True, legacy_windows=False)
        self.file_console = Console(
            file=open(log_path, "a", encoding="utf-8"),
            width=100,
            force_terminal=False,
            legacy_windows=False
        )

        self.propagate = False
        self._initialized = True

    def info(self, msg, *args, **kwargs):
        """
        Renders rich objects to both consoles; plain messages go through logging.
        """
        if isinstance(msg, (Rule, Panel, Group, Table, Syntax)):
            if self.isEnabledFor(logging.INFO):
                self.console.print(msg)
                self.file_console.print(msg)
        else:
            kwargs.setdefault("stacklevel", 2)
            kwargs.pop("style", None)
            kwargs.pop("level", None)
            super().info(msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().warning(msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().error(msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().debug(msg, *args, **kwargs)

    def log_error(self, error_message: str) -> None:
        self.error(escape_code_brackets(error_message), stacklevel=3)

    def log_rule(self, title: str) -> None:
        self.info(
            Rule(
                "[bold]" + title,
                characters="━",
                style=YELLOW_HEX,
            )
        )

    def log_table(self, title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        table = Table(title=title, show_header=True, header_style="bold", box=box.SIMPLE)
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*[escape_code_brackets(str(cell)) for cell in row])
        self.info(table)

    def log_report(self, title: str, content: str) -> None:
        self.info(
            Panel(
                Syntax(content, lexer="json", theme="github-dark", word_wrap=True),
                title="[bold]" + title,
                title_align="left",
                box=box.HORIZONTALS,
            )
        )


logger = FinslerLogger()
