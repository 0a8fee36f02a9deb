"""
Report persistence: CSV and JSON files under the output directory, echoed to stdout.
"""

import csv
import io
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from pydantic import BaseModel

from src.config.constants import CSV_COLUMNS, JSON_ONLY_COMMANDS
from src.config.settings import settings
from src.schemas.common import ReportEnvelope
from src.schemas.config import RunConfig
from src.utils.exceptions import ValidationError
from src.utils.helpers import format_number
from src.utils.logger import log_with_context

logger = logging.getLogger(__name__)


class ReportService:
    """Service for rendering and writing command reports"""

    def output_format(self, command: str, config: RunConfig) -> str:
        return "json" if command in JSON_ONLY_COMMANDS else config.format

    def rows(self, reports: Sequence[BaseModel]) -> List[Dict[str, Any]]:
        """Flatten reports into CSV rows (histograms expand to one row per V)"""
        rows = []
        for report in reports:
            if hasattr(report, "rows"):
                rows.extend(report.rows())
            else:
                rows.append(report.model_dump())
        return rows

    def header_lines(self, config: RunConfig) -> List[str]:
        """
        '#' lines for a CSV file: tool version plus the result-affecting
        config. No timestamp, so identical runs give identical files.
        """
        lines = [f"# tool_version={settings.VERSION}"]
        snapshot = config.result_snapshot()
        params = snapshot.pop("params", {})
        for key in sorted(snapshot):
            lines.append(f"# {key}={format_number(snapshot[key])}")
        for key in sorted(params):
            lines.append(f"# params.{key}={format_number(params[key])}")
        return lines

    def render_csv(self, command: str, reports: Sequence[BaseModel], config: RunConfig) -> str:
        columns = CSV_COLUMNS.get(command)
        if columns is None:
            raise ValidationError(f"No CSV layout for {command!r}", field="format")

        buffer = io.StringIO()
        for line in self.header_lines(config):
            buffer.write(line + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in self.rows(reports):
            writer.writerow([format_number(row.get(column)) for column in columns])
        return buffer.getvalue()

    def render_json(
        self,
        reports: Sequence[BaseModel],
        config: RunConfig,
        command_line: Sequence[str],
    ) -> str:
        envelope = ReportEnvelope.wrap(
            list(reports),
            tool_version=settings.VERSION,
            command_line=list(command_line),
            config=config,
        )
        return envelope.model_dump_json(indent=2) + "\n"

    def write(
        self,
        command: str,
        reports: Sequence[BaseModel],
        config: RunConfig,
        command_line: Sequence[str],
        stream: Optional[TextIO] = None,
    ) -> Path:
        """
        Write <output_dir>/<command>.<csv|json> and echo it.

        Args:
            command: Subcommand name
            reports: Report models of one type
            config: Resolved run configuration
            command_line: argv of the run
            stream: Echo target (default: stdout)

        Returns:
            Path of the written file
        """
        fmt = self.output_format(command, config)
        if fmt == "csv":
            text = self.render_csv(command, reports, config)
        else:
            text = self.render_json(reports, config, command_line)

        out_dir = Path(config.output_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"{command}.{fmt}"
        path.write_text(text, encoding="utf-8")

        (stream or sys.stdout).write(text)
        log_with_context(logger, "INFO", "Report written", command=command, path=str(path),
                         records=len(reports))
        return path


# Create global instance
report_service = ReportService()

__all__ = ["ReportService", "report_service"]
