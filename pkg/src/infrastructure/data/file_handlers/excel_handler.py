"""Excel file handling utilities."""

from pathlib import Path
from typing import Dict, Optional

import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from src.domain.exceptions.domain_exceptions import ExportError
from src.infrastructure.config.settings import get_settings


class ExcelHandler:
    """Writes styled summary workbooks."""

    def __init__(self):
        self.settings = get_settings()

    def create_styled_workbook(self) -> Workbook:
        """Create a new workbook with default styling."""
        return Workbook()

    def write_dataframe(self, worksheet, df: pd.DataFrame) -> Dict[str, int]:
        """Write a header row and the frame's rows; return the used range."""
        for col, name in enumerate(df.columns, start=1):
            worksheet.cell(row=1, column=col, value=str(name))
        for row, values in enumerate(df.itertuples(index=False), start=2):
            for col, value in enumerate(values, start=1):
                if hasattr(value, "item"):
                    value = value.item()
                worksheet.cell(row=row, column=col, value=value)
        return {'max_row': len(df) + 1, 'max_col': len(df.columns)}

    def apply_table_styling(self, worksheet, data_range: Dict[str, int],
                            flag_column: Optional[int] = None) -> None:
        """
        Borders and centring on every cell, a filled bold header, and a
        highlight on rows whose ``flag_column`` cell is falsy.
        """
        try:
            style = self.settings.report
            side = Side(style=style.border_style)
            border = Border(left=side, right=side, top=side, bottom=side)
            align = Alignment(horizontal=style.text_alignment, vertical=style.text_alignment)
            header_fill = PatternFill(start_color=style.header_fill_color,
                                      end_color=style.header_fill_color, fill_type="solid")
            failed_fill = PatternFill(start_color=style.failed_fill_color,
                                      end_color=style.failed_fill_color, fill_type="solid")
            bold = Font(bold=True)

            for row in range(1, data_range['max_row'] + 1):
                flagged = (flag_column is not None and row > 1 and
                           not worksheet.cell(row=row, column=flag_column).value)
                for col in range(1, data_range['max_col'] + 1):
                    cell = worksheet.cell(row=row, column=col)
                    cell.border = border
                    cell.alignment = align
                    if row == 1:
                        cell.font = bold
                        cell.fill = header_fill
                    elif flagged:
                        cell.fill = failed_fill

        except Exception as e:
            raise ExportError(f"Error applying styling: {str(e)}")

    def auto_adjust_column_widths(self, worksheet, max_width: Optional[int] = None) -> None:
        """Auto-adjust column widths based on content."""
        max_width = max_width or self.settings.report.max_column_width
        for index, column in enumerate(worksheet.columns, start=1):
            longest = max((len(str(c.value)) for c in column if c.value is not None), default=0)
            worksheet.column_dimensions[get_column_letter(index)].width = min(
                longest + self.settings.report.data_column_width_buffer, max_width
            )

    def save_workbook(self, workbook: Workbook, file_path: Path) -> None:
        """Save a workbook to a file."""
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            workbook.save(file_path)

        except Exception as e:
            raise ExportError(f"Error saving workbook to {file_path}: {str(e)}")
