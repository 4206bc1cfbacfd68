"""CSV-to-image renderer for the rescaled-residual figure."""

from .render import FigureCsvRow, main, read_rows, render

__version__ = "0.1.0"
