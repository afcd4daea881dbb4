"""Built-in intercategories and the table-backed loader."""

from .duoidal import DuoidalInstance, build_duoidal
from .spancospan import SpanCospanInstance, build_span_cospan
from .table import TableInstance, build_table_instance, build_terminal, build_z2, load_table_instance

__all__ = [
    "DuoidalInstance",
    "SpanCospanInstance",
    "TableInstance",
    "build_duoidal",
    "build_span_cospan",
    "build_table_instance",
    "build_terminal",
    "build_z2",
    "load_table_instance",
]
