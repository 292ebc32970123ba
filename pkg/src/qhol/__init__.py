"""Regular subgroups of the holomorph, the quasi-holomorph and its complements."""
from .catalog import build, group_from_spec, table_catalog
from .cli import GroupReport, Options, analyze, render, table
from .errors import BudgetExceeded, InternalCheckError, QholError, SpecError
from .holomorph import build_hol
from .quasi import families

__all__ = ["BudgetExceeded", "GroupReport", "InternalCheckError", "Options", "QholError",
           "SpecError", "analyze", "build", "build_hol", "families", "group_from_spec",
           "render", "table", "table_catalog"]
__version__ = "0.1.0"
