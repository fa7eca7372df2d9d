from .color import AREA_COLORS, ColorFormatter
from .trace import TRACE, TraceLogger

__all__ = ["AREA_COLORS", "ColorFormatter", "TraceLogger", "TRACE"]
