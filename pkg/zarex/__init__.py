__version__ = "0.1.0"
__all__ = [
    "cli",
    "config",
    "constructions",
    "errors",
    "extremal",
    "grid",
    "matrix",
    "search",
    "types",
    "util",
    "verify",
]
