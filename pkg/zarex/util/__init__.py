__all__ = [
    # Directory modules
    "config",
    "logging",
]
