from .base import BaseConfig, BaseMissingError, ConfigUpdateHelper, ConfigValueError
from .file import BaseFileConfig, yaml
from .recursive_dict import RecursiveDict

__all__ = [
    "BaseConfig",
    "BaseMissingError",
    "ConfigUpdateHelper",
    "ConfigValueError",
    "BaseFileConfig",
    "yaml",
    "RecursiveDict",
]
