"""Instance generation, file formats, experiment runner and CLI."""

from . import bench, generators, io  # noqa: F401
