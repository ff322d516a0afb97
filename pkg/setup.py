# Shim for pip versions that cannot install pyproject.toml-only projects in editable mode.
# All metadata lives in pyproject.toml.

from setuptools import setup
setup()
