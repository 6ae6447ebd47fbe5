"""Package data for symquandle.

This package intentionally contains non-code resources (schema, example instances)
so they can be accessed via importlib.resources in installed mode.
"""
