"""
Shared utilities: logging, graph text format, expression parser, DOT output
"""
