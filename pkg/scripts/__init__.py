"""n-gon surface toolkit.

The ngs package holds the library; ngon.py is the command-line interface.
"""
