"""
Command-line tools for ppart.
"""
