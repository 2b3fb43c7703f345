"""
Command modules for dpwheel

This package contains all CLI command implementations.
"""
