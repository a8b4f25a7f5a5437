"""
Test package for ncsf.

Unit and property tests for every backend module plus the command
line, the HTTP API and the golden matrix files.
"""
