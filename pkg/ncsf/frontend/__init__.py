"""Command-line front end for ncsf."""
