"""Main quandlepilot module.

See ../README.md for documentation.

algebra/ holds the pure algebra (groups, linear algebra over Z/2^e,
quandle tables, Onoi rings, central extensions). search/ holds the cocycle
solver, the quandle libraries, the constructions, the search driver and the
command line. shared/ holds configuration, logging and text formats.
"""
