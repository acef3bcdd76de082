"""The search for non-affine latin quandles, and the command line.

cocycles.py
    Assembles and solves the linear system for Z_LD(F, A, psi).

library.py
    Libraries of latin quandles of order 2^m, m <= 5.

driver.py
    SearchDriver, which runs every (A, psi, F) work unit and writes the
    SearchReport.

constructions.py
    The explicit non-affine latin quandles of orders 2^(4j) and 2^(6j),
    products, and the existence recipe for any k.

start_cli.py
    The command line: verify, construct, solve-cocycles, search,
    isomorphic, library.
"""
