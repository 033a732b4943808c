"""
Adversary, solvers, verification and benchmarking.
"""
