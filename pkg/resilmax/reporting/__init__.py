"""
Console, JSON and CSV reporting.
"""
