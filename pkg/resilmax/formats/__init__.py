"""
File formats.
"""
