"""
Local file access.
"""
