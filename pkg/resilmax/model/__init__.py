"""
Problem model: ground sets, objectives, matroids and instances.
"""
