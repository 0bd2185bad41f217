"""Module for simulating syndrome based error detection on entangled states"""
__version__ = "1.0.0"
