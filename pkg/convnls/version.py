"""Set the current pypi version"""
__version__ = '0.1.0'
