"""Algebraic crossed products by partial actions of finite inverse semigroups."""

__version__ = "0.1.0"
