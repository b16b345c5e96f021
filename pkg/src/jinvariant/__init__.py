"""Motivic J-invariant of orthogonal groups and algebras with orthogonal involution."""

__version__ = "0.1.0"
