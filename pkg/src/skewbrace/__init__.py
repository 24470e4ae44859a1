"""Finite skew braces: arithmetic, ideals, series, enumeration and Yang-Baxter solutions."""
