"""Exact spectral toolkit for regular and biregular graphs."""
