"""Exact toolkit for finite Frobenius objects in the category of relations."""
