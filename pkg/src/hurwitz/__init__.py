"""Exact counting of transitive d-cycle factorizations and the
cut-and-join type operators acting on truncated power sum series."""
