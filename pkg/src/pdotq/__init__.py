"""Exact q-series arithmetic and congruence certificates for the
designated-summand partition counters."""
