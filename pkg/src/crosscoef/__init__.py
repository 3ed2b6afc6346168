"""Integrals of products of orthogonal polynomials: cross-rule fill, closed forms, quadrature."""

from . import cases, crossrule, families, legendre_assoc, oracle, recurrence

__all__ = ["cases", "crossrule", "families", "legendre_assoc", "oracle", "recurrence"]
