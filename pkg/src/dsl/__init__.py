"""
Identity DSL module for the q-series toolkit.

A small text language for sum-product identities, its parser and
renderer, exact evaluation to truncated series, and the shipped catalog
of identities.
"""

from .catalog import (
    CATALOG_SUFFIX,
    CatalogEntry,
    catalog_paths,
    default_orders,
    find_entry,
    load_catalog,
    load_entry,
    parse_entry,
    verify_entry,
)
from .evaluator import evaluate, verify
from .nodes import (
    Add,
    APow,
    Const,
    IdentityAST,
    InfProduct,
    Mul,
    Neg1Pow,
    Node,
    Poch,
    QPow,
    Sum,
)
from .parser import parse, parse_expression, validate_expression
from .polynomial import IndexPolynomial
from .render import render, render_expression

__all__ = [
    "CATALOG_SUFFIX",
    "CatalogEntry",
    "catalog_paths",
    "default_orders",
    "find_entry",
    "load_catalog",
    "load_entry",
    "parse_entry",
    "verify_entry",
    "evaluate",
    "verify",
    "Add",
    "APow",
    "Const",
    "IdentityAST",
    "InfProduct",
    "Mul",
    "Neg1Pow",
    "Node",
    "Poch",
    "QPow",
    "Sum",
    "parse",
    "parse_expression",
    "validate_expression",
    "IndexPolynomial",
    "render",
    "render_expression",
]
