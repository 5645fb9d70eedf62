"""Tests package for qrrt."""
