"""Published reference values shipped as data files."""

from __future__ import annotations

import csv
from importlib import resources

from .algebra import IntPolynomial


def _text(name: str) -> str:
    return resources.files("schurcount").joinpath("data", name).read_text()


def _lines(name: str):
    for line in _text(name).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def odd_table() -> dict[tuple[int, int], int]:
    """(p, n) -> number of Schur rings over Z_{p^n}."""
    rows = csv.DictReader(_text("odd_counts.csv").splitlines())
    return {(int(r["p"]), int(r["n"])): int(r["count"]) for r in rows}


def two_table() -> dict[int, int]:
    rows = csv.DictReader(_text("two_counts.csv").splitlines())
    return {int(r["n"]): int(r["count"]) for r in rows}


def omega_polynomial_strings() -> dict[int, str]:
    out = {}
    for line in _lines("omega_polynomials.txt"):
        n, _, poly = line.partition(":")
        out[int(n)] = poly.strip()
    return out


def omega_layer_strings() -> dict[int, list[str]]:
    """n -> [Omega(n,1), ..., Omega(n,n)] as printed."""
    out = {}
    for line in _lines("omega_layers.txt"):
        n, _, rest = line.partition(":")
        out[int(n)] = [s.strip() for s in rest.split(",")]
    return out


def omega_layer_polys() -> dict[int, list[IntPolynomial]]:
    return {n: [IntPolynomial.parse(s) for s in row] for n, row in omega_layer_strings().items()}


def _triangle(name: str) -> list[list[int]]:
    return [[int(v) for v in line.split()] for line in _lines(name)]


def catalan_triangle_rows() -> list[list[int]]:
    return _triangle("catalan_triangle.txt")


def super_catalan_triangle_rows() -> list[list[int]]:
    return _triangle("super_catalan_triangle.txt")


def omega_layer_errata() -> dict[tuple[int, int], tuple[str, str]]:
    """(n, k) -> (printed, corrected) for known misprints in the Omega(n,k) figure."""
    rows = csv.DictReader(_lines("errata.csv"))
    return {(int(r["n"]), int(r["k"])): (r["printed"], r["corrected"]) for r in rows}
