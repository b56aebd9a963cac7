"""Knot fixture tables: ``name<TAB>gauss-code<TAB>c0 c1 c2 ...`` per line."""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import IntPolynomial
from .errors import GaussCodeError, InvalidCode, ParseError
from .gauss import GaussDiagram, parse_gauss_code


@dataclass(frozen=True)
class KnotFixture:
    name: str
    code: str
    expected: IntPolynomial

    @property
    def diagram(self) -> GaussDiagram:
        return parse_gauss_code(self.code)


def parse_fixture_lines(lines) -> list[KnotFixture]:
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ParseError(f"expected 3 tab-separated fields, got {len(fields)}", lineno)
        name, code, coeffs = fields
        if not name.strip():
            raise ParseError("empty fixture name", lineno)
        if not coeffs.strip():
            raise ParseError("empty coefficient list", lineno)
        try:
            expected = IntPolynomial.parse_machine(coeffs)
        except ValueError:
            raise ParseError(f"bad coefficient list {coeffs!r}", lineno) from None
        try:
            parse_gauss_code(code)
        except GaussCodeError as exc:
            raise InvalidCode(f"{name}: {exc}", lineno) from None
        out.append(KnotFixture(name.strip(), code.strip(), expected))
    return out


def load_fixture_table(path: str | os.PathLike) -> list[KnotFixture]:
    with open(path, encoding="utf-8") as fh:
        return parse_fixture_lines(fh)


def bundled_table_path() -> Path:
    return Path(str(resources.files("pvconway") / "data" / "knots.tsv"))


def bundled_fixtures() -> list[KnotFixture]:
    return load_fixture_table(bundled_table_path())
