"""Catalog of known finite N-quandle cardinalities.

The data file ``data/cardinalities.txt`` keeps one row per link family
and N shape: either a list of exact values keyed by N tuple, or a
closed form in the parameters k, n, p, q.  Rows marked in-scope name
the builtin family that realizes them, so the whole catalog can be
re-enumerated and compared against its own expected values (see
``iter_checks`` and the verify-catalog CLI command).
"""

from __future__ import annotations

import ast
import operator
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from .presentations import Presentation, augment_n, builtin_family

_DATA_PATH = Path(__file__).parent / "data" / "cardinalities.txt"


class CatalogError(KeyError):
    """Unknown row, N tuple outside a row, or out-of-scope request."""


@dataclass(frozen=True)
class CatalogEntry:
    row_id: str
    link: str
    n_shape: str
    expected: str
    in_repo_scope: bool
    family: str
    provenance: str
    notes: str

    @property
    def exact_values(self) -> dict[tuple[int, ...], int] | None:
        """Parsed exact-value list, or None for a closed-form row."""
        if "=" not in self.expected:
            return None
        out: dict[tuple[int, ...], int] = {}
        for part in self.expected.split(";"):
            tuple_text, _, value = part.strip().partition("=")
            ns = tuple(int(t) for t in re.findall(r"\d+", tuple_text))
            out[ns] = int(value)
        return out


_ALLOWED_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
}


def _eval_formula(text: str, env: Mapping[str, int]) -> int:
    """Evaluate a closed form: ints, + - *, abs(), and row parameters."""

    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise CatalogError(f"formula parameter {node.id!r} not supplied")
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _ALLOWED_BINOPS:
            return _ALLOWED_BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id == "abs" and len(node.args) == 1):
            return abs(ev(node.args[0]))
        raise CatalogError(f"unsupported formula syntax in {text!r}")

    return ev(ast.parse(text, mode="eval"))


def load_catalog() -> list[CatalogEntry]:
    entries = []
    for line in _DATA_PATH.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 8:
            raise ValueError(f"catalog row needs 8 columns: {line!r}")
        row_id, link, n_shape, expected, scope, family, provenance, notes = cols
        entries.append(CatalogEntry(
            row_id=row_id,
            link=link,
            n_shape=n_shape,
            expected=expected,
            in_repo_scope=scope == "in",
            family=family,
            provenance=provenance,
            notes=notes,
        ))
    return entries


_CATALOG: list[CatalogEntry] | None = None


def catalog() -> list[CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = load_catalog()
    return _CATALOG


def _row(row_id: str) -> CatalogEntry:
    for entry in catalog():
        if entry.row_id == row_id:
            return entry
    raise CatalogError(f"no catalog row {row_id!r}")


def expected_cardinality(row_id: str, n_values: Sequence[int],
                         **params: int) -> int:
    """Expected size for a catalog row at the given N and parameters.

    ``row_id`` may also name a parity-split family bare ("T2k", "Lk");
    the parity of k picks the row.  Raises CatalogError when the row or
    the N tuple is unknown.
    """
    ns = tuple(int(n) for n in n_values)
    if row_id in ("T2k", "Lk"):
        if "k" not in params:
            raise CatalogError(f"{row_id} needs k")
        row_id = f"{row_id}-{'odd' if params['k'] % 2 else 'even'}"
    entry = _row(row_id)
    exact = entry.exact_values
    if exact is not None:
        if ns not in exact:
            raise CatalogError(f"row {entry.row_id} has no value for N={ns}")
        return exact[ns]
    env = dict(params)
    env.setdefault("n", ns[-1])
    return _eval_formula(entry.expected, env)


@dataclass(frozen=True)
class CatalogCheck:
    """One executable comparison: enumerate ``presentation`` and expect
    ``expected`` elements."""

    row_id: str
    label: str
    presentation: Presentation
    expected: int


def _family_presentation(family: str, k: int | None = None) -> Presentation:
    """Resolve a catalog family column like "T24" or "T2k:3"."""
    name, _, arg = family.partition(":")
    if arg:
        k = int(arg)
    if name in ("T2k", "Lk", "Mk"):
        return builtin_family(name, k=k)
    return builtin_family(name)


def iter_checks(k_values: Sequence[int] = tuple(range(-6, 7)),
                n_values: Sequence[int] = (2, 3, 4, 5)) -> Iterator[CatalogCheck]:
    """Executable checks for every in-scope row.

    Parameterized rows sweep k over ``k_values`` (filtered to the row's
    parity, zero excluded where the family demands) and n over
    ``n_values``; exact rows yield one check per recorded N tuple.
    """
    for entry in catalog():
        if not entry.in_repo_scope:
            continue
        exact = entry.exact_values
        if exact is not None:
            for ns, expected in sorted(exact.items()):
                p = augment_n(_family_presentation(entry.family), ns)
                yield CatalogCheck(entry.row_id, f"N={ns}", p, expected)
            continue
        if entry.row_id.startswith("T2k"):
            want_odd = entry.row_id.endswith("odd")
            for k in k_values:
                if k == 0 or (k % 2 != 0) != want_odd:
                    continue
                ns = (2,) if want_odd else (2, 2)
                p = augment_n(_family_presentation("T2k", k), ns)
                yield CatalogCheck(entry.row_id, f"k={k} N={ns}", p, abs(k))
        elif entry.row_id.startswith("Lk"):
            want_odd = entry.row_id.endswith("odd")
            for k in k_values:
                if k == 0 or (k % 2 != 0) != want_odd:
                    continue
                for n in n_values:
                    ns = (2, n) if want_odd else (2, 2, n)
                    p = augment_n(_family_presentation("Lk", k), ns)
                    yield CatalogCheck(
                        entry.row_id, f"k={k} N={ns}", p, n * abs(k) + 2
                    )
        elif entry.row_id == "Mk":
            for k in k_values:
                p = _family_presentation("Mk", k)
                yield CatalogCheck(
                    entry.row_id, f"k={k} N=(2, 3)", p, 18 * abs(2 * k - 1) + 8
                )
        else:  # pragma: no cover - data file and code must agree
            raise ValueError(f"no sweep rule for catalog row {entry.row_id}")
