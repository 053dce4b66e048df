"""Finite quandles as sealed action tables.

A sealed quandle stores, for each generator, the permutation x -> x^g
of the element set {0, ..., size-1} and its inverse.  Every element
carries a witness expression a^w recording how the enumeration first
reached it; the full binary operation is recovered from witnesses by

    x > (a^w)  =  x^(w' a w)

walked through the generator tables.  Orbits, point symmetries, axiom
verification, isomorphism testing, and the DOT / JSON exports all work
from this representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .presentations import PrimaryRelation
from .words import Expression, expression_str, invert


@dataclass(frozen=True)
class FiniteQuandle:
    """Immutable finite quandle with generator action tables.

    action[g][x] is x^g, inverse_action[g][x] is x^(g').  Elements are
    0-based; generator_element maps a generator index to the element
    representing it.  relations carries the defining primary relations
    when the quandle came out of an enumeration (used to prune
    isomorphism searches); hand-built tables may leave it empty.
    """

    size: int
    generator_names: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]
    inverse_action: tuple[tuple[int, ...], ...]
    generator_element: tuple[int, ...]
    component_of_generator: tuple[int, ...]
    n_values: tuple[int, ...]
    witnesses: tuple[Expression, ...]
    relations: tuple[PrimaryRelation, ...] = ()

    def element_name(self, x: int) -> str:
        return expression_str(self.witnesses[x], self.generator_names)


@dataclass
class VerificationReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _step(q: FiniteQuandle, x: int, gen: int, sign: int) -> int:
    table = q.action[gen] if sign > 0 else q.inverse_action[gen]
    return table[x]


def full_op(q: FiniteQuandle, x: int, y: int, sign: int = 1) -> int:
    """x > y (or x >^-1 y when sign = -1) via y's witness a^w.

    Walks x along w', then a with the requested sign, then w.
    """
    expr = q.witnesses[y]
    for gen, s in invert(expr.word):
        x = _step(q, x, gen, s)
    x = _step(q, x, expr.base, sign)
    for gen, s in expr.word:
        x = _step(q, x, gen, s)
    return x


def _column(q: FiniteQuandle, y: int, sign: int = 1) -> list[int]:
    """The permutation x -> x > y as a list, all elements at once."""
    expr = q.witnesses[y]
    vec = list(range(q.size))
    for gen, s in invert(expr.word):
        table = q.action[gen] if s > 0 else q.inverse_action[gen]
        vec = [table[v] for v in vec]
    table = q.action[expr.base] if sign > 0 else q.inverse_action[expr.base]
    vec = [table[v] for v in vec]
    for gen, s in expr.word:
        table = q.action[gen] if s > 0 else q.inverse_action[gen]
        vec = [table[v] for v in vec]
    return vec


def point_symmetry(q: FiniteQuandle, x: int) -> tuple[int, ...]:
    """The symmetry at x: the permutation y -> y > x."""
    return tuple(_column(q, x))


def dense_tables(q: FiniteQuandle) -> tuple[np.ndarray, np.ndarray]:
    """Full operation tables M[x, y] = x > y and its inverse."""
    n = q.size
    fwd = np.empty((n, n), dtype=np.int64)
    bwd = np.empty((n, n), dtype=np.int64)
    for y in range(n):
        fwd[:, y] = _column(q, y, 1)
        bwd[:, y] = _column(q, y, -1)
    return fwd, bwd


def verify_axioms(q: FiniteQuandle) -> VerificationReport:
    """Check the three quandle axioms on the full operation table.

    Idempotence and invertibility are quadratic scans; self-distributivity
    (x>y)>z = (x>z)>(y>z) runs over all size^3 triples.  The first
    violated instance is reported.
    """
    n = q.size
    fwd, bwd = dense_tables(q)
    failures: list[str] = []
    idx = np.arange(n)

    diag = fwd[idx, idx]
    if not np.array_equal(diag, idx):
        x = int(np.nonzero(diag != idx)[0][0])
        failures.append(f"idempotence: {x} > {x} = {int(diag[x])}")

    undo = bwd[fwd, idx[np.newaxis, :]]
    redo = fwd[bwd, idx[np.newaxis, :]]
    want = np.broadcast_to(idx[:, np.newaxis], (n, n))
    if not np.array_equal(undo, want):
        x, y = map(int, np.argwhere(undo != want)[0])
        failures.append(f"invertibility: ({x} > {y}) >' {y} = {int(undo[x, y])}")
    elif not np.array_equal(redo, want):
        x, y = map(int, np.argwhere(redo != want)[0])
        failures.append(f"invertibility: ({x} >' {y}) > {y} = {int(redo[x, y])}")

    for z in range(n):
        col = fwd[:, z]
        lhs = col[fwd]                      # (x>y)>z
        rhs = fwd[np.ix_(col, col)]         # (x>z)>(y>z)
        if not np.array_equal(lhs, rhs):
            x, y = map(int, np.argwhere(lhs != rhs)[0])
            failures.append(
                f"self-distributivity: ({x}>{y})>{z} = {int(lhs[x, y])} but "
                f"({x}>{z})>({y}>{z}) = {int(rhs[x, y])}"
            )
            break

    return VerificationReport(not failures, failures)


@dataclass(frozen=True)
class OrbitPartition:
    orbit_of: tuple[int, ...]
    orbit_count: int

    def sizes(self) -> tuple[int, ...]:
        counts = [0] * self.orbit_count
        for o in self.orbit_of:
            counts[o] += 1
        return tuple(counts)

    def members(self, orbit: int) -> tuple[int, ...]:
        return tuple(x for x, o in enumerate(self.orbit_of) if o == orbit)


def orbits(q: FiniteQuandle) -> OrbitPartition:
    """Connected components under all generator actions.

    Orbits are numbered by their smallest element, in order.
    """
    orbit_of = [-1] * q.size
    count = 0
    for start in range(q.size):
        if orbit_of[start] != -1:
            continue
        stack = [start]
        orbit_of[start] = count
        while stack:
            x = stack.pop()
            for g in range(len(q.generator_names)):
                for y in (q.action[g][x], q.inverse_action[g][x]):
                    if orbit_of[y] == -1:
                        orbit_of[y] = count
                        stack.append(y)
        count += 1
    return OrbitPartition(tuple(orbit_of), count)


def verify_n_relations(q: FiniteQuandle) -> VerificationReport:
    """Check x^(y^n) = x where n belongs to y's orbit.

    Each orbit inherits n from the link component of any generator it
    contains; an orbit containing no generator is itself reported as a
    structural anomaly.
    """
    part = orbits(q)
    failures: list[str] = []
    orbit_n: dict[int, int] = {}
    for gen, el in enumerate(q.generator_element):
        n = q.n_values[q.component_of_generator[gen] - 1]
        orbit = part.orbit_of[el]
        prior = orbit_n.setdefault(orbit, n)
        if prior != n:
            failures.append(
                f"orbit {orbit} holds generators with different n ({prior}, {n})"
            )
    for orbit in range(part.orbit_count):
        if orbit not in orbit_n:
            failures.append(f"orbit {orbit} contains no generator")
    if failures:
        return VerificationReport(False, failures)

    for y in range(q.size):
        n = orbit_n[part.orbit_of[y]]
        col = _column(q, y)
        vec = list(range(q.size))
        for _ in range(n):
            vec = [col[v] for v in vec]
        for x, v in enumerate(vec):
            if v != x:
                failures.append(
                    f"power relation: {x} acted on {n} times by {y} gives {v}"
                )
                break
        if failures:
            break
    return VerificationReport(not failures, failures)


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _invariants(q: FiniteQuandle) -> list[tuple[int, tuple[int, ...]]]:
    part = orbits(q)
    sizes = part.sizes()
    return [
        (sizes[part.orbit_of[x]], _cycle_type(_column(q, x)))
        for x in range(q.size)
    ]


def _extend_by_witnesses(q1: FiniteQuandle, q2: FiniteQuandle,
                         images: Sequence[int]) -> list[int] | None:
    """Extend generator images to all of q1 along witnesses; check the
    result is a bijective homomorphism.  Returns the map or None."""
    phi = []
    for x in range(q1.size):
        expr = q1.witnesses[x]
        val = images[expr.base]
        for gen, sign in expr.word:
            val = full_op(q2, val, images[gen], sign)
        phi.append(val)
    if len(set(phi)) != q1.size:
        return None
    for g in range(len(q1.generator_names)):
        img = images[g]
        for x in range(q1.size):
            if phi[q1.action[g][x]] != full_op(q2, phi[x], img, 1):
                return None
    return phi


def _relation_holds(q2: FiniteQuandle, rel: PrimaryRelation,
                    images: Sequence[int | None]) -> bool:
    val = images[rel.base]
    for gen, sign in rel.word:
        val = full_op(q2, val, images[gen], sign)
    return val == images[rel.target]


def is_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> bool:
    """Backtracking search for an isomorphism q1 -> q2.

    Generator images determine the whole map, so the search branches
    only over images of q1's generators, pruned by orbit size, point
    symmetry cycle type, orbit-to-orbit consistency, and (when q1
    carries its defining relations) by checking each relation as soon
    as all its generators are assigned.
    """
    if q1.size != q2.size:
        return False
    part1, part2 = orbits(q1), orbits(q2)
    if sorted(part1.sizes()) != sorted(part2.sizes()):
        return False
    inv1 = _invariants(q1)
    inv2 = _invariants(q2)
    if sorted(inv1) != sorted(inv2):
        return False

    gens = list(range(len(q1.generator_names)))
    candidates = {
        g: [e for e in range(q2.size) if inv2[e] == inv1[q1.generator_element[g]]]
        for g in gens
    }

    # Order generators greedily so relations become checkable early.
    order: list[int] = []
    remaining = set(gens)
    rels = list(q1.relations)
    while remaining:
        def coverage(g: int) -> tuple[int, int]:
            assigned = set(order) | {g}
            covered = sum(
                1
                for r in rels
                if {r.base, r.target} | {gen for gen, _ in r.word} <= assigned
            )
            return (covered, -len(candidates[g]))
        best = max(sorted(remaining), key=coverage)
        order.append(best)
        remaining.discard(best)

    checks_at: list[list[PrimaryRelation]] = [[] for _ in order]
    seen: set[int] = set()
    scheduled: set[int] = set()
    for depth, g in enumerate(order):
        seen.add(g)
        for i, r in enumerate(rels):
            support = {r.base, r.target} | {gen for gen, _ in r.word}
            if i not in scheduled and support <= seen:
                checks_at[depth].append(r)
                scheduled.add(i)

    images: list[int | None] = [None] * len(gens)
    orbit_map: dict[int, int] = {}

    def dfs(depth: int) -> bool:
        if depth == len(order):
            return _extend_by_witnesses(q1, q2, images) is not None  # type: ignore[arg-type]
        g = order[depth]
        o1 = part1.orbit_of[q1.generator_element[g]]
        for e in candidates[g]:
            o2 = part2.orbit_of[e]
            if o1 in orbit_map:
                if orbit_map[o1] != o2:
                    continue
            elif o2 in orbit_map.values():
                continue
            images[g] = e
            added = o1 not in orbit_map
            if added:
                orbit_map[o1] = o2
            if all(_relation_holds(q2, r, images) for r in checks_at[depth]):
                if dfs(depth + 1):
                    return True
            images[g] = None
            if added:
                del orbit_map[o1]
        return False

    return dfs(0)


_EDGE_STYLES = ("solid", "dashed", "dotted", "bold")


def export_dot(q: FiniteQuandle) -> str:
    """Cayley-style graph in DOT form, deterministic byte for byte.

    One node per element labeled by its witness; per generator one
    styled edge per action pair, drawn without direction whenever the
    action and its inverse agree there (loops always, and any pair the
    generator swaps)."""
    lines = ["digraph quandle {", "  node [shape=ellipse];"]
    for x in range(q.size):
        lines.append(f'  v{x} [label="{q.element_name(x)}"];')
    for g in range(len(q.generator_names)):
        style = _EDGE_STYLES[g % len(_EDGE_STYLES)]
        for x in range(q.size):
            y = q.action[g][x]
            if y == x:
                lines.append(f"  v{x} -> v{x} [style={style}, dir=none];")
            elif q.action[g][y] == x:
                if x < y:
                    lines.append(f"  v{x} -> v{y} [style={style}, dir=none];")
            else:
                lines.append(f"  v{x} -> v{y} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(q: FiniteQuandle) -> str:
    """Adjacency export: element names plus per-generator action arrays."""
    import json

    payload = {
        "size": q.size,
        "generators": list(q.generator_names),
        "generator_element": list(q.generator_element),
        "component_of_generator": list(q.component_of_generator),
        "n_values": list(q.n_values),
        "elements": [q.element_name(x) for x in range(q.size)],
        "action": [list(row) for row in q.action],
        "inverse_action": [list(row) for row in q.inverse_action],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def verify_all(q: FiniteQuandle) -> VerificationReport:
    """Axioms, power relations, and orbit/component correspondence."""
    report = verify_axioms(q)
    failures = list(report.failures)
    n_report = verify_n_relations(q)
    failures.extend(n_report.failures)
    part = orbits(q)
    comps = len(set(q.component_of_generator))
    if part.orbit_count != comps:
        failures.append(
            f"orbit count {part.orbit_count} != link component count {comps}"
        )
    return VerificationReport(not failures, failures)
