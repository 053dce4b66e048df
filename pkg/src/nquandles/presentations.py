"""Presentations of link quandles and their N-quandle quotients.

A presentation lists generators (one per arc of a link diagram), a
link-component index for each generator, primary relations of the shape
base^word = target, and optionally an N tuple: one integer per link
component.  The N tuple imposes x^(g^n_i) = x for every element x and
every generator g on component i; quotienting a link quandle by those
relations gives its N-quandle.

Two kinds of input produce presentations: a small text format (see
``parse_presentation``) and link diagrams given as crossing lists (see
``wirtinger``).  A library of named presentations used throughout the
test suite and catalog lives in ``builtin_family``.

Text format, one statement per line (';' also separates statements,
'#' starts a comment):

    gens a b c
    comp a:1 b:1 c:2
    N 2 3
    rel a^[b a b]=a

``gens`` declares generators in order.  ``comp`` assigns 1-based link
component indices (generators default to component 1 when no comp
statement appears).  ``N`` gives one integer per component.  ``rel``
traces word letters left to right; a trailing apostrophe marks the
inverse letter, e.g. ``c'``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .words import (
    Expression,
    Letter,
    Word,
    concat,
    invert,
    power,
    reduce,
    word_str,
)


class PresentationError(ValueError):
    """Structurally invalid presentation or family parameters."""


class ParseError(ValueError):
    """Syntax error in presentation text, with position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column


class DiagramError(ValueError):
    """Inconsistent crossing data in a diagram."""


_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class PrimaryRelation:
    """base^word = target, all generator indices, word reduced."""

    base: int
    word: Word
    target: int


@dataclass(frozen=True)
class UniversalRelation:
    """y^word = y imposed at every element y; word reduced, nonempty."""

    word: Word


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    component_of: tuple[int, ...]
    n_values: tuple[int, ...] | None
    relations: tuple[PrimaryRelation, ...]

    def __post_init__(self):
        names = self.generator_names
        if not names:
            raise PresentationError("a presentation needs at least one generator")
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names")
        for name in names:
            if not _NAME_RE.fullmatch(name):
                raise PresentationError(f"bad generator name {name!r}")
        if len(self.component_of) != len(names):
            raise PresentationError("component_of must assign every generator")
        comps = set(self.component_of)
        m = max(comps)
        if comps != set(range(1, m + 1)):
            missing = sorted(set(range(1, m + 1)) - comps)
            raise PresentationError(f"components {missing} have no generator")
        if self.n_values is not None:
            if len(self.n_values) != m:
                raise PresentationError(
                    f"expected {m} n-values, got {len(self.n_values)}"
                )
            if any(n < 1 for n in self.n_values):
                raise PresentationError("n-values must be positive")
        g = len(names)
        for rel in self.relations:
            if not (0 <= rel.base < g and 0 <= rel.target < g):
                raise PresentationError("relation references unknown generator")
            if reduce(rel.word) != rel.word:
                raise PresentationError("relation word is not reduced")
            for gen, sign in rel.word:
                if not (0 <= gen < g) or sign not in (1, -1):
                    raise PresentationError("bad letter in relation word")

    @property
    def component_count(self) -> int:
        return max(self.component_of)

    def n_of_generator(self, gen: int) -> int:
        if self.n_values is None:
            raise PresentationError("presentation has no n-values")
        return self.n_values[self.component_of[gen] - 1]

    def generator_index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}") from None


def augment_n(p: Presentation, n_values: Sequence[int]) -> Presentation:
    """Attach (or replace) the N tuple; length must match components."""
    return replace(p, n_values=tuple(int(n) for n in n_values))


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse space-separated letters like ``b a b'`` against a name list."""
    letters: list[Letter] = []
    index = {name: i for i, name in enumerate(names)}
    for token in text.split():
        sign = 1
        if token.endswith("'"):
            sign = -1
            token = token[:-1]
        if token not in index:
            raise PresentationError(f"unknown generator {token!r} in word")
        letters.append((index[token], sign))
    return reduce(letters)


_REL_RE = re.compile(r"^(\w+)\s*\^\s*\[([^\]]*)\]\s*=\s*(\w+)$")


def parse_presentation(text: str) -> Presentation:
    """Parse the text format described in the module docstring."""
    gens: list[str] = []
    comp: dict[str, int] = {}
    comp_pos: dict[str, tuple[int, int]] = {}
    n_values: tuple[int, ...] | None = None
    raw_rels: list[tuple[str, str, str, int]] = []

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            col = raw_line.index(stmt.split()[0]) + 1
            keyword, _, rest = stmt.partition(" ")
            rest = rest.strip()
            if keyword == "gens":
                tokens = rest.split()
                if not tokens:
                    raise ParseError("gens needs at least one name", line_no, col)
                for token in tokens:
                    if not _NAME_RE.fullmatch(token):
                        raise ParseError(f"bad generator name {token!r}", line_no, col)
                    if token in gens:
                        raise ParseError(f"duplicate generator {token!r}", line_no, col)
                    gens.append(token)
            elif keyword == "comp":
                for token in rest.split():
                    name, sep, num = token.partition(":")
                    if not sep or not num.isdigit():
                        raise ParseError(f"expected name:index, got {token!r}", line_no, col)
                    comp[name] = int(num)
                    comp_pos[name] = (line_no, col)
            elif keyword == "N":
                if n_values is not None:
                    raise ParseError("duplicate N statement", line_no, col)
                tokens = rest.split()
                if not tokens or not all(t.isdigit() for t in tokens):
                    raise ParseError("N needs positive integers", line_no, col)
                n_values = tuple(int(t) for t in tokens)
            elif keyword == "rel":
                match = _REL_RE.match(rest)
                if not match:
                    raise ParseError("expected rel name^[letters]=name", line_no, col)
                raw_rels.append((match.group(1), match.group(2), match.group(3), line_no))
            else:
                raise ParseError(f"unknown statement {keyword!r}", line_no, col)

    if not gens:
        raise ParseError("no gens statement", 1)
    for name in comp:
        if name not in gens:
            line_no, col = comp_pos[name]
            raise ParseError(f"comp references unknown generator {name!r}", line_no, col)
    component_of = tuple(comp.get(name, 1) for name in gens)

    index = {name: i for i, name in enumerate(gens)}
    relations = []
    for base, word_text, target, line_no in raw_rels:
        for name in (base, target):
            if name not in index:
                raise ParseError(f"rel references unknown generator {name!r}", line_no)
        try:
            word = parse_word(word_text, gens)
        except PresentationError as exc:
            raise ParseError(str(exc), line_no) from None
        relations.append(PrimaryRelation(index[base], word, index[target]))

    try:
        return Presentation(tuple(gens), component_of, n_values, tuple(relations))
    except PresentationError as exc:
        raise ParseError(str(exc), 1) from None


def print_presentation(p: Presentation) -> str:
    """Deterministic text form; parse(print(p)) == p."""
    names = p.generator_names
    lines = ["gens " + " ".join(names)]
    lines.append("comp " + " ".join(f"{n}:{c}" for n, c in zip(names, p.component_of)))
    if p.n_values is not None:
        lines.append("N " + " ".join(str(n) for n in p.n_values))
    for rel in p.relations:
        word = " ".join(names[g] + ("" if s > 0 else "'") for g, s in rel.word)
        lines.append(f"rel {names[rel.base]}^[{word}]={names[rel.target]}")
    return "\n".join(lines) + "\n"


def secondary_relations(p: Presentation) -> list[UniversalRelation]:
    """Universal relations y^w = y implied by the presentation.

    First the N relations, one per generator g on component i:
    w = g^(n_i); short words that collapse early.  Then one relation per
    primary base^w = target: the conjugate w' base w target', which says
    every element is fixed by that consequence of the primary.  The
    returned order is the order the enumerator traces at each vertex.
    """
    if p.n_values is None:
        raise PresentationError("secondary relations need n-values; call augment_n")
    out: list[UniversalRelation] = []
    for gen in range(len(p.generator_names)):
        n = p.n_of_generator(gen)
        out.append(UniversalRelation(((gen, 1),) * n))
    for rel in p.relations:
        word = concat(
            invert(rel.word), ((rel.base, 1),), rel.word, ((rel.target, -1),)
        )
        out.append(UniversalRelation(word))
    return out


# --- diagrams -------------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    over: str
    under_in: str
    under_out: str
    sign: int


@dataclass(frozen=True)
class Diagram:
    """Crossing list plus arc -> 1-based link-component map.

    Arc names follow the component map's insertion order everywhere the
    order matters (generator numbering, printing).
    """

    crossings: tuple[Crossing, ...]
    arc_component: Mapping[str, int]


def parse_diagram(text: str) -> Diagram:
    """Read the JSON-lines diagram format.

    One JSON object per non-blank line.  Exactly one line carries
    {"arc_components": {...}}; every other line is a crossing with keys
    over, under_in, under_out, sign (sign is "+", "-", 1, or -1).
    """
    crossings: list[Crossing] = []
    arc_component: dict[str, int] | None = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"line {line_no}: bad JSON ({exc.msg})") from None
        if not isinstance(obj, dict):
            raise DiagramError(f"line {line_no}: expected a JSON object")
        if "arc_components" in obj:
            if arc_component is not None:
                raise DiagramError(f"line {line_no}: duplicate arc_components")
            raw = obj["arc_components"]
            if not isinstance(raw, dict):
                raise DiagramError(f"line {line_no}: arc_components must be a map")
            arc_component = {str(k): int(v) for k, v in raw.items()}
            continue
        try:
            sign_raw = obj["sign"]
            sign = {"+": 1, "-": -1, 1: 1, -1: -1}[sign_raw]
            crossing = Crossing(
                str(obj["over"]), str(obj["under_in"]), str(obj["under_out"]), sign
            )
        except KeyError as exc:
            raise DiagramError(f"line {line_no}: missing or bad field {exc}") from None
        crossings.append(crossing)
    if arc_component is None:
        raise DiagramError("no arc_components line")
    for c in crossings:
        for arc in (c.over, c.under_in, c.under_out):
            if arc not in arc_component:
                raise DiagramError(f"crossing references unknown arc {arc!r}")
    return Diagram(tuple(crossings), arc_component)


def print_diagram(d: Diagram) -> str:
    lines = [json.dumps({"arc_components": dict(d.arc_component)}, sort_keys=False)]
    for c in d.crossings:
        lines.append(
            json.dumps(
                {
                    "over": c.over,
                    "under_in": c.under_in,
                    "under_out": c.under_out,
                    "sign": "+" if c.sign > 0 else "-",
                }
            )
        )
    return "\n".join(lines) + "\n"


def wirtinger(d: Diagram) -> Presentation:
    """Presentation read off a diagram: one generator per arc, one
    relation per crossing.

    A positive crossing with over arc j, incoming under arc k, and
    outgoing under arc i contributes i = k^j; a negative crossing uses
    the inverse letter, i = k^(j').  N is left unset; attach it with
    ``augment_n``.
    """
    arcs = list(d.arc_component.keys())
    index = {arc: i for i, arc in enumerate(arcs)}
    seen_out: dict[str, int] = {}
    for pos, c in enumerate(d.crossings):
        for arc in (c.over, c.under_in, c.under_out):
            if arc not in index:
                raise DiagramError(f"crossing {pos}: arc {arc!r} not in arc_components")
        if c.under_out in seen_out:
            raise DiagramError(
                f"arc {c.under_out!r} is the outgoing under-arc of two crossings"
            )
        seen_out[c.under_out] = pos
        if d.arc_component[c.under_in] != d.arc_component[c.under_out]:
            raise DiagramError(
                f"crossing {pos}: under-arcs {c.under_in!r} and {c.under_out!r} "
                "lie on different components"
            )
    relations = tuple(
        PrimaryRelation(index[c.under_in], ((index[c.over], c.sign),), index[c.under_out])
        for c in d.crossings
    )
    component_of = tuple(d.arc_component[arc] for arc in arcs)
    return Presentation(tuple(arcs), component_of, None, relations)


def closed_braid_diagram(braid_word: Sequence[int], strands: int) -> Diagram:
    """Diagram of a closed braid.

    ``braid_word`` lists crossings bottom to top: +i crosses the strand
    at position i over the strand at position i+1 (1-based), -i crosses
    it under.  Arcs are named x0, x1, ... in creation order; the closure
    identifies the top of each strand position with its bottom.
    """
    if strands < 1:
        raise DiagramError("need at least one strand")
    for letter in braid_word:
        if letter == 0 or abs(letter) >= strands:
            raise DiagramError(f"braid letter {letter} out of range")

    fresh = 0

    def new_arc() -> int:
        nonlocal fresh
        fresh += 1
        return fresh - 1

    # Positions carry (arc id, start position of the strand); the start
    # position doubles as the strand's identity.
    at = [(new_arc(), p) for p in range(strands)]
    strand_of_arc = {p: p for p in range(strands)}
    crossings: list[tuple[int, int, int, int]] = []
    for letter in braid_word:
        i = abs(letter) - 1
        (arc_a, strand_a), (arc_b, strand_b) = at[i], at[i + 1]
        out = new_arc()
        if letter > 0:
            # Strand at position i passes over; the under strand breaks.
            strand_of_arc[out] = strand_b
            crossings.append((arc_a, arc_b, out, 1))
            at[i], at[i + 1] = (out, strand_b), (arc_a, strand_a)
        else:
            strand_of_arc[out] = strand_a
            crossings.append((arc_b, arc_a, out, -1))
            at[i], at[i + 1] = (arc_b, strand_b), (out, strand_a)

    # Closure: the arc ending at the top of position p is the arc that
    # started at the bottom of position p (initial arcs have id p).
    rep = list(range(fresh))

    def find(a: int) -> int:
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    for p in range(strands):
        a, b = find(at[p][0]), find(p)
        if a != b:
            rep[max(a, b)] = min(a, b)

    # Link components = cycles of the strand permutation.
    end_pos = {strand: p for p, (_, strand) in enumerate(at)}
    comp_of_start: dict[int, int] = {}
    comp = 0
    for start in range(strands):
        if start in comp_of_start:
            continue
        comp += 1
        p = start
        while p not in comp_of_start:
            comp_of_start[p] = comp
            p = end_pos[p]

    name = {}
    arc_component: dict[str, int] = {}
    for arc in range(fresh):
        r = find(arc)
        if r not in name:
            name[r] = f"x{len(name)}"
            arc_component[name[r]] = comp_of_start[strand_of_arc[r]]
    out_crossings = tuple(
        Crossing(name[find(over)], name[find(under_in)], name[find(under_out)],
                 sign)
        for over, under_in, under_out, sign in crossings
    )
    return Diagram(out_crossings, arc_component)


# --- named presentations --------------------------------------------------


def _mk(names: str, comps: Sequence[int], rels: Iterable[tuple[str, Word, str]],
        n_values: Sequence[int] | None) -> Presentation:
    gens = tuple(names.split())
    index = {g: i for i, g in enumerate(gens)}
    relations = tuple(
        PrimaryRelation(index[b], reduce(w), index[t]) for b, w, t in rels
    )
    n = tuple(n_values) if n_values is not None else None
    return Presentation(gens, tuple(comps), n, relations)


def _letters(text: str, names: str) -> Word:
    return parse_word(text, tuple(names.split()))


def _even_torus(m: int) -> Presentation:
    """T(2,2m) with one generator per component: a^((ba)^(m-1) b) = a
    and the same with a, b swapped."""
    w1 = concat(power(_letters("b a", "a b"), m - 1), _letters("b", "a b"))
    w2 = concat(power(_letters("a b", "a b"), m - 1), _letters("a", "a b"))
    return _mk("a b", (1, 2), [("a", w1, "a"), ("b", w2, "b")], None)


def _family_lk(k: int) -> Presentation:
    """Torus link T(2,k) together with its axis circle c.

    Odd k = 2t+1: components (a,b | c); even k = 2t: a, b, c each on
    their own component.  Negative k resolves negative powers into
    inverse letters.
    """
    if k == 0:
        raise PresentationError("k must be nonzero for the axis family")
    ab = _letters("a b", "a b c")
    ba = _letters("b a", "a b c")
    if k % 2:
        t = (k - 1) // 2
        rels = [
            ("c", ab, "c"),
            ("a", concat(power(ba, t), _letters("b c", "a b c")), "b"),
            ("b", concat(power(ab, t), _letters("c", "a b c")), "a"),
        ]
        return _mk("a b c", (1, 1, 2), rels, None)
    t = k // 2
    rels = [
        ("c", ab, "c"),
        ("a", concat(power(ba, t - 1), _letters("b c", "a b c")), "a"),
        ("b", concat(power(ab, t), _letters("c", "a b c")), "b"),
    ]
    return _mk("a b c", (1, 2, 3), rels, None)


def _family_mk(k: int) -> Presentation:
    """Twist knot with k full twists together with its axis circle c.

    The two-sided relations collapse to base^word = target form:
    a^(c a c' a) = a^(c' a c) becomes a^(c a c' a c' a' c) = a, and
    a^(c' a c) = b^((ab)^(k-1)) becomes a^(c' a c (b' a')^(k-1)) = b.
    """
    names = "a b c"
    rels = [
        ("c", _letters("b a", names), "c"),
        ("a", concat(_letters("c a c' a", names), invert(_letters("c' a c", names))), "a"),
        ("a", concat(_letters("c' a c", names), power(_letters("a b", names), -(k - 1))), "b"),
    ]
    return _mk(names, (1, 1, 2), rels, (2, 3))


_FIXED_WORDS = {
    "T24": ("b a b", "a b a"),
    "T26": ("b a b a b", "a b a b a"),
    "T28": ("b a b a b a b", "a b a b a b a"),
    "T210": ("b a b a b a b a b", "a b a b a b a b a"),
}


def builtin_family(family: str, k: int | None = None,
                   n_values: Sequence[int] | None = None) -> Presentation:
    """Named presentations.

    Fixture families (no parameter): T24, T26, T28, T210, T24C, T33,
    T34, T35, trefoil, hopf.  Parameterized: T2k (closed 2-braid torus
    link, k nonzero), Lk (torus link plus axis, k nonzero), Mk (twist
    knot plus axis, any k).  A "Wirtinger:" prefix is accepted and
    ignored for the diagram-backed names.  ``n_values``, when given, is
    attached with ``augment_n``; T24C defaults to N = (2, 3, 2) and Mk
    to N = (2, 3).
    """
    name = family.removeprefix("Wirtinger:")
    needs_k = {"T2k", "Lk", "Mk"}
    if name in needs_k:
        if k is None:
            raise PresentationError(f"family {name} needs k")
    elif k is not None:
        raise PresentationError(f"family {name} takes no k")

    if name in _FIXED_WORDS:
        w1, w2 = _FIXED_WORDS[name]
        p = _mk("a b", (1, 2),
                [("a", _letters(w1, "a b"), "a"), ("b", _letters(w2, "a b"), "b")],
                None)
    elif name == "T24C":
        rels = [
            ("a", _letters("b a b c", "a b c"), "a"),
            ("b", _letters("a b a b c", "a b c"), "b"),
            ("c", _letters("a b", "a b c"), "c"),
        ]
        p = _mk("a b c", (1, 2, 3), rels, (2, 3, 2))
    elif name == "T33":
        rels = [
            ("a", _letters("c b", "a b c"), "a"),
            ("b", _letters("a c", "a b c"), "b"),
            ("c", _letters("b a", "a b c"), "c"),
        ]
        p = _mk("a b c", (1, 2, 3), rels, None)
    elif name == "Lk":
        p = _family_lk(k)
    elif name == "Mk":
        p = _family_mk(k)
    elif name == "T2k":
        if k == 0:
            raise PresentationError("k must be nonzero for T2k")
        p = wirtinger(closed_braid_diagram([1 if k > 0 else -1] * abs(k), 2))
    elif name == "trefoil":
        p = wirtinger(closed_braid_diagram([1, 1, 1], 2))
    elif name == "hopf":
        p = wirtinger(closed_braid_diagram([1, 1], 2))
    elif name in ("T34", "T35"):
        q = 4 if name == "T34" else 5
        p = wirtinger(closed_braid_diagram([1, 2] * q, 3))
    else:
        raise PresentationError(f"unknown family {family!r}")

    if n_values is not None:
        p = augment_n(p, n_values)
    return p
