"""Command-line surface: parse description files, compute, print.

Input grammar (line oriented; ``#`` starts a comment; blank lines ignored)::

    elements: <n>                       # or an explicit label list: a b c
    order: <e1> <e2> ... <en>           # optional, ascending <; default natural
    matroid <name> circuits: {1,2} {3}  # or: matroid <name> bases: {1} {2}
    graph <name> edges: 1=u-v 2=v-w     # edge labels are the elements
    identify: u=v w=x                   # second matroid from the graph stanza

One matroid stanza makes a single-matroid document (commands lift it to the
perspective (M, M)); two stanzas, or a graph stanza plus ``identify:``, make
a perspective document whose first matroid is M and second is M'.

Exit codes are a contract: 0 success, 1 parse/input error, 2 invalid
perspective, 3 property-check failure.
"""

import argparse
import random
import re
import sys
from dataclasses import dataclass

from .bijection import backward, bijection_table, forward
from .compatible import compatible_family
from .errors import AxiomError, DomainError, ParseError, PerspectiveError
from .graphic import Multigraph, cycle_matroid, identify_vertices
from .matroid import Matroid
from .perspective import Perspective
from .polynomial import Poly
from .setcore import MAX_ELEMENTS, GroundSet
from .tutte import tutte_activities, tutte_compatible, tutte_rank_generating

SET_RE = re.compile(r"\{([^{}]*)\}")
METHODS = {
    "activities": tutte_activities,
    "compatible": tutte_compatible,
    "rank-gen": tutte_rank_generating,
}


@dataclass(frozen=True)
class Stanza:
    kind: str  # "circuits" | "bases" | "graph"
    name: str
    payload: tuple  # masks for matroid stanzas, (label, u, v) triples for graphs
    line: int


@dataclass(frozen=True)
class InputDocument:
    labels: tuple  # display label per element, index 1..n at position i-1
    int_labels: bool
    ground: GroundSet
    natural_order: bool
    stanzas: tuple
    identify_classes: tuple | None  # partition of the graph's vertices, or None

    @property
    def is_perspective(self) -> bool:
        return len(self.stanzas) == 2 or self.identify_classes is not None

    def fmt(self, mask: int) -> str:
        names = (self.labels[e - 1] for e in self.ground.labels(mask))
        return "{" + ",".join(names) + "}"

    def semantic_key(self):
        return (self.labels, self.ground.order, self.stanzas_key(), self.identify_classes)

    def stanzas_key(self):
        return tuple((s.kind, s.name, tuple(sorted(s.payload))) for s in self.stanzas)


def parse_input(text: str) -> InputDocument:
    """Parse a description file.  Raises ParseError with the offending line."""
    labels = None
    int_labels = False
    label_index = {}
    order = None
    stanzas = []
    identify_pairs = None
    identify_line = None

    def need_elements(no):
        if labels is None:
            raise ParseError("'elements:' must come before this line", no)

    def parse_set(token, no):
        members = []
        body = token.strip()
        if body:
            for part in body.split(","):
                part = part.strip()
                if part not in label_index:
                    raise ParseError(f"unknown element {part!r}", no)
                members.append(label_index[part])
        mask = 0
        for e in members:
            mask |= 1 << (e - 1)
        return mask

    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        keyword = head.split()[0] if head.split() else ""

        if keyword == "elements":
            if not sep:
                raise ParseError("expected 'elements: ...'", no)
            if labels is not None:
                raise ParseError("duplicate 'elements:' line", no)
            tokens = rest.split()
            if len(tokens) == 1 and tokens[0].isdigit():
                n = int(tokens[0])
                labels = tuple(str(i) for i in range(1, n + 1))
                int_labels = True
            else:
                if len(set(tokens)) != len(tokens):
                    raise ParseError("duplicate element labels", no)
                labels = tuple(tokens)
            if len(labels) > MAX_ELEMENTS:
                raise ParseError(f"{len(labels)} elements exceeds the limit of {MAX_ELEMENTS}", no)
            label_index = {lbl: i for i, lbl in enumerate(labels, start=1)}
        elif keyword == "order":
            need_elements(no)
            if order is not None:
                raise ParseError("duplicate 'order:' line", no)
            tokens = rest.split()
            try:
                order = tuple(label_index[t] for t in tokens)
            except KeyError as e:
                raise ParseError(f"unknown element {e.args[0]!r} in order", no) from None
            if sorted(order) != list(range(1, len(labels) + 1)):
                raise ParseError("order must list every element exactly once", no)
        elif keyword == "matroid":
            need_elements(no)
            m = re.fullmatch(r"matroid\s+(\S+)\s+(circuits|bases)", head.strip())
            if not m or not sep:
                raise ParseError("expected 'matroid <name> circuits: ...' or 'matroid <name> bases: ...'", no)
            name, kind = m.group(1), m.group(2)
            sets = [parse_set(s, no) for s in SET_RE.findall(rest)]
            if SET_RE.sub("", rest).strip():
                raise ParseError(f"unexpected text {SET_RE.sub('', rest).strip()!r} in set list", no)
            _add_stanza(stanzas, Stanza(kind, name, tuple(sets), no), no)
        elif keyword == "graph":
            need_elements(no)
            m = re.fullmatch(r"graph\s+(\S+)\s+edges", head.strip())
            if not m or not sep:
                raise ParseError("expected 'graph <name> edges: ...'", no)
            edges = []
            for token in rest.split():
                lbl, eq, ends = token.partition("=")
                u, dash, v = ends.partition("-")
                if not eq or not dash or not u or not v:
                    raise ParseError(f"bad edge {token!r}; expected label=u-v", no)
                if lbl not in label_index:
                    raise ParseError(f"unknown element {lbl!r}", no)
                edges.append((label_index[lbl], u, v))
            _add_stanza(stanzas, Stanza("graph", m.group(1), tuple(edges), no), no)
        elif keyword == "identify":
            need_elements(no)
            if identify_pairs is not None:
                raise ParseError("duplicate 'identify:' line", no)
            pairs = []
            for token in rest.split():
                u, eq, v = token.partition("=")
                if not eq or not u or not v:
                    raise ParseError(f"bad identification {token!r}; expected u=v", no)
                pairs.append((u, v))
            identify_pairs = tuple(pairs)
            identify_line = no
        else:
            raise ParseError(f"unrecognized line {line!r}", no)

    if labels is None:
        raise ParseError("missing 'elements:' declaration")
    if not stanzas:
        raise ParseError("no matroid or graph stanza")
    if identify_pairs is not None:
        if len(stanzas) != 1 or stanzas[0].kind != "graph":
            raise ParseError(
                "'identify:' needs exactly one graph stanza and no other matroid stanza",
                identify_line,
            )

    ground = GroundSet(len(labels), order=order)
    classes = None
    if identify_pairs is not None:
        classes = _classes_from_pairs(stanzas[0], identify_pairs, identify_line)
    return InputDocument(
        labels=labels,
        int_labels=int_labels,
        ground=ground,
        natural_order=order is None or order == tuple(range(1, len(labels) + 1)),
        stanzas=tuple(stanzas),
        identify_classes=classes,
    )


def _add_stanza(stanzas, stanza, no):
    if any(s.name == stanza.name for s in stanzas):
        raise ParseError(f"duplicate stanza name {stanza.name!r}", no)
    if len(stanzas) >= 2:
        raise ParseError("at most two matroid/graph stanzas are allowed", no)
    stanzas.append(stanza)


def _graph_from_stanza(stanza: Stanza) -> Multigraph:
    vertices = tuple(dict.fromkeys(x for _, u, v in stanza.payload for x in (u, v)))
    return Multigraph(vertices=vertices, edges=stanza.payload)


def _classes_from_pairs(graph_stanza, pairs, line):
    g = _graph_from_stanza(graph_stanza)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for u, v in pairs:
        if u not in parent or v not in parent:
            raise ParseError(f"unknown vertex in identification {u}={v}", line)
        parent[find(u)] = find(v)
    groups = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(members) for members in groups.values())


def document_matroids(doc: InputDocument) -> list:
    """Build the (name, Matroid) pairs a document describes, in order."""
    out = []
    for stanza in doc.stanzas:
        try:
            if stanza.kind == "circuits":
                m = Matroid.from_circuits(doc.ground, stanza.payload)
            elif stanza.kind == "bases":
                m = Matroid.from_bases(doc.ground, stanza.payload)
            else:
                m = cycle_matroid(_graph_from_stanza(stanza), doc.ground)
        except AxiomError as e:
            raise AxiomError(f"in stanza {stanza.name!r} (line {stanza.line}): {e}") from e
        out.append((stanza.name, m))
    if doc.identify_classes is not None:
        g = _graph_from_stanza(doc.stanzas[0])
        merged = identify_vertices(g, doc.identify_classes)
        out.append((doc.stanzas[0].name + "'", cycle_matroid(merged, doc.ground)))
    return out


def document_perspective(doc: InputDocument) -> Perspective:
    """The document's perspective; single-matroid documents lift to (M, M)."""
    ms = document_matroids(doc)
    if len(ms) == 1:
        return Perspective(ms[0][1], ms[0][1])
    return Perspective(ms[0][1], ms[1][1])


def serialize_input(doc: InputDocument) -> str:
    """Canonical text form; parse(serialize(doc)) has doc's semantic content."""
    lines = []
    if doc.int_labels:
        lines.append(f"elements: {len(doc.labels)}")
    else:
        lines.append("elements: " + " ".join(doc.labels))
    if not doc.natural_order:
        lines.append("order: " + " ".join(doc.labels[e - 1] for e in doc.ground.order))
    for s in doc.stanzas:
        if s.kind == "graph":
            edges = " ".join(f"{doc.labels[l - 1]}={u}-{v}" for l, u, v in s.payload)
            lines.append(f"graph {s.name} edges: {edges}")
        else:
            sets = " ".join(doc.fmt(mask) for mask in s.payload)
            lines.append(f"matroid {s.name} {s.kind}: {sets}".rstrip())
    if doc.identify_classes is not None:
        pairs = [
            f"{members[0]}={v}"
            for members in doc.identify_classes
            if len(members) > 1
            for v in members[1:]
        ]
        if pairs:
            lines.append("identify: " + " ".join(pairs))
        else:
            lines.append("identify:")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_tutte(doc: InputDocument, method: str = "activities") -> str:
    """Canonical polynomial string for the document's perspective."""
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; choose from {sorted(METHODS)}")
    return str(METHODS[method](document_perspective(doc)))


def cmd_table(doc: InputDocument) -> str:
    """TSV bijection table: columns B, Int, Ext, X, Term."""
    p = document_perspective(doc)
    lines = ["B\tInt\tExt\tX\tTerm"]
    for row in bijection_table(p):
        term = str(Poly.monomial(*row.monomial))
        lines.append(
            "\t".join((doc.fmt(row.b), doc.fmt(row.internal), doc.fmt(row.external),
                       doc.fmt(row.x), term))
        )
    return "\n".join(lines)


def cmd_compatible(doc: InputDocument) -> str:
    """The compatible family, one set per line, ascending size then lex."""
    p = document_perspective(doc)
    family = sorted(compatible_family(p), key=doc.ground.size_lex_key)
    return "\n".join(doc.fmt(x) for x in family)


def cmd_check(doc: InputDocument, seed: int = 0) -> tuple:
    """Run the full property suite; returns (report text, all passed)."""
    p = document_perspective(doc)
    results = [("perspective validation", True, "")]

    def run(name, fn):
        try:
            detail = fn()
            results.append((name, True, detail or ""))
        except _CheckFailure as e:
            results.append((name, False, str(e)))

    rows = bijection_table(p)
    family = compatible_family(p)
    family_set = set(family)

    def round_trips():
        for row in rows:
            if row.x not in family_set:
                raise _CheckFailure(f"f({doc.fmt(row.b)}) = {doc.fmt(row.x)} is not compatible")
            if backward(p, row.x) != row.b:
                raise _CheckFailure(f"g(f(B)) != B at B = {doc.fmt(row.b)}")
        valid = {row.b for row in rows}
        for x in family:
            b = backward(p, x)
            if b not in valid:
                raise _CheckFailure(
                    f"g({doc.fmt(x)}) = {doc.fmt(b)} is not independent-and-spanning"
                )
            if forward(p, b) != x:
                raise _CheckFailure(f"f(g(X)) != X at X = {doc.fmt(x)}")
        if len(family) != len(rows):
            raise _CheckFailure(f"|D| = {len(family)} but {len(rows)} valid sets")

    def intervals():
        seen = {}
        for row in rows:
            lower = row.b & ~row.internal
            free = (row.b | row.external) & ~lower
            t = 0
            while True:
                s = lower | t
                if s in seen:
                    raise _CheckFailure(
                        f"{doc.fmt(s)} lies in the intervals of both "
                        f"{doc.fmt(seen[s])} and {doc.fmt(row.b)}"
                    )
                seen[s] = row.b
                if t == free:
                    break
                t = (t - free) & free
        missing = (1 << doc.ground.size) - len(seen)
        if missing:
            raise _CheckFailure(f"{missing} subsets not covered by any interval")

    def agreement():
        a = tutte_activities(p)
        c = tutte_compatible(p)
        r = tutte_rank_generating(p)
        if not (a == c == r):
            raise _CheckFailure(
                f"activities {a} | compatible {c} | rank-generating {r}"
            )
        return f"T = {a}; max z exponent {a.max_z_exponent()}"

    def order_invariance():
        base = tutte_activities(p)
        rng = random.Random(seed)
        n = doc.ground.size
        for i in range(10):
            perm = rng.sample(range(1, n + 1), n)
            ground = GroundSet(n, order=perm)
            reordered = Perspective(
                Matroid(ground, p.matroid.bases, validate=False),
                Matroid(ground, p.quotient.bases, validate=False),
            )
            other = tutte_activities(reordered)
            if other != base:
                raise _CheckFailure(f"order {perm} gave {other} instead of {base}")

    run("bijection round trips (f, g mutually inverse between valid sets and D)", round_trips)
    run("interval partition of the power set", intervals)
    run("polynomial agreement (activities = compatible = rank-gen)", agreement)
    run(f"order invariance (10 orders, seed {seed})", order_invariance)

    ok = all(passed for _, passed, _ in results)
    lines = []
    for name, passed, detail in results:
        mark = "ok" if passed else "FAIL"
        lines.append(f"{mark:4s} {name}" + (f": {detail}" if detail else ""))
    lines.append("all checks passed" if ok else "CHECKS FAILED")
    return "\n".join(lines), ok


class _CheckFailure(Exception):
    pass


# -- entry point ------------------------------------------------------------

def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="mptutte",
        description="Tutte polynomials of matroid perspectives: "
        "activities and compatible-sets expansions, bijection tables, property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("--input", metavar="FILE", help="description file (default: stdin)")
        return c

    tutte_cmd = add("tutte", "print the Tutte polynomial")
    tutte_cmd.add_argument(
        "--method", choices=sorted(METHODS), default="activities",
        help="expansion to use (all agree; default: activities)",
    )
    add("table", "print the bijection table as TSV")
    add("compatible", "print the compatible family, one set per line")
    check_cmd = add("check", "run the property suite against the input")
    check_cmd.add_argument("--seed", type=int, default=0, help="seed for the random element orders")

    args = parser.parse_args(argv)
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        doc = parse_input(text)
        if args.command == "tutte":
            print(cmd_tutte(doc, args.method))
        elif args.command == "table":
            print(cmd_table(doc))
        elif args.command == "compatible":
            print(cmd_compatible(doc))
        else:
            report, ok = cmd_check(doc, seed=args.seed)
            print(report)
            if not ok:
                return 3
    except (ParseError, AxiomError, DomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except PerspectiveError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
