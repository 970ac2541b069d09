"""3-SAT to tight-Euler-tour reduction with certificates in both directions.

Each variable ``x_i`` becomes a copy ``H^i`` of the torus gadget ``H_{l_i}``,
each clause a copy of the tight cycle ``C_6``, and one spine cycle on ``2t``
vertices links the gadgets. Cycle vertex pairs are identified with gadget
vertex pairs (the connectors), so every cycle vertex ends up inside some
gadget and ``|V| = 3 * sum(l_i)``.

Satisfying assignments turn into Euler tours by gluing gadget tours of type
T/F, clause cycles and the spine along shared connectors; Euler tours turn
back into assignments by reading the ordering type of gadget edges.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .generators import HellLabels, OrderingType, gen_h_ell, ordering_type, tour_of_type
from .hypercore import Hypergraph, WalkSeq, build, verify_euler

MAP_SCHEMA = "tighteuler.reduction-map/1"


class CnfError(ValueError):
    pass


class ReductionError(RuntimeError):
    """A certificate failed a structural check."""


@dataclass
class CnfFormula:
    """3-CNF over variables ``1..t``; literals are signed ints, DIMACS style.

    ``names[i-1]`` is the variable number ``i`` had in the source file.
    """

    t: int
    clauses: list[tuple[int, int, int]]
    names: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.names:
            self.names = list(range(1, self.t + 1))

    @property
    def p(self) -> int:
        return len(self.clauses)

    def tautologies(self) -> list[int]:
        """Indices of clauses containing a variable and its negation."""
        return [j for j, c in enumerate(self.clauses) if any(-lit in c for lit in c)]

    def occurrences(self) -> list[int]:
        occ = [0] * self.t
        for c in self.clauses:
            for lit in c:
                occ[abs(lit) - 1] += 1
        return occ

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    t = None
    lits: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: bad problem line {line!r}")
            try:
                t = int(parts[2])
                int(parts[3])
            except ValueError:
                raise CnfError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if t is None:
            raise CnfError(f"line {lineno}: clause before problem line")
        try:
            lits.extend(int(x) for x in line.split())
        except ValueError:
            raise CnfError(f"line {lineno}: non-integer literal in {line!r}") from None
    if t is None:
        raise CnfError("missing 'p cnf' problem line")
    clauses: list[tuple[int, int, int]] = []
    cur: list[int] = []
    for lit in lits:
        if lit == 0:
            if len(cur) != 3:
                raise CnfError(f"clause {cur} does not have exactly three literals")
            clauses.append(tuple(cur))
            cur = []
        elif abs(lit) > t:
            raise CnfError(f"literal {lit} out of range 1..{t}")
        else:
            cur.append(lit)
    if cur:
        raise CnfError(f"unterminated clause {cur}")
    return CnfFormula(t, clauses)


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.t} {f.p}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(lines) + "\n"


def preprocess(f: CnfFormula) -> CnfFormula:
    """Drop tautological clauses and renumber the remaining variables densely."""
    kept = []
    for c in f.clauses:
        if any(-lit in c for lit in c):
            continue
        if len({abs(lit) for lit in c}) != 3:
            raise CnfError(f"clause {list(c)} repeats a variable")
        kept.append(c)
    used = sorted({abs(lit) for c in kept for lit in c})
    if len(used) < 2:
        raise CnfError(f"reduction needs at least 2 variables, got {len(used)}")
    new = {v: i + 1 for i, v in enumerate(used)}
    clauses = [tuple(new[abs(l)] * (1 if l > 0 else -1) for l in c) for c in kept]
    return CnfFormula(len(used), clauses, [f.names[v - 1] for v in used])


def ell_for(occ: int) -> int:
    """Smallest l >= 2*occ + 3 with l % 3 != 1."""
    ell = 2 * occ + 3
    return ell + 1 if ell % 3 == 1 else ell


@dataclass
class Connector:
    pair: tuple[int, int]
    kind: str  # "spine" | "clause"
    variable: int
    clause: int | None = None
    occurrence: int | None = None
    positive: bool | None = None


@dataclass
class VariableGadget:
    index: int
    ell: int
    vertex_ids: list[int]  # local H_l id -> global id


@dataclass
class ClauseGadget:
    index: int
    cycle_vertex_ids: list[int]
    connectors: list[Connector]


@dataclass
class ReductionMap:
    variables: list[VariableGadget]
    clauses: list[ClauseGadget]
    spine_vertex_ids: list[int]
    spine_connectors: list[Connector]

    @property
    def connectors(self) -> list[Connector]:
        return self.spine_connectors + [c for cl in self.clauses for c in cl.connectors]

    def to_json(self) -> dict:
        return {
            "schema": MAP_SCHEMA,
            "variables": [asdict(v) for v in self.variables],
            "clauses": [asdict(c) for c in self.clauses],
            "spine": {"vertex_ids": self.spine_vertex_ids,
                      "connectors": [asdict(c) for c in self.spine_connectors]},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict) -> ReductionMap:
        if data.get("schema") != MAP_SCHEMA:
            raise ReductionError(f"unsupported map schema {data.get('schema')!r}")

        def conn(d):
            d = dict(d)
            d["pair"] = tuple(d["pair"])
            return Connector(**d)

        return cls(
            [VariableGadget(v["index"], v["ell"], list(v["vertex_ids"])) for v in data["variables"]],
            [ClauseGadget(c["index"], list(c["cycle_vertex_ids"]),
                          [conn(x) for x in c["connectors"]]) for c in data["clauses"]],
            list(data["spine"]["vertex_ids"]),
            [conn(x) for x in data["spine"]["connectors"]],
        )


def _cycle_edges(ids: Sequence[int]) -> list[tuple[int, int, int]]:
    s = len(ids)
    return [(ids[i], ids[(i + 1) % s], ids[(i + 2) % s]) for i in range(s)]


def reduce(f: CnfFormula) -> tuple[Hypergraph, ReductionMap]:
    """Build the 3-uniform hypergraph for a preprocessed formula."""
    if f.t < 2:
        raise CnfError("reduction needs t >= 2")
    if f.tautologies():
        raise CnfError("formula has tautological clauses; run preprocess first")
    for c in f.clauses:
        if len({abs(lit) for lit in c}) != 3:
            raise CnfError(f"clause {list(c)} repeats a variable")
    occ = f.occurrences()
    if 0 in occ:
        raise CnfError(f"variable {occ.index(0) + 1} never occurs; run preprocess first")
    variables: list[VariableGadget] = []
    edges: list[tuple[int, ...]] = []
    offset = 0
    for i in range(1, f.t + 1):
        ell = ell_for(occ[i - 1])
        ids = list(range(offset, offset + 3 * ell))
        offset += 3 * ell
        variables.append(VariableGadget(i, ell, ids))
        h_local, _ = gen_h_ell(ell)
        edges.extend(tuple(ids[v] for v in sorted(e)) for e in h_local.edges)

    seen = [0] * f.t
    clauses: list[ClauseGadget] = []
    for j, c in enumerate(f.clauses, 1):
        cyc: list[int] = []
        conns: list[Connector] = []
        for lit in sorted(c, key=abs):
            i = abs(lit)
            seen[i - 1] += 1
            o = seen[i - 1]
            g = variables[i - 1]
            lab = HellLabels(g.ell)
            first = lab.b(2 * o) if lit > 0 else lab.a(2 * o)
            pair = (g.vertex_ids[first], g.vertex_ids[lab.a(2 * o + 1)])
            cyc.extend(pair)
            conns.append(Connector(pair, "clause", i, j, o, lit > 0))
        clauses.append(ClauseGadget(j, cyc, conns))
        edges.extend(_cycle_edges(cyc))

    spine: list[int] = []
    spine_conns: list[Connector] = []
    for g in variables:
        lab = HellLabels(g.ell)
        pair = (g.vertex_ids[lab.a(g.ell - 1)], g.vertex_ids[lab.b(g.ell - 1)])
        spine.extend(pair)
        spine_conns.append(Connector(pair, "spine", g.index))
    edges.extend(_cycle_edges(spine))

    h = build(3, offset, edges)
    return h, ReductionMap(variables, clauses, spine, spine_conns)


def _find_pair(seq: Sequence[int], x: int, y: int) -> int | None:
    s = len(seq)
    for i in range(s):
        if seq[i] == x and seq[(i + 1) % s] == y:
            return i
    return None


def glue(a: Sequence[int], b: Sequence[int], x: int, y: int) -> list[int]:
    """Splice edge-disjoint closed tours that both pass through the pair (x, y).

    ``a`` must traverse x then y; ``b`` may traverse the pair either way and
    is reversed if needed.
    """
    i = _find_pair(a, x, y)
    if i is None:
        raise ReductionError(f"pair ({x}, {y}) is not consecutive in the host tour")
    b = list(b)
    jb = _find_pair(b, x, y)
    if jb is None:
        b.reverse()
        jb = _find_pair(b, x, y)
        if jb is None:
            raise ReductionError(f"pair ({x}, {y}) is not consecutive in the guest tour")
    a = list(a)
    return a[i:] + a[:i] + b[jb:] + b[:jb]


def _orient(seq: list[int], x: int, y: int) -> list[int]:
    return seq if _find_pair(seq, x, y) is not None else seq[::-1]


def tour_from_assignment(f: CnfFormula, rmap: ReductionMap,
                         assignment: Sequence[bool]) -> WalkSeq:
    """Glue gadget, clause and spine tours into an Euler tour of ``reduce(f)``.

    Each clause cycle is attached to the gadget of its lowest-index true
    literal; any true literal would do.
    """
    assignment = [bool(v) for v in assignment]
    if len(assignment) != f.t:
        raise ReductionError(f"assignment has {len(assignment)} values, expected {f.t}")
    if not f.evaluate(assignment):
        raise ReductionError("assignment does not satisfy the formula")
    tours: list[list[int]] = []
    for g, value in zip(rmap.variables, assignment):
        kind = OrderingType.T if value else OrderingType.F
        local = tour_of_type(g.ell, kind).walk.verts
        tours.append([g.vertex_ids[v] for v in local])
    for cl in rmap.clauses:
        conn = next(c for c in cl.connectors if assignment[c.variable - 1] == c.positive)
        x, y = conn.pair
        host = _orient(tours[conn.variable - 1], x, y)
        tours[conn.variable - 1] = glue(host, cl.cycle_vertex_ids, x, y)
    result = list(rmap.spine_vertex_ids)
    for conn in rmap.spine_connectors:
        x, y = conn.pair
        result = glue(_orient(result, x, y), tours[conn.variable - 1], x, y)
    return WalkSeq(result, closed=True)


def assignment_from_tour(f: CnfFormula, rmap: ReductionMap, tour: WalkSeq,
                         h: Hypergraph | None = None) -> list[bool]:
    """Read a truth assignment off an Euler tour of ``reduce(f)``.

    Every gadget edge is classified, not just one, and all orderings inside a
    gadget must share one type, T or F.
    """
    if h is None:
        h, _ = reduce(f)
    verdict = verify_euler(h, tour)
    if verdict.kind != "euler_tour":
        raise ReductionError(f"not an Euler tour of the reduction: {verdict}")
    owner: dict[int, tuple[int, int]] = {}
    for gi, g in enumerate(rmap.variables):
        for local, v in enumerate(g.vertex_ids):
            owner[v] = (gi, local)
    types: list[set[OrderingType]] = [set() for _ in rmap.variables]
    seq = tour.verts
    s = len(seq)
    for i in range(s):
        tri = (seq[i], seq[(i + 1) % s], seq[(i + 2) % s])
        gis = {owner[v][0] for v in tri}
        if len(gis) != 1:
            continue
        gi = gis.pop()
        local = tuple(owner[v][1] for v in tri)
        hl, _ = _gadget(rmap.variables[gi].ell)
        if hl.has_edge(local):
            types[gi].add(ordering_type(rmap.variables[gi].ell, local, local))
    assignment = []
    for g, ts in zip(rmap.variables, types):
        if len(ts) != 1 or ts & {OrderingType.N}:
            raise ReductionError(
                f"gadget of variable {g.index} has mixed ordering types {sorted(t.value for t in ts)}")
        assignment.append(ts.pop() is OrderingType.T)
    if not f.evaluate(assignment):
        raise ReductionError("decoded assignment does not satisfy the formula")
    return assignment


_GADGETS: dict[int, Hypergraph] = {}


def _gadget(ell: int) -> tuple[Hypergraph, HellLabels]:
    if ell not in _GADGETS:
        _GADGETS[ell] = gen_h_ell(ell)[0]
    return _GADGETS[ell], HellLabels(ell)


def sat_brute_force(f: CnfFormula) -> list[bool] | None:
    """First satisfying assignment in counting order (all-false first), or None."""
    if f.t > 24:
        raise CnfError(f"brute force limited to t <= 24, got {f.t}")
    for bits in itertools.product((False, True), repeat=f.t):
        if f.evaluate(bits):
            return list(bits)
    return None


def to_original(f: CnfFormula, assignment: Sequence[bool], t_original: int) -> list[bool]:
    """Lift an assignment of the renumbered formula to the source variables."""
    out = [False] * t_original
    for name, value in zip(f.names, assignment):
        out[name - 1] = bool(value)
    return out


def from_original(f: CnfFormula, assignment: Sequence[bool]) -> list[bool]:
    return [bool(assignment[name - 1]) for name in f.names]
