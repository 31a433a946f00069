"""Ideal triangulations, their sigma-matrices, and embedded multicurves.

A curve component is a cyclic list of crossings ``(edge, slot)``: the curve
crosses ``edge`` and enters the triangle holding the edge's ``slot``-th side
appearance (appearances are listed in triangle order).  Arc ``i`` of the
component runs inside that triangle, from crossing ``i`` to crossing ``i + 1``.

Elevations are given per triangle as the list of its arcs from bottom to top.
The order of the points on each edge is derived from the two adjacent triangles,
which must agree; this keeps every biangle a family of parallel strands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import (
    BadElevation,
    EmptyCurve,
    InconsistentCrossing,
    InvalidTriangulation,
    NotEmbedded,
    UnknownFixture,
)
from .scalar import GENERIC_CONTEXT
from .torus import TorusContext

# a corner where side y follows side x counterclockwise adds one to a[y][x]
CORNER_NEXT_SUCCEEDS = True

LEFT = "left"
RIGHT = "right"

FIXTURES = ("punctured_torus", "twice_punctured_plane")


@dataclass(frozen=True)
class Triangulation:
    edges: tuple
    triangles: tuple
    punctures: int | None = None

    def __post_init__(self):
        edges = tuple(str(e) for e in self.edges)
        triangles = tuple(tuple(str(e) for e in t) for t in self.triangles)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "triangles", triangles)
        if len(set(edges)) != len(edges):
            raise InvalidTriangulation("duplicate edge names")
        if 3 * len(triangles) != 2 * len(edges):
            raise InvalidTriangulation(
                f"{len(triangles)} triangles cannot be glued along {len(edges)} edges"
            )
        counts = dict.fromkeys(edges, 0)
        for t in triangles:
            if len(t) != 3:
                raise InvalidTriangulation(f"triangle {t} does not have three sides")
            if len(set(t)) != 3:
                raise InvalidTriangulation(f"triangle {t} is self-folded")
            for e in t:
                if e not in counts:
                    raise InvalidTriangulation(f"unknown edge {e!r}")
                counts[e] += 1
        bad = [e for e, c in counts.items() if c != 2]
        if bad:
            raise InvalidTriangulation(f"edges {bad} do not appear exactly twice")

    @property
    def rank(self):
        return len(self.edges)

    def edge_index(self, e):
        return self.edges.index(str(e))

    def appearances(self, e):
        """Triangles holding edge ``e``, one per slot."""
        return [t for t, sides in enumerate(self.triangles) if e in sides]

    def local_sigma(self, t, u, v):
        """Contribution of triangle ``t`` to sigma between its sides ``u`` and ``v``."""
        sides = self.triangles[t]
        i, j = sides.index(u), sides.index(v)
        if i == j:
            return 0
        sign = 1 if (i - j) % 3 == 1 else -1
        return sign if CORNER_NEXT_SUCCEEDS else -sign

    def local_sigma_matrix(self, t):
        sides = self.triangles[t]
        return tuple(tuple(self.local_sigma(t, u, v) for v in sides) for u in sides)

    def torus(self, scalars=GENERIC_CONTEXT, param=1):
        return TorusContext(sigma_matrix(self), scalars, param, tuple(f"Z_{e}" for e in self.edges))


def sigma_matrix(t):
    """sigma = a - a^T where a counts corner successions between edge ends."""
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for sides in t.triangles:
        for k in range(3):
            x, y = sides[k], sides[(k + 1) % 3]
            i, j = t.edge_index(x), t.edge_index(y)
            if CORNER_NEXT_SUCCEEDS:
                a[j][i] += 1
            else:
                a[i][j] += 1
    return tuple(tuple(a[i][j] - a[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Arc:
    component: int
    index: int
    triangle: int
    entry: str
    exit: str
    turn: str

    @property
    def key(self):
        return (self.component, self.index)


@dataclass(frozen=True)
class CurveDiagram:
    triangulation: Triangulation
    components: tuple
    arcs: tuple
    elevations: tuple
    edge_orders: dict = field(compare=False, hash=False)
    simple_projection: bool = True
    name: str = ""

    @property
    def point_count(self):
        return sum(len(c) for c in self.components)

    def component_arcs(self, c):
        return [a for a in self.arcs if a.component == c]

    def points(self, c):
        return [edge for edge, _ in self.components[c]]

    @property
    def lambda_simple(self):
        if len(self.components) != 1 or not self.simple_projection:
            return False
        return all(len(ranks) <= 1 for ranks in self.elevations)

    def turns(self, c=0):
        return [a.turn for a in self.component_arcs(c)]

    def patterns(self, c=0):
        """Pattern at crossing i: (turn of the arc before it, turn of the arc after it)."""
        turns = self.turns(c)
        return [(turns[i - 1], turns[i]) for i in range(len(turns))]

    def component(self, c):
        """Component ``c`` as a curve of its own, elevations inherited."""
        crossings = [list(x) for x in self.components[c]]
        elev = [[a for (cc, a) in ranks if cc == c] for ranks in self.elevations]
        return build_curve(
            self.triangulation, [crossings], [[[0, a] for a in r] for r in elev],
            simple_projection=self.simple_projection, name=f"{self.name}[{c}]",
        )

    def stacked(self):
        """True when the components sit in listed order, bottom to top, everywhere."""
        for ranks in self.elevations:
            comps = [c for c, _ in ranks]
            if comps != sorted(comps):
                return False
        return True

    def to_json(self):
        return {
            "components": [[list(x) for x in comp] for comp in self.components],
            "elevations": [[list(k) for k in ranks] for ranks in self.elevations],
            "simple_projection": self.simple_projection,
        }


def _turn(t, tri, entry, exit_):
    return LEFT if t.local_sigma(tri, entry, exit_) == 1 else RIGHT


def build_curve(t, components, elevations=None, simple_projection=True, name=""):
    """Validate a multicurve and derive its arcs, turns and edge point orders.

    ``components`` is a list of crossing lists; a bare crossing list is accepted
    for a single component.  ``elevations`` lists, per triangle, the arcs inside
    it from bottom to top, as ``[component, arc]`` pairs (or plain arc indices for
    a single component).  It may be omitted when no triangle holds two arcs.
    """
    if not components:
        raise EmptyCurve("curve has no crossings")
    if isinstance(components[0], (list, tuple)) and components[0] and isinstance(components[0][0], str):
        components = [components]
    comps = []
    arcs = []
    for c, crossings in enumerate(components):
        if not crossings:
            raise EmptyCurve(f"component {c} has no crossings")
        comp = []
        for item in crossings:
            edge, slot = str(item[0]), int(item[1])
            if edge not in t.edges:
                raise InconsistentCrossing(f"unknown edge {edge!r}")
            if slot not in (0, 1):
                raise InconsistentCrossing(f"slot must be 0 or 1, got {slot}")
            comp.append((edge, slot))
        k = len(comp)
        for i in range(k):
            edge, slot = comp[i]
            tri = t.appearances(edge)[slot]
            nxt_edge, nxt_slot = comp[(i + 1) % k]
            if nxt_edge == edge:
                raise NotEmbedded(f"arc {i} of component {c} returns to edge {edge!r}")
            apps = t.appearances(nxt_edge)
            if tri not in apps or apps[1 - nxt_slot] != tri:
                raise InconsistentCrossing(
                    f"component {c}: crossing {i} enters triangle {tri}, "
                    f"but crossing {(i + 1) % k} does not leave it"
                )
            arcs.append(Arc(c, i, tri, edge, nxt_edge, _turn(t, tri, edge, nxt_edge)))
        comps.append(tuple(comp))

    by_triangle = [[] for _ in t.triangles]
    for a in arcs:
        by_triangle[a.triangle].append(a.key)
    if elevations is None:
        if any(len(v) > 1 for v in by_triangle):
            raise BadElevation("a triangle holds several arcs but no elevations were given")
        elevations = by_triangle
    if len(elevations) != len(t.triangles):
        raise BadElevation("one elevation list per triangle is required")
    elev = []
    for tri, ranks in enumerate(elevations):
        keys = tuple(tuple(int(v) for v in r) if isinstance(r, (list, tuple)) else (0, int(r)) for r in ranks)
        if sorted(keys) != sorted(by_triangle[tri]):
            raise BadElevation(f"elevations of triangle {tri} are not a permutation of its arcs")
        elev.append(keys)
    elev = tuple(elev)

    # point (c, i) sits on edge comp[c][i]; arc (c, i) touches points i and i + 1
    arc_of = {a.key: a for a in arcs}
    orders = {}
    for tri, keys in enumerate(elev):
        seen = {}
        for key in keys:
            a = arc_of[key]
            k = len(comps[a.component])
            for point, edge in (((a.component, a.index), a.entry), ((a.component, (a.index + 1) % k), a.exit)):
                seen.setdefault(edge, []).append(point)
        for edge, pts in seen.items():
            if edge in orders and orders[edge] != pts:
                raise BadElevation(f"the two triangles along edge {edge!r} order its points differently")
            orders[edge] = pts
    edge_orders = {e: tuple(v) for e, v in orders.items()}
    return CurveDiagram(t, tuple(comps), tuple(arcs), elev, edge_orders, bool(simple_projection), name)


def cable(curve, copies):
    """Parallel copies along the vertical framing: ``copies`` stacked pushoffs of each component.

    Copy ``j`` of component ``c`` becomes component ``c * copies + j``; inside each
    triangle the arcs are ordered by (original rank, copy index).
    """
    if copies < 1:
        raise ValueError("at least one copy is required")
    comps = []
    for comp in curve.components:
        for _ in range(copies):
            comps.append([list(x) for x in comp])
    elev = []
    for ranks in curve.elevations:
        elev.append([[c * copies + j, a] for (c, a) in ranks for j in range(copies)])
    return build_curve(curve.triangulation, comps, elev, curve.simple_projection, f"{curve.name}^({copies})")


@dataclass(frozen=True)
class Fixture:
    name: str
    triangulation: Triangulation
    curves: dict = field(compare=False, hash=False)

    def curve(self, name):
        try:
            return self.curves[name]
        except KeyError:
            raise UnknownFixture(f"fixture {self.name!r} has no curve {name!r}") from None


def load_surface(data, name=""):
    """Build a Fixture from the JSON schema documented in the README."""
    edges = data["edges"]
    if isinstance(edges, int):
        edges = [str(i + 1) for i in range(edges)]
    t = Triangulation(tuple(edges), tuple(tuple(x) for x in data["triangles"]), data.get("punctures"))
    curves = {}
    for cname, entry in data.get("curves", {}).items():
        comps = entry["components"] if "components" in entry else [entry["crossings"]]
        curves[cname] = build_curve(
            t, comps, entry.get("elevations"), entry.get("simple_projection", True), cname
        )
    return Fixture(data.get("name", name), t, curves)


def fixture(name):
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    text = resources.files("skeintrace").joinpath("fixtures").joinpath(f"{name}.json").read_text()
    return load_surface(json.loads(text), name)
