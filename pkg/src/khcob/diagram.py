"""Oriented planar link diagrams as PD codes with rotation systems.

A diagram is a finite set of 4-valent crossings plus crossingless *free
loops*.  Each crossing is a 4-tuple of arc identifiers in counterclockwise
rotation order starting from the incoming under-strand (slot 0); the
under-strand runs slot 0 -> slot 2 and the over-strand occupies slots 1, 3.
Arcs are directed (tail dart -> head dart).  Free loops carry a winding
flag (``ccw``).

Because PD data only determines embeddings per connected component up to
sphere symmetry, the diagram records explicit *placement* data: a parent
site for every free loop and every crossing-connected component (the
unbounded region, the inside of a loop, or a face of another component,
named by any sector in it), and a designated outer face per component.
Faces are computed combinatorially by sector tracing; the checkerboard
structure of the Seifert picture is a region tree derived from them.

The sector (c, k) is the corner of crossing c between slots k and k+1 mod 4.
Walking along a directed arc, the face on the left at the tail (c, s) is the
face of sector (c, s); on the right, sector (c, s-1 mod 4).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

Dart = tuple  # (crossing index, slot)
Sector = tuple  # (crossing index, corner index)

SITE_ROOT = ("root",)


def site_loop(loop_id: int) -> tuple:
    return ("loop", loop_id)


def site_face(sector: Sector) -> tuple:
    return ("face", sector[0], sector[1])


class DiagramError(ValueError):
    """Malformed or non-planar diagram data."""


class MoveError(ValueError):
    """A move event that does not apply at its stated location."""


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            self.parent[x] = p = self.find(p)
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self) -> dict:
        out: dict = {}
        for x in list(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return {k: sorted(v) for k, v in out.items()}


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple
    arcs: tuple  # ((arc_id, tail_dart, head_dart), ...) sorted by arc_id
    free_loops: tuple  # ((loop_id, ccw), ...) sorted
    loop_parents: tuple  # ((loop_id, site), ...) sorted
    comp_parents: tuple  # ((component_index, site), ...) sorted
    comp_outer: tuple  # ((component_index, sector), ...) sorted

    # -- construction ---------------------------------------------------------

    @staticmethod
    def build(
        crossings,
        arc_dirs: dict,
        free_loops: dict | None = None,
        loop_parents: dict | None = None,
        comp_parents: dict | None = None,
        comp_outer: dict | None = None,
    ) -> "PlanarDiagram":
        """Validated construction.

        ``arc_dirs`` maps arc id -> (tail dart, head dart); ``free_loops``
        maps loop id -> ccw flag.  Parent sites default to the unbounded
        region, outer faces to the face of sector (c_min, 0).
        """
        crossings = tuple(tuple(int(a) for a in c) for c in crossings)
        for c in crossings:
            if len(c) != 4:
                raise DiagramError(f"crossing {c} does not have 4 arc slots")
        occurrences: dict[int, list] = {}
        for ci, c in enumerate(crossings):
            for s, a in enumerate(c):
                occurrences.setdefault(a, []).append((ci, s))
        for a, occ in occurrences.items():
            if len(occ) != 2:
                raise DiagramError(f"arc {a} appears {len(occ)} times, expected 2")
        if set(occurrences) != set(arc_dirs):
            raise DiagramError("arc direction data does not match the PD code")
        arcs = []
        for a in sorted(occurrences):
            tail, head = arc_dirs[a]
            tail = (int(tail[0]), int(tail[1]))
            head = (int(head[0]), int(head[1]))
            if sorted([tail, head]) != occurrences[a]:
                raise DiagramError(f"arc {a}: endpoints {tail}, {head} do not match PD")
            arcs.append((a, tail, head))
        free_loops = dict(free_loops or {})
        loops = tuple(sorted((int(l), bool(ccw)) for l, ccw in free_loops.items()))
        loop_parents = dict(loop_parents or {})
        lp = tuple(
            sorted((l, tuple(loop_parents.get(l, SITE_ROOT))) for l, _ in loops)
        )
        D = PlanarDiagram(
            crossings=crossings,
            arcs=tuple(arcs),
            free_loops=loops,
            loop_parents=lp,
            comp_parents=(),
            comp_outer=(),
        )
        comps = D.components()
        cp = tuple(
            sorted(
                (i, tuple((comp_parents or {}).get(i, SITE_ROOT)))
                for i in range(len(comps))
            )
        )
        co = {}
        for i, comp in enumerate(comps):
            sector = (comp_outer or {}).get(i, (min(comp), 0))
            co[i] = (int(sector[0]), int(sector[1]))
        D = PlanarDiagram(
            crossings=crossings,
            arcs=tuple(arcs),
            free_loops=loops,
            loop_parents=lp,
            comp_parents=cp,
            comp_outer=tuple(sorted(co.items())),
        )
        D._validate()
        return D

    @staticmethod
    def empty() -> "PlanarDiagram":
        return PlanarDiagram.build((), {})

    @staticmethod
    def unknot(ccw: bool = True, loop_id: int = 0) -> "PlanarDiagram":
        return PlanarDiagram.build((), {}, free_loops={loop_id: ccw})

    # -- validation -----------------------------------------------------------

    def _validate(self):
        arc_map = self.arc_map()
        heads = {head for _, _, head in self.arcs}
        tails = {tail for _, tail, _ in self.arcs}
        for ci, c in enumerate(self.crossings):
            if (ci, 0) not in heads:
                raise DiagramError(f"crossing {ci}: slot 0 must be an incoming arc end")
            if (ci, 2) not in tails:
                raise DiagramError(f"crossing {ci}: slot 2 must be an outgoing arc end")
            over_in = [(ci, s) in heads for s in (1, 3)]
            if sum(over_in) != 1:
                raise DiagramError(
                    f"crossing {ci}: over-strand must have one incoming, one outgoing end"
                )
        # planarity per component: V - E + F = 2 with E = 2V
        for comp in self.components():
            faces = self.comp_faces(self.components().index(comp))
            if len(faces) != len(comp) + 2:
                raise DiagramError(
                    f"component {sorted(comp)} is not planar: "
                    f"{len(faces)} faces for {len(comp)} crossings"
                )
        # placements: references exist, outer faces valid, parent forest acyclic
        loop_ids = {l for l, _ in self.free_loops}
        if {l for l, _ in self.loop_parents} != loop_ids:
            raise DiagramError("loop parent data does not match the loop set")
        comps = self.components()
        sector_comp = {}
        for i, comp in enumerate(comps):
            for ci in comp:
                for k in range(4):
                    sector_comp[(ci, k)] = i
        for i, sector in self.comp_outer:
            if sector_comp.get(sector) != i:
                raise DiagramError(f"outer-face sector {sector} is not on component {i}")
        units = [("loop", l) for l in sorted(loop_ids)] + [
            ("comp", i) for i in range(len(comps))
        ]
        parent_of = {}
        for l, site in self.loop_parents:
            parent_of[("loop", l)] = site
        for i, site in self.comp_parents:
            parent_of[("comp", i)] = site
        for unit, site in parent_of.items():
            if site == SITE_ROOT:
                continue
            if site[0] == "loop":
                if site[1] not in loop_ids:
                    raise DiagramError(f"{unit}: parent loop {site[1]} does not exist")
            elif site[0] == "face":
                sector = (site[1], site[2])
                if sector not in sector_comp:
                    raise DiagramError(f"{unit}: parent face sector {sector} invalid")
                ci = sector_comp[sector]
                if self.face_of_sector(ci, sector) == self.outer_face(ci):
                    raise DiagramError(
                        f"{unit}: parent face {sector} is the outer face of "
                        f"component {ci}; use that component's parent site instead"
                    )
            else:
                raise DiagramError(f"{unit}: unknown site {site}")
        for unit in units:
            seen = set()
            cur = unit
            while True:
                if cur in seen:
                    raise DiagramError(f"placement cycle through {unit}")
                seen.add(cur)
                site = parent_of[cur]
                if site == SITE_ROOT:
                    break
                if site[0] == "loop":
                    cur = ("loop", site[1])
                else:
                    cur = ("comp", sector_comp[(site[1], site[2])])

    # -- cached simple accessors ----------------------------------------------

    def arc_map(self) -> dict:
        return {a: (tail, head) for a, tail, head in self.arcs}

    def arc_ids(self) -> list:
        return [a for a, _, _ in self.arcs]

    def loop_ids(self) -> list:
        return [l for l, _ in self.free_loops]

    def loop_ccw(self) -> dict:
        return dict(self.free_loops)

    def loop_parent(self, loop_id: int) -> tuple:
        return dict(self.loop_parents)[loop_id]

    @functools.lru_cache(maxsize=None)
    def _dart_arc(self) -> dict:
        out = {}
        for a, tail, head in self.arcs:
            out[tail] = (a, "tail")
            out[head] = (a, "head")
        return out

    def arc_at(self, dart: Dart) -> int:
        return self._dart_arc()[dart][0]

    def is_head(self, dart: Dart) -> bool:
        return self._dart_arc()[dart][1] == "head"

    @functools.lru_cache(maxsize=None)
    def components(self) -> tuple:
        """Crossing-connected components as sorted tuples of crossing indices,
        ordered by their minimum crossing index."""
        uf = _UnionFind()
        for ci in range(len(self.crossings)):
            uf.find(ci)
        for _, tail, head in self.arcs:
            uf.union(tail[0], head[0])
        groups: dict = {}
        for ci in range(len(self.crossings)):
            groups.setdefault(uf.find(ci), []).append(ci)
        return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))

    def component_of_crossing(self, ci: int) -> int:
        for i, comp in enumerate(self.components()):
            if ci in comp:
                return i
        raise DiagramError(f"crossing {ci} out of range")

    @functools.lru_cache(maxsize=None)
    def comp_faces(self, comp_index: int) -> dict:
        """Faces of one component: face id (min sector) -> sorted sector list."""
        comp = self.components()[comp_index]
        comp_set = set(comp)
        uf = _UnionFind()
        for ci in comp:
            for k in range(4):
                uf.find((ci, k))
        for _, tail, head in self.arcs:
            if tail[0] in comp_set:
                uf.union((tail[0], tail[1]), (head[0], (head[1] - 1) % 4))
                uf.union((tail[0], (tail[1] - 1) % 4), (head[0], head[1]))
        return {min(v): tuple(v) for v in uf.classes().values()}

    @functools.lru_cache(maxsize=None)
    def _sector_face(self) -> dict:
        out = {}
        for i in range(len(self.components())):
            for fid, sectors in self.comp_faces(i).items():
                for s in sectors:
                    out[s] = (i, fid)
        return out

    def face_of_sector(self, comp_index: int, sector: Sector):
        i, fid = self._sector_face()[sector]
        if i != comp_index:
            raise DiagramError(f"sector {sector} not on component {comp_index}")
        return fid

    def outer_face(self, comp_index: int):
        sector = dict(self.comp_outer)[comp_index]
        return self._sector_face()[sector][1]

    # -- orientation-derived data ----------------------------------------------

    def crossing_sign(self, ci: int) -> int:
        """+1 when the over-strand enters at slot 3, -1 when at slot 1."""
        return 1 if self.is_head((ci, 3)) else -1

    def writhe(self) -> int:
        return sum(self.crossing_sign(ci) for ci in range(len(self.crossings)))

    def n_negative(self) -> int:
        return sum(1 for ci in range(len(self.crossings)) if self.crossing_sign(ci) < 0)

    def n_positive(self) -> int:
        return len(self.crossings) - self.n_negative()

    @functools.lru_cache(maxsize=None)
    def link_components(self) -> tuple:
        """Strand components: ("arcs", frozenset of arc ids) and ("loop", id),
        sorted with arc components (by min arc) before loops (by id)."""
        uf = _UnionFind()
        for a in self.arc_ids():
            uf.find(("a", a))
        for ci in range(len(self.crossings)):
            for s_in, s_out in ((0, 2), (1, 3)):
                a = self.arc_at((ci, s_in))
                b = self.arc_at((ci, s_out))
                uf.union(("a", a), ("a", b))
        groups: dict = {}
        for a in self.arc_ids():
            groups.setdefault(uf.find(("a", a)), []).append(a)
        comps = [("arcs", frozenset(g)) for g in groups.values()]
        comps.sort(key=lambda c: min(c[1]))
        comps.extend(("loop", l) for l in self.loop_ids())
        return tuple(comps)

    def component_count(self) -> int:
        return len(self.link_components())

    # -- regions of the diagram picture ----------------------------------------

    def site_region(self, site: tuple) -> tuple:
        """Resolve a site to a region node of the diagram picture."""
        if tuple(site) == SITE_ROOT:
            return SITE_ROOT
        if site[0] == "loop":
            return ("inside", site[1])
        sector = (site[1], site[2])
        ci = self._sector_face()[sector][0]
        fid = self._sector_face()[sector][1]
        if fid == self.outer_face(ci):
            return self.site_region(dict(self.comp_parents)[ci])
        return ("dface", ci, fid)

    def arc_side_sector(self, arc_id: int, side: str) -> Sector:
        tail, _ = self.arc_map()[arc_id]
        ci, s = tail
        return (ci, s if side == "L" else (s - 1) % 4)

    def region_at(self, pos: tuple) -> tuple:
        """Region node at a boundary position ('arc', id, side) or
        ('loop', id, side), side in {'L', 'R'} relative to the direction of
        travel."""
        kind, ident, side = pos
        if kind == "arc":
            sector = self.arc_side_sector(ident, side)
            return self.site_region(site_face(sector))
        if kind == "loop":
            ccw = self.loop_ccw()[ident]
            inside = (side == "L") == ccw
            if inside:
                return ("inside", ident)
            return self.site_region(self.loop_parent(ident))
        raise DiagramError(f"unknown position kind {kind}")

    def units_in_region(self, region: tuple) -> list:
        """Loops and components whose parent site resolves to this region."""
        out = []
        for l, site in self.loop_parents:
            if self.site_region(site) == region:
                out.append(("loop", l))
        for i, site in self.comp_parents:
            if self.site_region(site) == region:
                out.append(("comp", i))
        return out

    # -- serialization ----------------------------------------------------------

    def to_obj(self) -> dict:
        arc_occ: dict[int, list] = {}
        for ci, c in enumerate(self.crossings):
            for s, a in enumerate(c):
                arc_occ.setdefault(a, []).append((ci, s))
        orientation = {}
        for a, tail, head in self.arcs:
            first = min(arc_occ[a])
            orientation[str(a)] = "+" if tuple(tail) == first else "-"

        def site_obj(site):
            if tuple(site) == SITE_ROOT:
                return None
            if site[0] == "loop":
                return {"loop": site[1]}
            return {"face": [site[1], site[2]]}

        return {
            "crossings": [list(c) for c in self.crossings],
            "orientation": orientation,
            "free_loops": [
                {"id": l, "ccw": ccw, "parent": site_obj(dict(self.loop_parents)[l])}
                for l, ccw in self.free_loops
            ],
            "containment": [
                {"component": i, "parent": site_obj(site)}
                for i, site in self.comp_parents
                if tuple(site) != SITE_ROOT
            ],
            "outer_faces": {str(i): list(s) for i, s in self.comp_outer},
        }

    @staticmethod
    def from_obj(obj: dict) -> "PlanarDiagram":
        def site_from(data):
            if data is None:
                return SITE_ROOT
            if "loop" in data:
                return site_loop(int(data["loop"]))
            if "face" in data:
                return ("face", int(data["face"][0]), int(data["face"][1]))
            raise DiagramError(f"bad site {data!r}")

        crossings = [tuple(int(x) for x in c) for c in obj.get("crossings", ())]
        for c in crossings:
            if len(c) != 4:
                raise DiagramError(f"crossing {c} does not have 4 arc slots")
        arc_occ: dict[int, list] = {}
        for ci, c in enumerate(crossings):
            for s, a in enumerate(c):
                arc_occ.setdefault(a, []).append((ci, s))
        orientation = obj.get("orientation", {})
        arc_dirs = {}
        for a, occ in arc_occ.items():
            if len(occ) != 2:
                raise DiagramError(f"arc {a} appears {len(occ)} times, expected 2")
            sign = orientation.get(str(a), orientation.get(a, "+"))
            first, second = sorted(occ)
            arc_dirs[a] = (first, second) if sign == "+" else (second, first)
        free_loops = {}
        loop_parents = {}
        for entry in obj.get("free_loops", ()):
            lid = int(entry["id"])
            free_loops[lid] = bool(entry["ccw"])
            loop_parents[lid] = site_from(entry.get("parent"))
        comp_parents = {}
        for entry in obj.get("containment", ()):
            comp_parents[int(entry["component"])] = site_from(entry.get("parent"))
        comp_outer = {
            int(i): (int(s[0]), int(s[1]))
            for i, s in obj.get("outer_faces", {}).items()
        }
        return PlanarDiagram.build(
            crossings,
            arc_dirs,
            free_loops=free_loops,
            loop_parents=loop_parents,
            comp_parents=comp_parents,
            comp_outer=comp_outer,
        )


def parse_pd(obj: dict) -> PlanarDiagram:
    """Validated diagram from its JSON object form."""
    return PlanarDiagram.from_obj(obj)


# ---------------------------------------------------------------------------
# Orientation assignments
# ---------------------------------------------------------------------------


def reverse_components(D: PlanarDiagram, which) -> PlanarDiagram:
    """Reverse the orientation of the given link components (by index into
    ``D.link_components()``).  Crossing tuples whose under-strand reverses are
    rotated by two slots so that slot 0 stays the incoming under-strand."""
    which = frozenset(which)
    lcomps = D.link_components()
    rev_arcs = set()
    rev_loops = set()
    for idx in which:
        kind, data = lcomps[idx]
        if kind == "arcs":
            rev_arcs |= set(data)
        else:
            rev_loops.add(data)
    rotate = set()
    for ci in range(len(D.crossings)):
        under_arc = D.arc_at((ci, 0))
        if under_arc in rev_arcs:
            rotate.add(ci)

    def remap_dart(d: Dart) -> Dart:
        return (d[0], (d[1] + 2) % 4) if d[0] in rotate else d

    def remap_site(site):
        if site[0] == "face" and site[1] in rotate:
            return ("face", site[1], (site[2] + 2) % 4)
        return site

    crossings = [
        tuple(c[(k + 2) % 4] for k in range(4)) if ci in rotate else c
        for ci, c in enumerate(D.crossings)
    ]
    arc_dirs = {}
    for a, tail, head in D.arcs:
        t, h = remap_dart(tail), remap_dart(head)
        arc_dirs[a] = (h, t) if a in rev_arcs else (t, h)
    free_loops = {l: (not ccw if l in rev_loops else ccw) for l, ccw in D.free_loops}
    loop_parents = {l: remap_site(site) for l, site in D.loop_parents}
    comp_parents = {i: remap_site(site) for i, site in D.comp_parents}
    comp_outer = {}
    for i, sector in D.comp_outer:
        if sector[0] in rotate:
            comp_outer[i] = (sector[0], (sector[1] + 2) % 4)
        else:
            comp_outer[i] = sector
    return PlanarDiagram.build(
        crossings,
        arc_dirs,
        free_loops=free_loops,
        loop_parents=loop_parents,
        comp_parents=comp_parents,
        comp_outer=comp_outer,
    )


def all_orientations(D: PlanarDiagram) -> list:
    """The 2^{|D|} orientation assignments, as frozensets of reversed
    link-component indices."""
    n = D.component_count()
    return [
        frozenset(i for i in range(n) if (mask >> i) & 1) for mask in range(1 << n)
    ]


# ---------------------------------------------------------------------------
# Seifert circles and the checkerboard coloring
# ---------------------------------------------------------------------------

# Oriented smoothing of a crossing: positive crossings take their 0-smoothing
# (slots joined (0,1) and (2,3)), negative ones their 1-smoothing (slots
# (0,3) and (1,2)).
SMOOTHING_PAIRS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}
# Sector corners cut off / merged by each smoothing: smoothing 0 isolates
# sectors 0 and 2 and merges sectors 1 and 3 into the through-zone;
# smoothing 1 isolates 1 and 3 and merges 0 and 2.
SMOOTHING_MERGE = {0: (1, 3), 1: (0, 2)}


@dataclass(frozen=True)
class SeifertCircle:
    key: tuple  # ("arcs", frozenset) or ("loop", id)
    color: str  # "a" or "b"
    depth: int  # number of circles strictly containing it
    ancestors: tuple  # keys of containing circles, outermost first


@dataclass(frozen=True)
class SeifertData:
    circles: tuple  # SeifertCircle, deterministic order
    orientation_used: frozenset

    @property
    def r(self) -> int:
        return len(self.circles)

    def coloring(self) -> dict:
        return {c.key: c.color for c in self.circles}


def _circles_for_smoothing(D: PlanarDiagram, bit_of) -> list:
    """Circle partition for a full resolution; ``bit_of(ci)`` gives 0/1.

    Returns circle keys ("arcs", frozenset) / ("loop", id), sorted.
    """
    uf = _UnionFind()
    for a in D.arc_ids():
        uf.find(("a", a))
    for ci in range(len(D.crossings)):
        for s1, s2 in SMOOTHING_PAIRS[bit_of(ci)]:
            uf.union(("a", D.arc_at((ci, s1))), ("a", D.arc_at((ci, s2))))
    groups: dict = {}
    for a in D.arc_ids():
        groups.setdefault(uf.find(("a", a)), []).append(a)
    circles = [("arcs", frozenset(g)) for g in groups.values()]
    circles.sort(key=lambda c: min(c[1]))
    circles.extend(("loop", l) for l in D.loop_ids())
    return circles


def seifert_circles(D: PlanarDiagram) -> list:
    """Circles of the orientation-preserving resolution of D."""
    return _circles_for_smoothing(
        D, lambda ci: 0 if D.crossing_sign(ci) > 0 else 1
    )


def seifert_resolve(D: PlanarDiagram, o=frozenset()) -> SeifertData:
    """Seifert circles of the orientation assignment ``o`` (a set of reversed
    link-component indices) with their checkerboard coloring.

    The plane regions cut by the Seifert circles form a tree rooted at the
    unbounded region; regions at odd depth are black.  A circle is colored
    ``a`` exactly when the region on its left (along its orientation) is
    black.
    """
    o = frozenset(o)
    Do = reverse_components(D, o) if o else D
    # region nodes of the smoothed picture, per component: faces merged along
    # the through-zone of each oriented smoothing
    uf = _UnionFind()
    uf.find(SITE_ROOT)
    for l in Do.loop_ids():
        uf.find(("inside", l))

    sector_face = Do._sector_face()

    def sregion_of_sector(sector) -> tuple:
        ci_comp, fid = sector_face[sector]
        return ("face", ci_comp, fid)

    for i in range(len(Do.components())):
        for fid in Do.comp_faces(i):
            uf.find(("face", i, fid))
    for ci in range(len(Do.crossings)):
        bit = 0 if Do.crossing_sign(ci) > 0 else 1
        k1, k2 = SMOOTHING_MERGE[bit]
        uf.union(sregion_of_sector((ci, k1)), sregion_of_sector((ci, k2)))

    def site_node(site) -> tuple:
        if tuple(site) == SITE_ROOT:
            return SITE_ROOT
        if site[0] == "loop":
            return ("inside", site[1])
        return uf.find(sregion_of_sector((site[1], site[2])))

    # glue each component's outer region onto its parent site's region
    for i, site in Do.comp_parents:
        outer = ("face", i, Do.outer_face(i))
        uf.union(uf.find(outer), site_node(site))

    circles = _circles_for_smoothing(
        Do, lambda ci: 0 if Do.crossing_sign(ci) > 0 else 1
    )
    edges = {}
    for key in circles:
        if key[0] == "arcs":
            lefts, rights = set(), set()
            for a in sorted(key[1]):
                tail, _ = Do.arc_map()[a]
                ci, s = tail
                lefts.add(uf.find(sregion_of_sector((ci, s))))
                rights.add(uf.find(sregion_of_sector((ci, (s - 1) % 4))))
            if len(lefts) != 1 or len(rights) != 1:
                raise DiagramError(
                    f"inconsistent sides for Seifert circle {key}: {lefts} / {rights}"
                )
            edges[key] = (lefts.pop(), rights.pop())
        else:
            l = key[1]
            inside = ("inside", l)
            outside = site_node(Do.loop_parent(l))
            ccw = Do.loop_ccw()[l]
            left, right = (inside, outside) if ccw else (outside, inside)
            edges[key] = (uf.find(left), uf.find(right))

    nodes = {uf.find(SITE_ROOT)}
    for left, right in edges.values():
        nodes.add(left)
        nodes.add(right)
    if len(edges) + 1 != len(nodes):
        raise DiagramError("Seifert regions do not form a tree; bad placement data")
    # BFS from the unbounded region
    root = uf.find(SITE_ROOT)
    depth = {root: 0}
    parent_edge: dict = {root: None}
    frontier = [root]
    adjacency: dict = {}
    for key, (left, right) in edges.items():
        adjacency.setdefault(left, []).append((right, key))
        adjacency.setdefault(right, []).append((left, key))
    while frontier:
        nxt = []
        for node in frontier:
            for other, key in adjacency.get(node, ()):
                if other not in depth:
                    depth[other] = depth[node] + 1
                    parent_edge[other] = (key, node)
                    nxt.append(other)
        frontier = nxt
    if set(depth) != nodes:
        raise DiagramError("Seifert region tree is disconnected; bad placement data")

    out = []
    for key in circles:
        left, right = edges[key]
        if abs(depth[left] - depth[right]) != 1:
            raise DiagramError("region tree adjacency mismatch")
        child = left if depth[left] > depth[right] else right
        color = "a" if depth[left] % 2 == 1 else "b"
        ancestors = []
        node = child
        while parent_edge[node] is not None:
            key2, up = parent_edge[node]
            if key2 != key:
                ancestors.append(key2)
            node = up
        out.append(
            SeifertCircle(
                key=key,
                color=color,
                depth=min(depth[left], depth[right]),
                ancestors=tuple(reversed(ancestors)),
            )
        )
    return SeifertData(circles=tuple(out), orientation_used=o)


def seifert_count(D: PlanarDiagram) -> int:
    """r(D): the number of Seifert circles."""
    return len(seifert_circles(D))


def writhe(D: PlanarDiagram) -> int:
    return D.writhe()


def component_count(D: PlanarDiagram) -> int:
    return D.component_count()
