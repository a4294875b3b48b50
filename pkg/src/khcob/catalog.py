"""Standard small diagrams used by tests, demos, and the corpus data."""

from __future__ import annotations

from .diagram import PlanarDiagram


def mirror(D: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing (over <-> under).

    The plane picture is unchanged, so tuples rotate to keep slot 0 on the
    incoming under-strand and all sector references shift accordingly.
    """
    rot = {}
    for ci in range(len(D.crossings)):
        # new incoming under-strand = old incoming over-strand
        rot[ci] = 1 if D.is_head((ci, 1)) else 3

    def remap_dart(d):
        ci, s = d
        return (ci, (s - rot[ci]) % 4)

    def remap_site(site):
        if site[0] == "face":
            return ("face", site[1], (site[2] - rot[site[1]]) % 4)
        return site

    crossings = [
        tuple(c[(k + rot[ci]) % 4] for k in range(4))
        for ci, c in enumerate(D.crossings)
    ]
    arc_dirs = {
        a: (remap_dart(t), remap_dart(h)) for a, t, h in D.arcs
    }
    return PlanarDiagram.build(
        crossings,
        arc_dirs,
        free_loops=dict(D.free_loops),
        loop_parents={l: remap_site(s) for l, s in D.loop_parents},
        comp_parents={i: remap_site(s) for i, s in D.comp_parents},
        comp_outer={
            i: (sec[0], (sec[1] - rot[sec[0]]) % 4) for i, sec in D.comp_outer
        },
    )


def left_trefoil() -> PlanarDiagram:
    """The standard alternating 3-crossing diagram with writhe -3."""
    crossings = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
    arc_dirs = {
        1: ((1, 3), (0, 0)),
        2: ((0, 2), (2, 1)),
        3: ((2, 3), (1, 0)),
        4: ((1, 2), (0, 1)),
        5: ((0, 3), (2, 0)),
        6: ((2, 2), (1, 1)),
    }
    return PlanarDiagram.build(crossings, arc_dirs)


def right_trefoil() -> PlanarDiagram:
    return mirror(left_trefoil())


def hopf_positive() -> PlanarDiagram:
    """Two-crossing Hopf link diagram with writhe +2.

    Arcs 1, 2 form the left circle, arcs 3, 4 the right one; arcs 1 and 3
    bound the lens.  The unbounded face is the class of sector (0, 0).
    """
    crossings = [(4, 2, 3, 1), (2, 4, 1, 3)]
    arc_dirs = {
        1: ((1, 2), (0, 3)),
        2: ((0, 1), (1, 0)),
        3: ((0, 2), (1, 3)),
        4: ((1, 1), (0, 0)),
    }
    return PlanarDiagram.build(crossings, arc_dirs, comp_outer={0: (0, 0)})


def hopf_negative() -> PlanarDiagram:
    return mirror(hopf_positive())


def figure_eight() -> PlanarDiagram:
    """The standard 4-crossing figure-eight diagram (writhe 0)."""
    crossings = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]
    arc_dirs = {
        1: ((1, 2), (0, 3)),
        2: ((0, 1), (3, 0)),
        3: ((3, 2), (2, 1)),
        4: ((2, 3), (0, 0)),
        5: ((0, 2), (1, 3)),
        6: ((1, 1), (2, 0)),
        7: ((2, 2), (3, 1)),
        8: ((3, 3), (1, 0)),
    }
    return PlanarDiagram.build(crossings, arc_dirs)


def positive_kink_unknot() -> PlanarDiagram:
    """One-crossing unknot: a positive kink on a counterclockwise loop.

    Arc 0 is the big arc, arc 1 the kink lobe; the outer face is the class
    of sector (0, 0).
    """
    crossings = [(0, 0, 1, 1)]
    arc_dirs = {0: ((0, 1), (0, 0)), 1: ((0, 2), (0, 3))}
    return PlanarDiagram.build(crossings, arc_dirs, comp_outer={0: (0, 0)})


def unlink(n: int, ccw: bool = True) -> PlanarDiagram:
    """n crossingless loops side by side."""
    return PlanarDiagram.build((), {}, free_loops={i: ccw for i in range(n)})


def nested_loops(ccw_outer: bool = True, ccw_inner: bool = True) -> PlanarDiagram:
    return PlanarDiagram.build(
        (),
        {},
        free_loops={0: ccw_outer, 1: ccw_inner},
        loop_parents={1: ("loop", 0)},
    )
