"""Explicit string representations built from planarizing matchings.

Draw ``G/M`` with straight lines, subdividing parallel copies of an edge so the
drawing stays simple. Every edge of ``G`` outside ``M`` gets a split point (a
tip) on its drawn path. Around each drawn vertex ``x`` the strings run along a
small star-shaped ring, leaving it only to reach out to the tips they own:

* an unmatched vertex traces the whole ring at radius ``rho`` and touches each
  of its tips, where the string of the neighbour touches it from the other
  side;
* a matched pair ``v, w`` uses two rings, ``rho`` for one and ``2 rho`` for the
  other; the spikes of the inner string cut through the outer ring, so ``v``
  and ``w`` cross and nothing else does.

Every ring is cut open in one wedge so that each string is a simple polyline.
All coordinates are exact rationals and the validator uses no tolerance.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .graph import Edge, Graph, GraphError, Matching, as_matching, contract_matching, contraction_map, norm_edge
from .planarity import PlanarEmbedding, planar_embedding

Point = tuple[Fraction, Fraction]


class RepresentationError(GraphError):
    pass


@dataclass(frozen=True)
class StringRepresentation:
    strings: tuple[tuple[Point, ...], ...]
    crossings: tuple[Edge, ...] | None = None
    labels: dict[int, str] = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.strings)

    def to_dict(self) -> dict:
        return {
            "strings": [[[_fmt(x), _fmt(y)] for x, y in s] for s in self.strings],
            "crossings": None if self.crossings is None else [list(e) for e in self.crossings],
            "labels": {str(v): lab for v, lab in sorted(self.labels.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "StringRepresentation":
        strings = tuple(tuple((Fraction(x), Fraction(y)) for x, y in s) for s in data["strings"])
        crossings = data.get("crossings")
        if crossings is not None:
            crossings = tuple(sorted(norm_edge(u, v) for u, v in crossings))
        labels = {int(v): lab for v, lab in (data.get("labels") or {}).items()}
        return cls(strings, crossings, labels)

    @classmethod
    def from_json(cls, text: str) -> "StringRepresentation":
        return cls.from_dict(json.loads(text))


def _fmt(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# -- exact geometry ----------------------------------------------------------

def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_collinear(p, a, b) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_intersection(a, b, c, d):
    """Intersection of closed segments ``ab`` and ``cd`` (either may be a
    single point): None, ``("point", P)`` or ``("overlap", (P, Q))``."""
    if a == b and c == d:
        return ("point", a) if a == c else None
    if a == b:
        return ("point", a) if _orient(c, d, a) == 0 and _on_collinear(a, c, d) else None
    if c == d:
        return ("point", c) if _orient(a, b, c) == 0 and _on_collinear(c, a, b) else None
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 == o2 == 0:
        # collinear: project onto the dominant axis
        axis = 0 if a[0] != b[0] else 1
        s1, s2 = sorted((a, b), key=lambda p: p[axis])
        t1, t2 = sorted((c, d), key=lambda p: p[axis])
        lo = s1 if s1[axis] >= t1[axis] else t1
        hi = s2 if s2[axis] <= t2[axis] else t2
        if lo[axis] > hi[axis]:
            return None
        if lo == hi:
            return ("point", lo)
        return ("overlap", (lo, hi))
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = _cross(rx, ry, sx, sy)
    t = Fraction(_cross(c[0] - a[0], c[1] - a[1], sx, sy), den)
    return ("point", (a[0] + t * rx, a[1] + t * ry))


def point_segment_dist2(p, a, b) -> Fraction:
    dx, dy = b[0] - a[0], b[1] - a[1]
    px, py = p[0] - a[0], p[1] - a[1]
    L = dx * dx + dy * dy
    if L == 0:
        return Fraction(px * px + py * py)
    t = Fraction(px * dx + py * dy, 1) / L
    t = min(max(t, Fraction(0)), Fraction(1))
    ex, ey = px - t * dx, py - t * dy
    return ex * ex + ey * ey


def segment_dist2(a, b, c, d) -> Fraction:
    if segment_intersection(a, b, c, d) is not None:
        return Fraction(0)
    return min(point_segment_dist2(a, c, d), point_segment_dist2(b, c, d),
               point_segment_dist2(c, a, b), point_segment_dist2(d, a, b))


def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = _cross(u[0], u[1], v[0], v[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = functools.cmp_to_key(_angle_cmp)


# -- validation --------------------------------------------------------------

@dataclass
class ValidationResult:
    ok: bool
    diagnostics: list[str]
    crossings: set[Edge]
    contacts: set[Edge]
    crossing_points: list[Point]
    touching_points: list[Point]

    def __bool__(self) -> bool:
        return self.ok

    @property
    def first_violation(self) -> str | None:
        return self.diagnostics[0] if self.diagnostics else None


def _bbox(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def _boxes_meet(b1, b2) -> bool:
    return b1[0] <= b2[2] and b2[0] <= b1[2] and b1[1] <= b2[3] and b2[1] <= b1[3]


def _segments(pts):
    if len(pts) == 1:
        return [(pts[0], pts[0])]
    return list(zip(pts, pts[1:]))


def _branches(pts, P):
    """Directions leaving ``P`` along a simple polyline through it."""
    for j, q in enumerate(pts):
        if q == P:
            out = []
            if j > 0:
                out.append((pts[j - 1][0] - P[0], pts[j - 1][1] - P[1]))
            if j + 1 < len(pts):
                out.append((pts[j + 1][0] - P[0], pts[j + 1][1] - P[1]))
            return out
    for a, b in zip(pts, pts[1:]):
        if _orient(a, b, P) == 0 and _on_collinear(P, a, b):
            return [(a[0] - P[0], a[1] - P[1]), (b[0] - P[0], b[1] - P[1])]
    raise AssertionError("point is not on the polyline")


def _simple_problem(pts) -> str | None:
    if len(pts) == 0:
        return "empty string"
    for a, b in zip(pts, pts[1:]):
        if a == b:
            return "repeated consecutive point"
    segs = _segments(pts)
    boxes = [_bbox(s) for s in segs]
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if not _boxes_meet(boxes[i], boxes[j]):
                continue
            hit = segment_intersection(*segs[i], *segs[j])
            if hit is None:
                continue
            if j == i + 1 and hit == ("point", segs[i][1]):
                continue
            return f"segments {i} and {j} intersect"
    return None


def validate_representation(rep: StringRepresentation, g: Graph, strict: bool = False) -> ValidationResult:
    """Check ``rep`` exactly against ``g``.

    Rules, in the order diagnostics report them: one string per vertex; every
    string a simple polyline; no two strings overlapping along a segment; no
    point on three strings; the intersection graph equal to ``g``; crossing
    metadata, when present, equal to the pairs that actually cross. With
    ``strict``, two strings may meet only where they cross or where one of
    them ends.
    """
    diags: list[str] = []
    crossings: set[Edge] = set()
    contacts: set[Edge] = set()
    xpoints: list[Point] = []
    tpoints: list[Point] = []

    def done() -> ValidationResult:
        return ValidationResult(not diags, diags, crossings, contacts, xpoints, tpoints)

    if rep.n != g.n:
        diags.append(f"string count: {rep.n} strings for {g.n} vertices")
        return done()
    for v, s in enumerate(rep.strings):
        problem = _simple_problem(s)
        if problem:
            diags.append(f"not simple: string {v}: {problem}")
    if diags:
        return done()
    # scale to integers so the inner loops avoid Fraction arithmetic
    den = 1
    for s in rep.strings:
        for x, y in s:
            den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    strings = [[(int(x * den), int(y * den)) for x, y in s] for s in rep.strings]
    segs = [_segments(s) for s in strings]
    seg_boxes = [[_bbox(sg) for sg in ss] for ss in segs]
    boxes = [_bbox(s) for s in strings]
    meet: dict[Edge, set] = {}
    on_point: dict[tuple, set[int]] = {}
    overlap = []
    for a in range(rep.n):
        for b in range(a + 1, rep.n):
            if not _boxes_meet(boxes[a], boxes[b]):
                continue
            pts = set()
            for i, sa in enumerate(segs[a]):
                ba = seg_boxes[a][i]
                if not _boxes_meet(ba, boxes[b]):
                    continue
                for j, sb in enumerate(segs[b]):
                    if not _boxes_meet(ba, seg_boxes[b][j]):
                        continue
                    hit = segment_intersection(*sa, *sb)
                    if hit is None:
                        continue
                    if hit[0] == "overlap":
                        overlap.append((a, b))
                        break
                    p = (Fraction(hit[1][0]), Fraction(hit[1][1]))
                    pts.add(p)
            if pts:
                meet[(a, b)] = pts
                for p in pts:
                    on_point.setdefault(p, set()).update((a, b))
    for a, b in overlap:
        diags.append(f"overlap: strings {a} and {b} share a segment")
    for p, who in sorted(on_point.items()):
        if len(who) >= 3:
            diags.append(f"triple point: strings {sorted(who)} meet at {_show(p, den)}")
    for (a, b), pts in sorted(meet.items()):
        for p in sorted(pts):
            ends = {tuple(strings[a][0]), tuple(strings[a][-1]), tuple(strings[b][0]), tuple(strings[b][-1])}
            if p in ends:
                contacts.add((a, b))
                continue
            dirs = [(d, a) for d in _branches(strings[a], p)] + [(d, b) for d in _branches(strings[b], p)]
            dirs.sort(key=lambda t: angle_key(t[0]))
            seq = [w for _, w in dirs]
            if len(seq) == 4 and seq[0] != seq[1] and seq[1] != seq[2] and seq[2] != seq[3]:
                crossings.add((a, b))
                xpoints.append(_unscale(p, den))
            else:
                contacts.add((a, b))
                tpoints.append(_unscale(p, den))
                if strict:
                    diags.append(f"tangential contact: strings {a} and {b} touch at {_show(p, den)} "
                                 "without crossing or ending")
    found = set(meet)
    for e in sorted(found - set(g.edges)):
        diags.append(f"extra adjacency: strings {e[0]} and {e[1]} meet but {e[0]}-{e[1]} is not an edge")
    for e in sorted(set(g.edges) - found):
        diags.append(f"missing adjacency: edge {e[0]}-{e[1]} has disjoint strings")
    if rep.crossings is not None and set(rep.crossings) != crossings:
        diags.append(f"crossing metadata: recorded {sorted(rep.crossings)}, found {sorted(crossings)}")
    return done()


def _unscale(p, den) -> Point:
    return (Fraction(p[0]) / den, Fraction(p[1]) / den)


def _show(p, den) -> str:
    x, y = _unscale(p, den)
    return f"({_fmt(x)}, {_fmt(y)})"


# -- construction ------------------------------------------------------------

@dataclass
class _Tip:
    point: Point
    owner: int
    direction: Point = (Fraction(0), Fraction(0))


def _draw(h: Graph, emb: PlanarEmbedding, groups: dict[Edge, list[Edge]]):
    """Straight-line grid drawing of ``h`` with each extra parallel copy routed
    through its own subdivision vertex. Returns positions and, per ``G``-edge,
    its tip point."""
    rot_k: dict[int, list[int]] = {}
    extra_nodes: dict[Edge, int] = {}
    nxt = h.n
    for e, copies in sorted(groups.items()):
        for f in copies[1:]:
            extra_nodes[f] = nxt
            rot_k[nxt] = [e[0], e[1]]
            nxt += 1
    for x in range(h.n):
        rot = []
        for z in emb.rotation[x]:
            e = norm_edge(x, z)
            copies = groups[e]
            seq = [z] + [extra_nodes[f] for f in copies[1:]]
            rot.extend(seq if x == e[0] else seq[::-1])
        rot_k[x] = rot
    pe = nx.PlanarEmbedding()
    pe.add_nodes_from(range(nxt))
    pe.set_data({v: list(reversed(r)) for v, r in rot_k.items() if r})
    pe.check_structure()
    raw = nx.combinatorial_embedding_to_pos(pe)
    pos = {v: (Fraction(raw[v][0]), Fraction(raw[v][1])) for v in range(nxt)}
    tips: dict[Edge, Point] = {}
    k_edges: list[tuple[int, int]] = []
    for e, copies in groups.items():
        a, b = e
        pa, pb = pos[a], pos[b]
        tips[copies[0]] = ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
        k_edges.append((a, b))
        for f in copies[1:]:
            s = extra_nodes[f]
            tips[f] = pos[s]
            k_edges += [(a, s), (s, b)]
    return pos, tips, k_edges


def _feature_gap2(pos: dict[int, Point], k_edges: list[tuple[int, int]]) -> Fraction:
    """Squared distance between the closest two disjoint features (vertices
    and edges) of the drawing."""
    best = None
    pts = list(pos.items())
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i][1], pts[j][1]
            d = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
            best = d if best is None else min(best, d)
    for v, p in pts:
        for a, b in k_edges:
            if v not in (a, b):
                d = point_segment_dist2(p, pos[a], pos[b])
                best = d if best is None else min(best, d)
    for i in range(len(k_edges)):
        a, b = k_edges[i]
        for j in range(i + 1, len(k_edges)):
            c, d_ = k_edges[j]
            if len({a, b, c, d_}) == 4:
                d = segment_dist2(pos[a], pos[b], pos[c], pos[d_])
                best = d if best is None else min(best, d)
    return Fraction(1) if best is None else Fraction(best)


def _norm_inf(v) -> Point:
    m = max(abs(v[0]), abs(v[1]))
    return (v[0] / m, v[1] / m)


def _perp(v) -> Point:
    return (-v[1], v[0])


def _wedges(dirs: list[Point]) -> list[list[Point]]:
    """Extra ring directions after each tip so no angular gap reaches 180
    degrees."""
    k = len(dirs)
    if k == 1:
        d = dirs[0]
        p = _perp(d)
        return [[p, (-d[0], -d[1]), (-p[0], -p[1])]]
    out = []
    for i in range(k):
        d, e = dirs[i], dirs[(i + 1) % k]
        c = _cross(d[0], d[1], e[0], e[1])
        if c > 0:
            out.append([])
        elif c < 0:
            out.append([(-(d[0] + e[0]), -(d[1] + e[1]))])
        else:
            out.append([_perp(d)])
    return out


def _ring_dirs(dirs, wedges, sigma) -> list[tuple]:
    """Ring directions in order: ``("R", i)``, ``("L", i)``, then wedge points."""
    seq = []
    for i, d in enumerate(dirs):
        p = _perp(d)
        seq.append(("R", i, (d[0] - sigma * p[0], d[1] - sigma * p[1])))
        seq.append(("L", i, (d[0] + sigma * p[0], d[1] + sigma * p[1])))
        for w in wedges[i]:
            seq.append(("W", i, w))
    return seq


def _ring_ok(seq) -> bool:
    vecs = [t[2] for t in seq]
    k = len(vecs)
    wraps = 0
    for i in range(k):
        u, v = vecs[i], vecs[(i + 1) % k]
        if _cross(u[0], u[1], v[0], v[1]) <= 0:
            return False
        if _angle_cmp(v, u) < 0:
            wraps += 1
    return wraps == 1


def _ring_string(centre: Point, seq, tips: list[_Tip], owner: int, level: Fraction) -> list[Point]:
    cx, cy = centre
    last = len(tips) - 1
    pts: list[Point] = []
    for kind, i, v in seq:
        if kind == "W" and i == last:
            break  # the cut
        pts.append((cx + level * v[0], cy + level * v[1]))
        if kind == "R" and tips[i].owner == owner:
            pts.append(tips[i].point)
    return pts


def build_representation(g: Graph, m: Matching | Sequence[Edge] = (),
                         emb: PlanarEmbedding | None = None, max_attempts: int = 6) -> StringRepresentation:
    """String representation of ``g`` from a matching ``m`` with ``G/M``
    planar; ``emb`` is a rotation system of ``G/M`` (computed if omitted)."""
    m = as_matching(g, m)
    vmap, n2 = contraction_map(g.n, m.edges)
    h = contract_matching(g, m)
    if emb is None:
        emb = planar_embedding(h)
    elif not emb.matches(h) or not emb.euler_ok():
        raise RepresentationError("embedding inconsistent with the contracted graph")
    members: list[list[int]] = [[] for _ in range(n2)]
    for v in range(g.n):
        members[vmap[v]].append(v)
    matched = set(m.edges)
    groups: dict[Edge, list[Edge]] = {}
    for f in sorted(g.edges):
        if f in matched:
            continue
        x, z = vmap[f[0]], vmap[f[1]]
        groups.setdefault(norm_edge(x, z), []).append(f)
    pos, tip_points, k_edges = _draw(h, emb, groups)
    gap2 = _feature_gap2(pos, k_edges)
    rho = Fraction(1)
    while 256 * rho * rho > gap2:
        rho /= 2
    tips_at: list[list[_Tip]] = [[] for _ in range(n2)]
    for f, pt in tip_points.items():
        for end in f:
            x = vmap[end]
            tips_at[x].append(_Tip(pt, end))
    rings = []
    for x in range(n2):
        tips = tips_at[x]
        cx, cy = pos[x]
        for t in tips:
            t.direction = _norm_inf((t.point[0] - cx, t.point[1] - cy))
        tips.sort(key=lambda t: angle_key(t.direction))
        seq = None
        if tips:
            dirs = [t.direction for t in tips]
            wedges = _wedges(dirs)
            sigma = Fraction(1, 4)
            for _ in range(40):
                seq = _ring_dirs(dirs, wedges, sigma)
                if _ring_ok(seq):
                    break
                sigma /= 2
            else:
                raise RepresentationError(f"could not shape the ring around vertex {x}")
        rings.append(seq)
    crossing_pairs = tuple(sorted(matched))
    last = None
    for _ in range(max_attempts):
        strings: list[tuple[Point, ...] | None] = [None] * g.n
        for x in range(n2):
            tips, seq, (cx, cy) = tips_at[x], rings[x], pos[x]
            mem = members[x]
            if len(mem) == 1:
                v = mem[0]
                strings[v] = ((cx, cy),) if not tips else tuple(_ring_string(pos[x], seq, tips, v, rho))
                continue
            owners = {t.owner for t in tips}
            if not owners:
                a, b = mem
                strings[a] = ((cx - rho, cy), (cx + rho, cy))
                strings[b] = ((cx, cy - rho), (cx, cy + rho))
                continue
            inner = mem[0] if mem[0] in owners else mem[1]
            outer = mem[1] if inner == mem[0] else mem[0]
            strings[inner] = tuple(_ring_string(pos[x], seq, tips, inner, rho))
            strings[outer] = tuple(_ring_string(pos[x], seq, tips, outer, 2 * rho))
        rep = StringRepresentation(tuple(strings), crossing_pairs, dict(g.labels))
        last = validate_representation(rep, g)
        if last.ok:
            return rep
        rho /= 4
    raise RepresentationError(f"representation failed validation: {last.first_violation}")


# -- SVG ---------------------------------------------------------------------

COLOURS = {
    "red": "#d62728", "blue": "#1f77b4", "white": "#8c8c8c", "jewel": "#8e44ad",
    "red-apex": "#d62728", "blue-apex": "#1f77b4", "yellow": "#d4a017",
}
PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


def export_svg(rep: StringRepresentation, path, g: Graph | None = None, size: int = 800) -> None:
    """Write ``rep`` as SVG: one path per string, coloured by label, with
    crossing points marked. Crossings come from ``validate_representation``
    when ``g`` is given, otherwise from an intersection pass over ``rep``."""
    if g is None:
        g = Graph(rep.n)
        res = validate_representation(rep, g)
    else:
        res = validate_representation(rep, g)
    pts = [p for s in rep.strings for p in s] or [(Fraction(0), Fraction(0))]
    x0, y0, x1, y1 = _bbox(pts)
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    margin = Fraction(size, 20)
    scale = (size - 2 * margin) / span

    def tr(p):
        return (float(margin + (p[0] - x0) * scale), float(margin + (y1 - p[1]) * scale))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for v, s in enumerate(rep.strings):
        lab = rep.labels.get(v)
        colour = COLOURS.get(lab, PALETTE[v % len(PALETTE)])
        dash = ' stroke-dasharray="6,4"' if lab and lab.endswith("apex") else ""
        if len(s) == 1:
            x, y = tr(s[0])
            out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="{colour}"><title>{v}</title></circle>')
            continue
        d = " ".join(f"{'M' if i == 0 else 'L'}{x:.3f},{y:.3f}" for i, (x, y) in enumerate(map(tr, s)))
        out.append(f'<path d="{d}" fill="none" stroke="{colour}" stroke-width="1.5"{dash}>'
                   f'<title>{v}{" " + lab if lab else ""}</title></path>')
    for p in res.crossing_points:
        x, y = tr(p)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2.5" fill="none" stroke="black"/>')
    out.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(out) + "\n")
