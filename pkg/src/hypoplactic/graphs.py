"""Connected components of the crystal and quasi-crystal graphs.

Both graphs have all words over 1..n as vertices and an edge labelled i
from u to v exactly when the lowering operator for i sends u to v; the
two graphs differ only in the operator family.  Components are finite
(operators preserve length), every vertex has at most one in- and one
out-edge per label, and each component has a unique root on which no
raising operator acts.

Isomorphism of components (bijective, weight-preserving, edge- and
label-preserving) is decided by canonical signatures: a breadth-first
traversal from the root, following out-edges in increasing label order,
yields a canonical numbering, and the signature records each vertex's
weight and labelled out-neighbours as visit indices.  Since there is at
most one out-edge per label, two components are isomorphic exactly when
their signatures coincide, and then the visit numbering itself is the
unique isomorphism.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .operators import kashiwara_e, kashiwara_f, quasi_e, quasi_f
from .quasiribbon import hypo_rsk, standard_ribbon, slide_up_slide_left
from .words import (
    Composition,
    Word,
    check_alphabet,
    compositions,
    format_word,
    has_inversion,
    is_standard,
    parse_word,
    schuetzenberger_involution,
    weight,
)
from .young import rsk

CRYSTAL = "crystal"
QUASI_CRYSTAL = "quasi-crystal"

_OPERATORS = {
    CRYSTAL: (kashiwara_e, kashiwara_f),
    QUASI_CRYSTAL: (quasi_e, quasi_f),
}

Edge = tuple[Word, int, Word]


def _normalize_kind(kind: str) -> str:
    if kind == CRYSTAL:
        return CRYSTAL
    if kind in (QUASI_CRYSTAL, "quasi"):
        return QUASI_CRYSTAL
    raise ValueError(f"unknown graph kind {kind!r}")


class Component:
    """A finite connected component with its unique highest-weight root.

    ``out`` maps each vertex to its labelled out-neighbours; every
    vertex of the component appears as a key, sinks included.
    """

    def __init__(self, kind: str, n: int, root: Word, out: dict[Word, dict[int, Word]]):
        self.kind = _normalize_kind(kind)
        self.n = n
        self.root = root
        self.out = {u: dict(sorted(ts.items())) for u, ts in out.items()}
        self.vertices = frozenset(self.out)
        if root not in self.vertices:
            raise ValueError("root is not a vertex of the component")
        labelled_targets = [(i, v) for ts in self.out.values() for i, v in ts.items()]
        if not {v for _, v in labelled_targets} <= self.vertices:
            raise ValueError("edge target outside the component")
        if len(labelled_targets) != len(set(labelled_targets)):
            raise ValueError("some vertex has two in-edges with one label")
        if any(v == root for _, v in labelled_targets):
            raise ValueError("root must have no in-edges")
        self._order: Optional[list[Word]] = None
        self._index: Optional[dict[Word, int]] = None

    @property
    def edges(self) -> list[Edge]:
        return sorted(
            (u, i, v) for u, ts in self.out.items() for i, v in ts.items()
        )

    def canonical_order(self) -> list[Word]:
        """Vertices in breadth-first order from the root, out-edges
        visited by increasing label.  Covers the whole component."""
        if self._order is None:
            order = [self.root]
            index = {self.root: 0}
            queue = deque([self.root])
            while queue:
                u = queue.popleft()
                for i, v in self.out[u].items():
                    if v not in index:
                        index[v] = len(order)
                        order.append(v)
                        queue.append(v)
            if len(order) != len(self.vertices):
                raise ValueError("component is not reachable from its root")
            self._order = order
            self._index = index
        return self._order

    def index_of(self, w: Word) -> int:
        self.canonical_order()
        return self._index[w]

    def signature(self) -> tuple:
        """Canonical encoding deciding isomorphism: per visited vertex,
        its weight and its labelled out-edges as visit indices."""
        order = self.canonical_order()
        index = self._index
        return tuple(
            (weight(u), tuple((i, index[v]) for i, v in self.out[u].items()))
            for u in order
        )

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return (
            f"Component(kind={self.kind!r}, n={self.n}, "
            f"root={format_word(self.root)!r}, size={len(self.vertices)})"
        )


def explore_component(w: Word, n: int, kind: str) -> Component:
    """Closure of ``w`` under the raising and lowering operators of the
    chosen kind, with labels 1..n-1."""
    kind = _normalize_kind(kind)
    check_alphabet(w, n)
    raise_op, lower_op = _OPERATORS[kind]
    out: dict[Word, dict[int, Word]] = {}
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        targets: dict[int, Word] = {}
        for i in range(1, n):
            v = lower_op(u, i)
            if v is not None:
                targets[i] = v
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
            p = raise_op(u, i)
            if p is not None and p not in seen:
                seen.add(p)
                queue.append(p)
        out[u] = targets
    has_in = {v for ts in out.values() for v in ts.values()}
    roots = [u for u in out if u not in has_in]
    if len(roots) != 1:
        raise AssertionError(f"component of {format_word(w)!r} has roots {roots}")
    return Component(kind, n, roots[0], out)


def highest_weight_word(w: Word, n: int, kind: str) -> Word:
    """Greedily apply raising operators until none is defined."""
    kind = _normalize_kind(kind)
    check_alphabet(w, n)
    raise_op, _ = _OPERATORS[kind]
    current = w
    raised = True
    while raised:
        raised = False
        for i in range(1, n):
            nxt = raise_op(current, i)
            if nxt is not None:
                current = nxt
                raised = True
                break
    return current


def is_highest_weight_hypo(w: Word) -> bool:
    """Whether no quasi raising operator acts on ``w``: the word holds
    every symbol 1..max(w) and has an i-inversion for each i below
    max(w)."""
    if not w:
        return True
    m = max(w)
    if set(w) != set(range(1, m + 1)):
        return False
    return all(has_inversion(w, i) for i in range(1, m))


def component_signature(c: Component) -> tuple:
    return c.signature()


def sim_related(u: Word, v: Word, n: int) -> bool:
    """Whether ``u`` and ``v`` sit at the same position of isomorphic
    quasi-crystal components."""
    cu = explore_component(u, n, QUASI_CRYSTAL)
    cv = explore_component(v, n, QUASI_CRYSTAL)
    return cu.signature() == cv.signature() and cu.index_of(u) == cv.index_of(v)


def same_recording_ribbon(u: Word, v: Word, n: int) -> bool:
    """Whether insertion records ``u`` and ``v`` identically, which is
    exactly membership in one quasi-crystal component."""
    check_alphabet(u, n)
    check_alphabet(v, n)
    return hypo_rsk(u)[1] == hypo_rsk(v)[1]


def crystal_overlay(w: Word, n: int) -> tuple[list[Edge], list[Edge]]:
    """Edges of the crystal component of ``w``, split into those the
    quasi operators also perform and the crystal-only remainder."""
    component = explore_component(w, n, CRYSTAL)
    quasi_edges: list[Edge] = []
    crystal_only: list[Edge] = []
    for u, i, v in component.edges:
        mirrored = quasi_f(u, i)
        if mirrored is not None:
            assert mirrored == v, "quasi operator disagrees with its restriction"
            quasi_edges.append((u, i, v))
        else:
            crystal_only.append((u, i, v))
    return quasi_edges, crystal_only


def plac_component_contains_qrw(w: Word, n: int) -> bool:
    """Whether the crystal component of ``w`` contains a quasi-ribbon
    word: its recording tableau must arise from the standard filling of
    some ribbon shape with at most n rows by slide up-slide left."""
    check_alphabet(w, n)
    q = rsk(w)[1]
    for alpha in compositions(len(w)):
        if len(alpha) <= n and slide_up_slide_left(standard_ribbon(alpha)) == q:
            return True
    return False


def is_interval_reversing(p: Word) -> Optional[Composition]:
    """The composition whose consecutive blocks ``p`` reverses in place,
    or None when no such composition exists.

    Each block is forced: a block starting at position s+1 must have
    length p[s+1] - s, so at most one candidate exists.
    """
    if not is_standard(p):
        raise ValueError(f"expected a standard word, got {format_word(p)!r}")
    parts = []
    s = 0
    while s < len(p):
        length = p[s] - s
        if length < 1 or s + length > len(p):
            return None
        if any(p[s + k] != s + length - k for k in range(length)):
            return None
        parts.append(length)
        s += length
    return tuple(parts)


def involution_edge_check(c: Component, n: int) -> bool:
    """Whether reversing and complementing maps every edge u -i-> v of
    the quasi-crystal component onto an edge v' -(n-i)-> u' between the
    image words."""
    if c.kind != QUASI_CRYSTAL:
        raise ValueError("involution edge check applies to quasi-crystal components")
    if c.n != n:
        raise ValueError("alphabet bound disagrees with the component")
    for u, i, v in c.edges:
        image_source = schuetzenberger_involution(v, n)
        image_target = schuetzenberger_involution(u, n)
        if quasi_f(image_source, n - i) != image_target:
            return False
    return True


def component_to_dot(c: Component, dotted: Iterable[Edge] = ()) -> str:
    """Graphviz rendering; edges listed in ``dotted`` get style=dotted
    (used for crystal-only edges in overlay mode)."""
    dotted = set(dotted)
    lines = ["digraph {"]
    for v in c.canonical_order():
        lines.append(f'  "{format_word(v)}";')
    for u, i, v in c.edges:
        style = ", style=dotted" if (u, i, v) in dotted else ""
        lines.append(
            f'  "{format_word(u)}" -> "{format_word(v)}" [label="{i}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def component_to_json_dict(c: Component) -> dict:
    """JSON form with deterministic ordering, so dumps round-trip."""
    def edge_is_quasi(u: Word, i: int) -> bool:
        return c.kind == QUASI_CRYSTAL or quasi_f(u, i) is not None

    return {
        "kind": c.kind,
        "n": c.n,
        "root": format_word(c.root),
        "vertices": [format_word(v) for v in sorted(c.vertices)],
        "edges": [
            {
                "from": format_word(u),
                "label": i,
                "to": format_word(v),
                "quasi": edge_is_quasi(u, i),
            }
            for u, i, v in c.edges
        ],
    }


def component_from_json_dict(data: dict) -> Component:
    out: dict[Word, dict[int, Word]] = {parse_word(v): {} for v in data["vertices"]}
    for edge in data["edges"]:
        out[parse_word(edge["from"])][edge["label"]] = parse_word(edge["to"])
    return Component(data["kind"], data["n"], parse_word(data["root"]), out)
