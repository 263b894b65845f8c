"""Closed-form index for trees and its conjectural block-chain extension.

For a tree that is not a path, the index equals a min-max over leaf-to-leaf
paths: pick an endpath carrying a pair of branches whose joint absorption time
is maximal, then pay for the heaviest branch left off that endpath. Path
graphs cost nothing.

The conjectural extension contracts every bridgeless piece of a general graph
to a point (all such pieces must have a spanning cycle for the formula to
apply), evaluates the same min-max on the resulting tree, and keeps branch
weights as measured in the original graph. Results carry a `conjectural` flag;
compare_formula_oracle pits them against the exact stage loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branches import Branch, absorption_time, branches, endpaths
from .canon import graph_key
from .errors import CappedError, EmptyCandidateError, PreconditionError
from .graphs import Graph, blocks_and_cuts, is_connected, is_path, is_tree
from .io import to_edge_list
from .oracles import (DEFAULT_SEARCH_BUDGET, IndexResult, SearchBudget,
                      has_hamiltonian_cycle, hp_oracle)

PairValue = tuple[tuple[tuple[str, ...], tuple[str, ...]], int | None]


@dataclass(frozen=True)
class FormulaResult:
    """Outcome of the min-max evaluation.

    `endpath` and `off_path_branch` are vertex walks (None for path graphs,
    and None for the off-path branch when nothing is left off the endpath).
    `per_pair` lists, for every maximum-weight branch pair, the best value an
    endpath through that pair achieves; these all coincide with `value`.
    """

    value: int
    endpath: tuple[str, ...] | None
    off_path_branch: tuple[str, ...] | None
    per_pair: tuple[PairValue, ...]
    conjectural: bool

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "endpath": None if self.endpath is None else list(self.endpath),
            "off_path_branch": (None if self.off_path_branch is None
                                else list(self.off_path_branch)),
            "per_pair": [{"pair": [list(a), list(b)],
                          "value": v} for (a, b), v in self.per_pair],
            "conjectural": self.conjectural,
        }


@dataclass(frozen=True)
class _WeightedPath:
    """A path on the evaluation tree with the weight it contributes."""

    walk: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    weight: int


def _evaluate(tree: Graph, items: tuple[_WeightedPath, ...],
              ) -> tuple[int, tuple[str, ...], tuple[str, ...] | None,
                         tuple[PairValue, ...]]:
    """Min-max over endpaths of the heaviest item left off the endpath.

    Only endpaths containing a maximum-weight item pair compete. Ties break
    toward the lexicographically least leaf pair, and toward the least walk
    for the reported off-path item.
    """
    containment = []
    for ep in endpaths(tree):
        on_path = frozenset((a, b) if a <= b else (b, a)
                            for a, b in zip(ep.vertices, ep.vertices[1:]))
        inside = frozenset(i for i, it in enumerate(items)
                           if it.edges <= on_path)
        containment.append((ep, inside))

    best_sum = -1
    pairs: set[frozenset[int]] = set()
    for _, inside in containment:
        lst = sorted(inside)
        for a, i in enumerate(lst):
            for j in lst[a + 1:]:
                s = items[i].weight + items[j].weight
                if s > best_sum:
                    best_sum = s
                    pairs = {frozenset((i, j))}
                elif s == best_sum:
                    pairs.add(frozenset((i, j)))

    candidates = [(ep, inside) for ep, inside in containment
                  if any(p <= inside for p in pairs)]
    if not candidates:
        raise EmptyCandidateError(to_edge_list(tree))

    chosen = None
    chosen_value = -1
    for ep, inside in candidates:
        off = [it for i, it in enumerate(items) if i not in inside]
        value = max((it.weight for it in off), default=0)
        if chosen is None or value < chosen_value:
            chosen, chosen_value = (ep, off), value
    ep, off = chosen
    heavy = sorted((it.walk for it in off if it.weight == chosen_value))
    off_walk = heavy[0] if off else None

    per_pair: list[PairValue] = []
    for p in sorted(pairs, key=lambda p: sorted(items[i].walk for i in p)):
        walks = tuple(sorted(items[i].walk for i in p))
        vals = [max((it.weight for i2, it in enumerate(items) if i2 not in inside),
                    default=0)
                for _, inside in candidates if p <= inside]
        per_pair.append(((walks[0], walks[1]), min(vals) if vals else None))
    return chosen_value, ep.vertices, off_walk, tuple(per_pair)


def _branch_items(brs: tuple[Branch, ...]) -> tuple[_WeightedPath, ...]:
    return tuple(_WeightedPath(b.vertices, frozenset(b.edges()),
                               absorption_time(b))
                 for b in brs if b.is_bridge_branch)


def hp_tree(t: Graph) -> FormulaResult:
    """Closed-form index of a tree. Zero for paths, min-max otherwise."""
    if not is_tree(t):
        raise PreconditionError("the closed form applies to trees")
    if is_path(t):
        return FormulaResult(0, None, None, (), False)
    value, ep, off, per_pair = _evaluate(t, _branch_items(branches(t)))
    return FormulaResult(value, ep, off, per_pair, False)


def bridge_reduction(g: Graph) -> Graph:
    """Contract each bridgeless piece of a connected graph to one vertex.

    The surviving edges are exactly the bridges, so the result is a tree.
    Contracted pieces are labeled by their sorted member tokens joined with
    "+" inside brackets; single vertices keep their token.
    """
    if not is_connected(g):
        raise PreconditionError("bridge reduction needs a connected graph")
    bridges = blocks_and_cuts(g).bridges
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        if (a, b) not in bridges:
            parent[find(a)] = find(b)
    members: dict[int, list[str]] = {}
    for v in range(g.n):
        members.setdefault(find(v), []).append(g.labels[v])
    label_of = {}
    for root, toks in members.items():
        toks.sort()
        label_of[root] = toks[0] if len(toks) == 1 else "[" + "+".join(toks) + "]"
    labels = sorted(label_of.values())
    pos = {lab: i for i, lab in enumerate(labels)}
    edges = [(pos[label_of[find(a)]], pos[label_of[find(b)]])
             for a, b in bridges]
    return Graph(tuple(labels), edges)


def reduction_label_map(g: Graph) -> dict[str, str]:
    """Token of each g vertex mapped to its bridge_reduction vertex token."""
    r = bridge_reduction(g)
    out = {}
    for lab in r.labels:
        if lab.startswith("[") and lab.endswith("]"):
            for tok in lab[1:-1].split("+"):
                out[tok] = lab
        else:
            out[lab] = lab
    return out


def _subgraph_from_edges(g: Graph, edge_pairs) -> Graph:
    verts = sorted({v for e in edge_pairs for v in e},
                   key=lambda v: g.labels[v])
    pos = {v: i for i, v in enumerate(verts)}
    return Graph(tuple(g.labels[v] for v in verts),
                 [(pos[a], pos[b]) for a, b in edge_pairs])


def hp_blockchain_conjecture(g: Graph,
                             budget: SearchBudget = DEFAULT_SEARCH_BUDGET,
                             ) -> FormulaResult:
    """Conjectural index of a connected graph whose cycle blocks all have
    spanning cycles.

    Trees fall through to the exact closed form. Otherwise the graph is
    bridge-reduced to a tree and the tree min-max runs over the images of the
    bridge branches, weighted as they are in the original graph: a branch
    ending on a contracted piece is charged like one running into a junction.
    """
    if not is_connected(g):
        raise PreconditionError("the conjectural formula needs a connected graph")
    if is_tree(g):
        return hp_tree(g)
    dec = blocks_and_cuts(g)
    for bi in dec.two_blocks():
        ok, _ = has_hamiltonian_cycle(_subgraph_from_edges(g, dec.blocks[bi]),
                                      budget)
        if not ok:
            raise PreconditionError(
                "the conjectural formula requires a spanning cycle in every "
                "cycle block")
    r = bridge_reduction(g)
    if is_path(r):
        return FormulaResult(0, None, None, (), True)
    to_r = reduction_label_map(g)
    items = []
    for b in branches(g):
        if not b.is_bridge_branch:
            continue
        walk = tuple(to_r[t] for t in b.vertices)
        if walk[-1] < walk[0]:
            walk = walk[::-1]
        edges = frozenset((a, b2) if a <= b2 else (b2, a)
                          for a, b2 in zip(walk, walk[1:]))
        items.append(_WeightedPath(walk, edges, absorption_time(b)))
    value, ep, off, per_pair = _evaluate(r, tuple(items))
    return FormulaResult(value, ep, off, per_pair, True)


@dataclass(frozen=True)
class ExplorerRecord:
    """One formula-versus-oracle comparison, ready for a campaign report."""

    graph_key: str
    graph_edges: tuple[tuple[str, str], ...]
    family_tag: str
    formula_value: int | None
    oracle_value: int | None
    verdict: str
    formula: FormulaResult | None
    oracle: IndexResult

    def to_json_dict(self) -> dict:
        return {
            "graph_key": self.graph_key,
            "graph_edges": [list(e) for e in self.graph_edges],
            "family_tag": self.family_tag,
            "formula_value": self.formula_value,
            "oracle_value": ("capped" if self.oracle_value is None
                             else self.oracle_value),
            "verdict": self.verdict,
            "formula": None if self.formula is None else self.formula.to_json_dict(),
            "oracle": self.oracle.to_json_dict(),
        }


def compare_formula_oracle(g: Graph,
                           budget: SearchBudget = DEFAULT_SEARCH_BUDGET,
                           family_tag: str = "") -> ExplorerRecord:
    """Run the (possibly conjectural) formula and the exact stage loop side
    by side. The verdict is "agree", "mismatch", or "capped" when the oracle
    ran out of budget before settling the value.
    """
    try:
        formula = hp_blockchain_conjecture(g, budget)
        formula_value: int | None = formula.value
    except CappedError:
        formula, formula_value = None, None
    oracle = hp_oracle(g, budget)
    if formula_value is None or oracle.value is None:
        verdict = "capped"
    else:
        verdict = "agree" if formula_value == oracle.value else "mismatch"
    return ExplorerRecord(graph_key(g), g.label_edges(), family_tag,
                          formula_value, oracle.value, verdict, formula, oracle)
