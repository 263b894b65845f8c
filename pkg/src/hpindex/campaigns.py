"""Verification campaigns and the conclusion explorer.

Each campaign walks a declared instance family, tallies verdicts, and packs
the result into a CampaignReport. Report bodies are deterministic byte for
byte: parameters are echoed in full, witnesses are sorted by canonical key,
and the wall clock lives outside the body. A rerun with the same parameters
and seed must reproduce the body exactly.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Any

from .canon import graph_key
from .errors import CappedError, ValidationError
from .formula import ExplorerRecord, compare_formula_oracle
from .generators import (
    FREE_TREE_CAP,
    LABELED_GRAPH_CAP,
    FamilyParams,
    enumerate_connected_graphs,
    enumerate_free_trees,
    gen_hamiltonian_2block_family,
)
from .graphs import Graph
from .linegraph import line_graph
from .oracles import (
    DEFAULT_SEARCH_BUDGET,
    SearchBudget,
    has_dominating_trail,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
)
from .version import __version__

VERDICTS = ("agree", "mismatch", "capped")


@dataclass(frozen=True)
class CampaignReport:
    """Summary of one campaign run.

    `counts` maps each verdict to how many instances landed there and always
    carries all three keys; the counts sum to `instances`. `witnesses` holds
    the full record of every mismatch, sorted by canonical graph key.
    """

    campaign: str
    parameters: dict[str, Any]
    seed: int | None
    instances: int
    counts: dict[str, int]
    witnesses: tuple[dict[str, Any], ...]
    wall_clock_s: float

    def __post_init__(self) -> None:
        if sorted(self.counts) != sorted(VERDICTS):
            raise ValidationError("campaign counts must cover exactly the verdicts")
        if sum(self.counts.values()) != self.instances:
            raise ValidationError("campaign counts must sum to instances processed")

    def body_dict(self) -> dict[str, Any]:
        """Everything except the wall clock; the reproducible part."""
        return {
            "campaign": self.campaign,
            "version": __version__,
            "parameters": self.parameters,
            "seed": self.seed,
            "instances": self.instances,
            "counts": {v: self.counts[v] for v in VERDICTS},
            "witnesses": list(self.witnesses),
        }

    def body_bytes(self) -> bytes:
        return json.dumps(self.body_dict(), sort_keys=True, indent=2).encode()

    def to_json_dict(self) -> dict[str, Any]:
        out = self.body_dict()
        out["wall_clock_s"] = self.wall_clock_s
        return out


def _tally(records: list[ExplorerRecord]) -> tuple[dict[str, int], tuple[dict, ...]]:
    records.sort(key=lambda r: r.graph_key)
    counts = {v: 0 for v in VERDICTS}
    for rec in records:
        counts[rec.verdict] += 1
    witnesses = tuple(r.to_json_dict() for r in records if r.verdict == "mismatch")
    return counts, witnesses


def verify_trees(max_n: int,
                 budget: SearchBudget = DEFAULT_SEARCH_BUDGET) -> CampaignReport:
    """Tree formula versus the iterated-line-graph oracle, all trees <= max_n."""
    if not 1 <= max_n <= FREE_TREE_CAP:
        raise ValidationError(f"verify trees supports max_n in 1..{FREE_TREE_CAP}")
    start = time.monotonic()
    records = []
    for n in range(1, max_n + 1):
        for i, tree in enumerate(enumerate_free_trees(n)):
            records.append(compare_formula_oracle(tree, budget, f"T{n}.{i}"))
    counts, witnesses = _tally(records)
    return CampaignReport("verify-trees", {"max_n": max_n}, None, len(records),
                          counts, witnesses, time.monotonic() - start)


def _trail_record(g: Graph, tag: str, trail_ok: bool | None,
                  line_ok: bool, kind: str) -> dict[str, Any]:
    record = {
        "graph_key": graph_key(g),
        "graph_edges": [list(e) for e in g.label_edges()],
        "family_tag": tag,
        kind: "capped" if trail_ok is None else trail_ok,
        "line_graph_ok": line_ok,
    }
    if trail_ok is None:
        record["verdict"] = "capped"
    else:
        record["verdict"] = "agree" if trail_ok == line_ok else "mismatch"
    return record


def _verify_trail_criterion(name: str, max_n: int, min_edges: int, closed: bool,
                            budget: SearchBudget) -> CampaignReport:
    if not 2 <= max_n <= LABELED_GRAPH_CAP:
        raise ValidationError(
            f"{name} supports max_n in 2..{LABELED_GRAPH_CAP}")
    start = time.monotonic()
    kind = "dominating_closed_trail" if closed else "dominating_trail"
    records: list[dict[str, Any]] = []
    for n in range(2, max_n + 1):
        for i, g in enumerate(enumerate_connected_graphs(n)):
            if g.m < min_edges:
                continue
            lg = line_graph(g).graph
            if closed:
                line_ok, _ = has_hamiltonian_cycle(lg, budget)
            else:
                line_ok, _ = has_hamiltonian_path(lg, budget)
            try:
                trail_ok, _ = has_dominating_trail(g, budget, closed=closed)
            except CappedError:
                trail_ok = None
            records.append(_trail_record(g, f"n{n}.{i}", trail_ok, line_ok, kind))
    records.sort(key=lambda r: r["graph_key"])
    counts = {v: 0 for v in VERDICTS}
    for rec in records:
        counts[rec["verdict"]] += 1
    witnesses = tuple(r for r in records if r["verdict"] == "mismatch")
    return CampaignReport(name, {"max_n": max_n}, None, len(records),
                          counts, witnesses, time.monotonic() - start)


def verify_xiongzong(max_n: int,
                     budget: SearchBudget = DEFAULT_SEARCH_BUDGET) -> CampaignReport:
    """Dominating trail in g versus traceable L(g), exhaustively for n <= max_n."""
    return _verify_trail_criterion("verify-xiongzong", max_n, 1, False, budget)


def verify_hnw(max_n: int,
               budget: SearchBudget = DEFAULT_SEARCH_BUDGET) -> CampaignReport:
    """Dominating closed trail versus hamiltonian L(g), needs >= 3 edges."""
    return _verify_trail_criterion("verify-hnw", max_n, 3, True, budget)


def explore_conclusion(params: FamilyParams,
                       budget: SearchBudget = DEFAULT_SEARCH_BUDGET,
                       ) -> CampaignReport:
    """Hunt for graphs where the block-chain formula misses the true index.

    Runs the formula-versus-oracle comparison across the glued-cycle family.
    Every mismatch goes into the witness list with its full structure; a
    clean run produces an honest negative report over the family searched.
    """
    start = time.monotonic()
    records = [compare_formula_oracle(g, budget, tag)
               for g, tag in gen_hamiltonian_2block_family(params)]
    counts, witnesses = _tally(records)
    parameters = {
        "max_vertices": params.max_vertices,
        "cycle_sizes": sorted(set(params.cycle_sizes)),
        "base_tree_source": params.base_tree_source,
        "include_bases": params.include_bases,
        "random_bases": params.random_bases,
    }
    return CampaignReport("explore-conclusion", parameters, params.seed,
                          len(records), counts, witnesses,
                          time.monotonic() - start)
