"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: parse/validation/precondition problems
exit 2, resource caps exit 1.
"""

from __future__ import annotations


class HPIndexError(Exception):
    """Base class for all package-specific errors."""


class EdgeListParseError(HPIndexError):
    """Malformed edge-list or graph6 input. Carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ValidationError(HPIndexError):
    """Structurally invalid data: self-loops, bad parameters, out-of-range sizes."""


class PreconditionError(HPIndexError):
    """Input outside an operation's stated domain (disconnected, not a tree, ...)."""


class TooLargeError(HPIndexError):
    """Instance exceeds a hard feasibility cap (canonicalization size, search blowup)."""


class BudgetExceededError(HPIndexError):
    """An iterated line graph would outgrow the configured budget."""

    def __init__(self, stage: int, predicted_vertices: int, predicted_edges: int,
                 max_vertices: int, max_edges: int):
        super().__init__(
            f"stage {stage}: predicted size |V|={predicted_vertices}, "
            f"|E|={predicted_edges} exceeds budget ({max_vertices}, {max_edges})"
        )
        self.stage = stage
        self.predicted_vertices = predicted_vertices
        self.predicted_edges = predicted_edges


class EdgeStarvationError(HPIndexError):
    """Iteration asked to take the line graph of an edgeless graph."""

    def __init__(self, stage: int):
        super().__init__(f"stage {stage}: graph has no edges left to iterate")
        self.stage = stage


class CappedError(HPIndexError):
    """An exact search ran out of time or size budget. Never a wrong answer."""


class EmptyCandidateError(HPIndexError):
    """No endpath contains any weight-maximal branch pair.

    Believed unreachable for trees; the offending graph is serialized into the
    message so a report can be filed if it ever fires.
    """

    def __init__(self, witness_edge_list: str):
        super().__init__(
            "no endpath contains a maximal branch pair; witness graph:\n"
            + witness_edge_list
        )
        self.witness_edge_list = witness_edge_list


class InternalCheckError(HPIndexError):
    """A built-in consistency check failed, e.g. a witness did not replay.

    Indicates a bug in this package, not bad input.
    """
