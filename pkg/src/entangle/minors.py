"""Executable minor-theory checks for entanglement.

Each ``check_*`` function measures entanglement values on concrete instances
and returns :class:`TheoremReport` objects.  :func:`transfer_strategy` turns a
winning Cops strategy on ``H`` into one on a contraction ``G`` of ``H`` by
simulating the ``G`` play inside ``H``.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator

from .entanglement import (
    ReactiveStrategy,
    Strategy,
    entanglement,
    entanglement_value,
    verify_strategy,
)
from .errors import ContractViolation, GraphDomainError, SizeLimitError, TransferError
from .game import (
    Position,
    Turn,
    Variant,
    cops_win,
    expected_node_count,
    mask_of,
    mask_members,
)
from .graph import (
    ContractionMap,
    Graph,
    canonical_form,
    contract_edge,
    delete_vertex,
    graphs_up_to,
    one_step_minors,
    to_edge_list,
    to_graph6,
)

SUITE_MAX_N = 6
SUITES = ("prop1", "lemma1", "theorem2", "prop3", "claim", "roundtrip", "transfer")


def describe(g: Graph) -> str:
    """graph6 for undirected graphs, a one-line edge list for digraphs."""
    if not g.directed:
        return to_graph6(g)
    return to_edge_list(g).strip().replace("\n", ";")


@dataclass
class TheoremReport:
    theorem: str
    instance: dict[str, Any]
    relation: str
    measured: dict[str, Any]
    passed: bool
    counterexample: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "relation": self.relation,
            "measured": self.measured,
            "verdict": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _report(theorem, instance, relation, measured, passed, counterexample=None):
    if not passed and counterexample is None:
        counterexample = dict(instance)
    return TheoremReport(theorem, instance, relation, measured, passed, counterexample)


def _guard(h: Graph, limit: int = SUITE_MAX_N) -> None:
    if h.n > limit:
        raise SizeLimitError(f"check supports |V_H| <= {limit}, got {h.n}")


def is_labeled_subgraph(g: Graph, h: Graph) -> bool:
    return set(g.vertices) <= set(h.vertices) and g.edges <= h.edges and g.directed == h.directed


# ------------------------------------------------------------------ checks


def check_subgraph_lemma(g: Graph, h: Graph) -> TheoremReport:
    """A subgraph never has larger entanglement."""
    if not is_labeled_subgraph(g, h):
        raise ContractViolation("G is not a labelled subgraph of H")
    eg, eh = entanglement_value(g), entanglement_value(h)
    return _report(
        "lemma1", {"G": describe(g), "H": describe(h)}, "Ent(G) <= Ent(H)",
        {"ent_G": eg, "ent_H": eh}, eg <= eh,
    )


def check_minor_monotonicity(h: Graph) -> list[TheoremReport]:
    _guard(h)
    eh = entanglement_value(h)
    out = []
    for op, g in one_step_minors(h):
        eg = entanglement_value(g)
        out.append(_report(
            "theorem2", {"H": describe(h), "operation": str(op), "G": describe(g)},
            "Ent(G) <= Ent(H)", {"ent_G": eg, "ent_H": eh}, eg <= eh,
        ))
    return out


def _deleted_vertex_witness(op, h: Graph) -> int:
    # a vertex v with H minus v a labelled subgraph of the minor
    if op.kind == "delete_edge":
        return op.operands[0]
    if op.kind == "contract_edge":
        return max(op.operands)
    return op.operands[0]


def check_direct_minor_bound(h: Graph) -> list[TheoremReport]:
    """A single minor step lowers entanglement by at most one."""
    _guard(h)
    eh = entanglement_value(h)
    out = []
    for op, g in one_step_minors(h):
        eg = entanglement_value(g)
        v = _deleted_vertex_witness(op, h)
        witness_ok = is_labeled_subgraph(delete_vertex(h, v), g)
        out.append(_report(
            "prop3", {"H": describe(h), "operation": str(op), "G": describe(g)},
            "Ent(H) - 1 <= Ent(G)",
            {"ent_G": eg, "ent_H": eh, "witness_vertex": v, "H_minus_v_subgraph_of_G": witness_ok},
            eh - 1 <= eg and witness_ok,
        ))
    return out


def check_vertex_deletion_claim(h: Graph) -> list[TheoremReport]:
    _guard(h)
    eh = entanglement_value(h)
    out = []
    for v in h.vertices:
        ev = entanglement_value(delete_vertex(h, v))
        out.append(_report(
            "claim", {"H": describe(h), "v": v}, "Ent(H) <= Ent(H - v) + 1",
            {"ent_H": eh, "ent_H_minus_v": ev}, eh <= ev + 1,
        ))
    return out


def check_variant_equivalence(g: Graph) -> list[TheoremReport]:
    """Standard and generalized cop moves have the same winner for every k."""
    _guard(g)
    out = []
    for k in range(g.n + 1):
        std = cops_win(g, k, Variant.STANDARD)
        gen = cops_win(g, k, Variant.GENERALIZED)
        out.append(_report(
            "prop1", {"G": describe(g), "k": k}, "cops_win(standard) == cops_win(generalized)",
            {"standard": std, "generalized": gen}, std == gen,
        ))
    return out


def check_strategy_roundtrip(h: Graph) -> TheoremReport:
    _guard(h)
    res = entanglement(h)
    rep = verify_strategy(h, res.value, Variant.STANDARD, res.strategy)
    return _report(
        "roundtrip", {"H": describe(h), "k": res.value}, "extracted strategy wins",
        {"verdict": rep.verdict, "states": rep.states_explored}, rep.won,
        None if rep.won else rep.to_dict(),
    )


def check_transfer(h: Graph) -> list[TheoremReport]:
    """Transfer the certifying strategy of ``h`` along every contraction and verify it."""
    _guard(h)
    res = entanglement(h)
    k = res.value
    out = []
    for e in h.edge_list() if not h.directed else []:
        g, cm = contract_edge(h, *e)
        instance = {"H": describe(h), "contracted_edge": list(e), "G": describe(g), "k": k}
        try:
            rep = verify_strategy(g, k, Variant.GENERALIZED, transfer_strategy(res.strategy, cm, k))
        except TransferError as exc:
            out.append(_report("transfer", instance, "transferred strategy wins ET(G,k)",
                               {"error": str(exc)}, False, {"trace": [str(t) for t in exc.trace]}))
            continue
        out.append(_report(
            "transfer", instance, "transferred strategy wins ET(G,k)",
            {"verdict": rep.verdict, "states": rep.states_explored}, rep.won,
            None if rep.won else rep.to_dict(),
        ))
    return out


# --------------------------------------------------------- strategy transfer


class TransferredStrategy(ReactiveStrategy):
    """Cops strategy for the generalized game on a contraction ``G`` of ``H``.

    Memory is ``(h, C_H, tag)``: the matched Robber-turn position of the
    standard game on ``H`` and how Robber last moved (``start``, ``outside``,
    ``entering``, ``leaving``).  Every step replays Robber's ``G`` move in
    ``H`` (possibly as several moves around the contracted edge), asks the
    ``H`` strategy for the answer and returns its image under the contraction
    map.  The matching invariants are checked after every exchange.
    """

    initial_memory = None

    def __init__(self, sigma_h: Strategy, cm: ContractionMap, k: int):
        if sigma_h.variant != Variant.STANDARD:
            raise ContractViolation("the source strategy must be for the standard game")
        if sigma_h.k != k:
            raise ContractViolation(f"source strategy is for k={sigma_h.k}, not {k}")
        if sigma_h.graph != cm.source:
            raise ContractViolation("source strategy and contraction map disagree on H")
        self.sigma = sigma_h
        self.cm = cm
        self.k = k
        self.h = cm.source
        self.g = cm.target
        self.a, self.b, self.z = cm.a, cm.b, cm.z
        self.ab = mask_of((self.a, self.b))
        self.alternation_bound = 2 * (expected_node_count(self.h.n, k) + 1)

    def f_mask(self, mask: int) -> int:
        return mask_of(self.cm.image(mask_members(mask)))

    # one step of the simulated H play

    def _cops_in_h(self, h: int, cops: int, trace: list) -> int:
        pos = Position(h, cops, Turn.COPS)
        trace.append(pos)
        answer = self.sigma.get(pos)
        if answer is None:
            raise TransferError(f"H strategy undefined at {pos}", trace)
        trace.append(answer)
        return answer.cops

    def _robber_in_h(self, h: int, w: int, cops: int, trace: list) -> None:
        if w not in self.h.adjacency[h] or cops >> w & 1:
            raise TransferError(f"simulated Robber move {h} -> {w} is illegal in H", trace)

    def _enter(self, start: int, cops: int, trace: list) -> tuple[int, int]:
        """Robber alternates between a and b until the H strategy changes the cop set."""
        x, other = start, (self.b if start == self.a else self.a)
        for _ in range(self.alternation_bound):
            new = self._cops_in_h(x, cops, trace)
            if new != cops:
                return x, new
            self._robber_in_h(x, other, cops, trace)
            x, other = other, x
        raise TransferError("a/b alternation did not terminate", trace)

    def step(self, memory: Hashable, pos: Position) -> tuple[Hashable, Position | None]:
        w, c_g = pos.v, pos.cops
        trace: list = [("G", pos)]
        if memory is None:
            tag = "start"
            if w == self.z:
                h_new, c_new = self._enter(self.a, 0, trace)
            else:
                h_new, c_new = w, self._cops_in_h(w, 0, trace)
        else:
            h, c_h, _ = memory
            g_prev = self.cm(h)
            if self.f_mask(c_h) != c_g:
                raise TransferError("COPS invariant broken before Cops move", trace)
            if g_prev != self.z and w != self.z:
                tag = "outside"
                self._robber_in_h(h, w, c_h, trace)
                h_new, c_new = w, self._cops_in_h(w, c_h, trace)
            elif w == self.z:
                tag = "entering"
                start = self.a if self.a in self.h.adjacency[h] else self.b
                self._robber_in_h(h, start, c_h, trace)
                h_new, c_new = self._enter(start, c_h, trace)
            else:
                tag = "leaving"
                if w in self.h.adjacency[h]:
                    self._robber_in_h(h, w, c_h, trace)
                    h_new, c_new = w, self._cops_in_h(w, c_h, trace)
                else:
                    y = self.b if h == self.a else self.a
                    self._robber_in_h(h, y, c_h, trace)
                    c_mid = self._cops_in_h(y, c_h, trace)
                    self._robber_in_h(y, w, c_mid, trace)
                    h_new, c_new = w, self._cops_in_h(w, c_mid, trace)
        chosen = Position(w, self.f_mask(c_new), Turn.ROBBER)
        self._check_invariants(chosen, h_new, c_new, trace)
        return (h_new, c_new, tag), chosen

    def _check_invariants(self, chosen: Position, h: int, c_h: int, trace: list) -> None:
        if self.cm(h) != chosen.v or self.f_mask(c_h) != chosen.cops:
            raise TransferError("COPS invariant broken: g != f(h) or C_G != f(C_H)", trace)
        if chosen.v == self.z:
            if not (chosen.cops >> self.z & 1 and c_h >> h & 1 and (c_h & self.ab).bit_count() == 1):
                raise TransferError("Robber-Z invariant broken", trace)


def transfer_strategy(sigma_h: Strategy, cm: ContractionMap, k: int) -> TransferredStrategy:
    """Cops strategy for the generalized ``k``-cop game on ``cm.target`` built from ``sigma_h`` on ``cm.source``."""
    if not cm.check():
        raise GraphDomainError("contraction map does not reproduce its target")
    return TransferredStrategy(sigma_h, cm, k)


# ------------------------------------------------------------ obstructions


@dataclass
class ObstructionSet:
    k: int
    n_max: int
    members: list[Graph]
    entanglements: list[int]
    complete: bool
    duplicates_dropped: int = 0

    @property
    def codes(self) -> list[bytes]:
        return [canonical_form(g) for g in self.members]

    @property
    def all_exactly_k_plus_1(self) -> bool:
        return all(e == self.k + 1 for e in self.entanglements)

    def manifest(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "count": len(self.members),
            "complete": self.complete,
            "all_exactly_k_plus_1": self.all_exactly_k_plus_1,
            "members": [to_graph6(g) for g in self.members],
            "entanglements": self.entanglements,
        }


def find_obstructions(
    k: int, n_max: int, graphs: Iterable[Graph] | None = None, complete: bool = False
) -> ObstructionSet:
    """Minor-minimal graphs of entanglement above ``k`` among ``graphs``.

    Without ``graphs`` all undirected graphs on ``1..n_max`` vertices are
    generated (``n_max <= 6``) and the result is complete within that bound.
    Minimality is tested on one-step minors only.
    """
    if k < 0:
        raise GraphDomainError("k must be non-negative")
    if graphs is None:
        if n_max > SUITE_MAX_N:
            raise SizeLimitError(f"internal enumeration supports n_max <= {SUITE_MAX_N}")
        graphs = graphs_up_to(n_max)
        complete = True
    found: dict[bytes, Graph] = {}
    dropped = 0
    for g in graphs:
        if g.directed:
            raise GraphDomainError("obstruction search is for undirected graphs")
        if g.n > n_max:
            continue
        code = canonical_form(g)
        if code in found:
            dropped += 1
            continue
        found[code] = g
    if dropped:
        warnings.warn(f"dropped {dropped} isomorphic duplicate(s) from obstruction input", stacklevel=2)
    members, values = [], []
    for code in sorted(found):
        g = found[code]
        e = entanglement_value(g)
        if e > k and all(entanglement_value(m) <= k for _, m in one_step_minors(g)):
            members.append(g.compact())
            values.append(e)
    return ObstructionSet(k, n_max, members, values, complete, dropped)


# ------------------------------------------------------------------ suites


def _lemma1_pairs(n_max: int, count: int, seed: int) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        h_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        keep = [v for v in range(n) if rng.random() < 0.8] or [0]
        kept = set(keep)
        g_edges = [e for e in h_edges if e[0] in kept and e[1] in kept and rng.random() < 0.5]
        pairs.append((Graph.from_edges(keep, g_edges), Graph.from_edges(n, h_edges)))
    return pairs


def _lemma1_task(pair):
    return [check_subgraph_lemma(*pair)]


def _prop1_task(g):
    return check_variant_equivalence(g)


def _roundtrip_task(g):
    return [check_strategy_roundtrip(g)]


_GRAPH_TASKS: dict[str, Callable] = {
    "theorem2": check_minor_monotonicity,
    "prop3": check_direct_minor_bound,
    "claim": check_vertex_deletion_claim,
    "roundtrip": _roundtrip_task,
    "transfer": check_transfer,
}


@dataclass
class SuitePlan:
    """The work items of one suite: a picklable task function and its inputs."""

    name: str
    task: Callable[[Any], list[TheoremReport]]
    items: list[Any] = field(default_factory=list)


def plan_suite(name: str, n_max: int, seed: int = 0, lemma1_pairs: int = 500) -> SuitePlan:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n_max > SUITE_MAX_N:
        raise SizeLimitError(f"suites support n_max <= {SUITE_MAX_N}, got {n_max}")
    if name == "lemma1":
        return SuitePlan(name, _lemma1_task, _lemma1_pairs(n_max, lemma1_pairs, seed))
    if name == "prop1":
        items = graphs_up_to(n_max) + graphs_up_to(min(n_max, 4), directed=True)
        return SuitePlan(name, _prop1_task, items)
    return SuitePlan(name, _GRAPH_TASKS[name], graphs_up_to(n_max))


def run_suite(name: str, n_max: int, seed: int = 0) -> Iterator[TheoremReport]:
    plan = plan_suite(name, n_max, seed)
    for item in plan.items:
        yield from plan.task(item)
