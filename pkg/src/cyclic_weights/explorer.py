"""Search for cycles in the successor graph of generic weights.

Vertices are weights (digits plus twist); edges go from a weight to its
generic successors.  `find_cycles` enumerates, depth first and in sorted
order, all simple cycles through a start weight up to a length bound,
anchoring each cycle at the start so rotations are never reported twice.
Every cycle is turned into the corresponding cyclic module and checked.
`canonical_chain_check` compares the cycles the search finds against the
chains built from each rotation of the seed tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import build_chain, period
from .cyclic_module import (
    CyclicModule,
    build_cyclic_module,
    is_multiplicity_free,
    make_extension_pair,
    successor_weights,
    validate_cyclic_module,
)
from .errors import DomainError
from .weights import Params, Weight, is_generic, make_weight


def successors(w: Weight) -> tuple:
    """Generic successor weights of w, sorted."""
    found = successor_weights(w)
    return tuple(s for s in found.weights if is_generic(s))


def cycle_module(vertices) -> CyclicModule:
    """The cyclic module whose subs walk the cycle once."""
    n = len(vertices)
    pairs = tuple(
        make_extension_pair(vertices[(i + 1) % n], vertices[i]) for i in range(n)
    )
    return CyclicModule(pairs, vertices[0].params)


@dataclass(frozen=True)
class CycleReport:
    vertices: tuple
    valid: bool
    multiplicity_free: bool
    boundary_vertices: tuple


@dataclass(frozen=True)
class CycleSearchResult:
    params: Params
    start: Weight
    max_len: int
    cycles: tuple
    cycle_reports: tuple
    canonical_hits: tuple
    pruned_boundary: int
    truncated: bool
    visits: int


def _boundary(vertices) -> tuple:
    out = []
    for v in vertices:
        p = v.params.p
        if any(d < 1 or d > p - 3 for d in v.digits):
            out.append(v)
    return tuple(out)


def find_cycles(start: Weight, max_len: int, budget: int = 10**7) -> CycleSearchResult:
    """All simple cycles through `start` with at most `max_len` vertices.

    The search stops once `budget` vertex visits have been spent and then
    reports itself truncated rather than silently incomplete.
    """
    params = start.params
    if max_len < 1:
        raise DomainError(f"max_len must be positive, got {max_len}")
    if not is_generic(start):
        raise DomainError("cycle search starts at a generic weight")

    succ_cache: dict = {}

    def expand(v):
        if v not in succ_cache:
            found = successor_weights(v)
            succ_cache[v] = (
                tuple(s for s in found.weights if is_generic(s)),
                len(found.pruned),
            )
        return succ_cache[v][0]

    cycles = []
    path = [start]
    on_path = {start}
    visits = 0
    truncated = False

    def dfs():
        nonlocal visits, truncated
        if truncated:
            return
        for nxt in expand(path[-1]):
            visits += 1
            if visits > budget:
                truncated = True
                return
            if nxt == start:
                cycles.append(tuple(path))
            elif nxt not in on_path and len(path) < max_len:
                path.append(nxt)
                on_path.add(nxt)
                dfs()
                path.pop()
                on_path.discard(nxt)
            if truncated:
                return

    dfs()
    cycles.sort()

    reports = []
    for cyc in cycles:
        module = cycle_module(cyc)
        reports.append(
            CycleReport(
                vertices=cyc,
                valid=validate_cyclic_module(module).passed,
                multiplicity_free=is_multiplicity_free(module),
                boundary_vertices=_boundary(cyc),
            )
        )

    hits = []
    for rotation in range(params.f):
        chain_cycle = _rotation_cycle(start, rotation)
        if chain_cycle is not None and chain_cycle in cycles:
            hits.append(rotation)

    pruned = sum(n for (_, n) in succ_cache.values())
    return CycleSearchResult(
        params=params,
        start=start,
        max_len=max_len,
        cycles=tuple(cycles),
        cycle_reports=tuple(reports),
        canonical_hits=tuple(hits),
        pruned_boundary=pruned,
        truncated=truncated,
        visits=visits,
    )


def _rotation_cycle(start: Weight, rotation: int):
    """Vertex sequence of the chain seeded by the given rotation, or None
    when the start digits leave the interior box."""
    try:
        chain = build_chain(start.params, start.digits, start.twist, rotation)
    except DomainError:
        return None
    return chain.weights[:-1]


@dataclass(frozen=True)
class RotationChainReport:
    rotation: int
    closes: bool
    length: int | None
    valid: bool
    multiplicity_free: bool
    found_by_search: bool


@dataclass(frozen=True)
class CanonicalChainReport:
    params: Params
    start: Weight
    rotations: tuple
    extras: tuple
    search: CycleSearchResult

    @property
    def all_found(self) -> bool:
        return all(r.found_by_search for r in self.rotations)


def canonical_chain_check(params: Params, r, m: int = 0) -> CanonicalChainReport:
    """Build one chain per seed rotation and confirm the cycle search
    rediscovers each; surface any further clean cycles as extras."""
    start = make_weight(r, m, params)
    search = find_cycles(start, period(params))

    rotation_cycles = []
    rows = []
    for rotation in range(params.f):
        try:
            chain = build_chain(params, r, m, rotation)
        except DomainError:
            rows.append(RotationChainReport(rotation, False, None, False, False, False))
            continue
        module = build_cyclic_module(chain)
        cyc = chain.weights[:-1]
        rotation_cycles.append(cyc)
        rows.append(
            RotationChainReport(
                rotation=rotation,
                closes=True,
                length=chain.length,
                valid=validate_cyclic_module(module).passed,
                multiplicity_free=is_multiplicity_free(module),
                found_by_search=cyc in search.cycles,
            )
        )

    extras = []
    for cyc, rep in zip(search.cycles, search.cycle_reports):
        if cyc in rotation_cycles:
            continue
        if rep.valid and rep.multiplicity_free:
            extras.append(cyc)

    return CanonicalChainReport(
        params=params,
        start=start,
        rotations=tuple(rows),
        extras=tuple(extras),
        search=search,
    )
