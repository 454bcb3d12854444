"""
Facility-side strategic layer.

Best responses, SPE certification and improving-response dynamics. The
sorted load vector is an ordinal potential: every strictly improving
relocation increases it lexicographically, so the dynamics terminate in
an SPE.
"""
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..utils.config import config
from ..utils.constants import MSG_DYNAMICS_DONE, MSG_DYNAMICS_MOVE
from ..utils.exceptions import InvalidFacilityError, InvariantViolationError, MoveCapExceededError
from ..utils.formatter import format_rational
from ..utils.logger import logger
from .equilibrium import compute_equilibrium_loads
from .model import HostGraph, LoadVector, Placement

PotentialVector = Tuple[Fraction, ...]


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def potential_vector(loads: Iterable[Fraction]) -> PotentialVector:
    """Loads sorted ascending."""
    return tuple(sorted(Fraction(x) for x in loads))


def lex_compare(a: Sequence[Fraction], b: Sequence[Fraction]) -> Ordering:
    """
    Compare two equal-length vectors lexicographically from the first index.

    Raises:
        ValueError: If the lengths differ
    """
    if len(a) != len(b):
        raise ValueError(f"cannot compare vectors of lengths {len(a)} and {len(b)}")
    for x, y in zip(a, b):
        if x < y:
            return Ordering.LESS
        if x > y:
            return Ordering.GREATER
    return Ordering.EQUAL


class LoadCache:
    """
    Memoized equilibrium loads of one host graph.

    Loads depend only on the multiset of occupied locations, and
    co-located facilities carry equal loads, so entries are keyed by the
    sorted location tuple and store one load per location.
    """

    def __init__(self, g: HostGraph):
        self.graph = g
        self._entries: Dict[Tuple[int, ...], Dict[int, Fraction]] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, s: Placement) -> bool:
        return s.multiset() in self._entries

    def store(self, s: Placement, loads: LoadVector) -> None:
        self._entries[s.multiset()] = {location: loads[j] for j, location in enumerate(s)}

    def loads(self, s: Placement) -> LoadVector:
        """Equilibrium loads of ``s``, computed on first request."""
        key = s.multiset()
        per_location = self._entries.get(key)
        if per_location is None:
            self.misses += 1
            loads = compute_equilibrium_loads(self.graph, s).loads
            self.store(s, loads)
            return loads
        self.hits += 1
        return LoadVector(tuple(per_location[location] for location in s))


@dataclass(frozen=True)
class BestResponse:
    location: int
    load: Fraction


@dataclass(frozen=True)
class Deviation:
    """A strictly improving relocation of one facility."""
    facility: int
    location: int
    load: Fraction


@dataclass(frozen=True)
class SpeCheck:
    holds: bool
    deviation: Optional[Deviation] = None

    def __bool__(self) -> bool:
        return self.holds


def best_response(
    g: HostGraph,
    s: Placement,
    j: int,
    cache: Optional[LoadCache] = None,
    workers: Optional[int] = None,
) -> BestResponse:
    """
    Best relocation of facility ``j`` against the others.

    Every vertex is tried as a candidate. Among maximizers of ``j``'s
    load the current location wins, then the smallest vertex id.

    Args:
        g: Host graph
        s: Current placement
        j: Facility index
        cache: Optional shared load cache
        workers: Process count for candidate evaluation (defaults to config)

    Returns:
        BestResponse with the chosen location and the load it yields
    """
    s.check_facility(j)
    s.validate(g)
    cache = cache if cache is not None else LoadCache(g)
    workers = config.solver.workers if workers is None else workers

    candidates = [s.relocate(j, v) for v in range(g.n)]
    pending = [c for c in candidates if c not in cache]
    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            full = list(pool.map(_full_loads, [(g, c) for c in pending]))
        for placement, loads in zip(pending, full):
            cache.store(placement, loads)

    current = s[j]
    best = BestResponse(current, cache.loads(s)[j])
    for v, candidate in enumerate(candidates):
        load = cache.loads(candidate)[j]
        if load > best.load:
            best = BestResponse(v, load)
    return best


def _full_loads(args: Tuple[HostGraph, Placement]) -> LoadVector:
    g, s = args
    return compute_equilibrium_loads(g, s).loads


def is_spe(g: HostGraph, s: Placement, cache: Optional[LoadCache] = None) -> SpeCheck:
    """
    Check that no facility can strictly increase its load by relocating.

    Co-located facilities face the same options, so one facility per
    occupied location is checked.

    Returns:
        SpeCheck, carrying the first improving deviation when it fails
    """
    s.validate(g)
    cache = cache if cache is not None else LoadCache(g)
    current = cache.loads(s)
    seen = set()
    for j, location in enumerate(s):
        if location in seen:
            continue
        seen.add(location)
        response = best_response(g, s, j, cache)
        if response.load > current[j]:
            return SpeCheck(False, Deviation(j, response.location, response.load))
    return SpeCheck(True)


@dataclass(frozen=True)
class Move:
    """One improving relocation with the loads before and after it."""
    index: int
    mover: int
    old_location: int
    new_location: int
    loads_before: LoadVector
    loads_after: LoadVector

    @property
    def old_load(self) -> Fraction:
        return self.loads_before[self.mover]

    @property
    def new_load(self) -> Fraction:
        return self.loads_after[self.mover]

    @property
    def potential_before(self) -> PotentialVector:
        return potential_vector(self.loads_before)

    @property
    def potential_after(self) -> PotentialVector:
        return potential_vector(self.loads_after)


@dataclass(frozen=True)
class DynamicsTrace:
    initial: Placement
    moves: Tuple[Move, ...]
    terminal: Placement
    terminal_loads: LoadVector

    @property
    def move_count(self) -> int:
        return len(self.moves)


def random_placement(g: HostGraph, k: int, seed: int) -> Placement:
    """Uniform random placement, deterministic per seed."""
    if k > 0 and g.n == 0:
        raise InvalidFacilityError("cannot place facilities on an empty graph")
    rng = random.Random(seed)
    return Placement(tuple(rng.randrange(g.n) for _ in range(k)))


def find_spe(
    g: HostGraph,
    k: int,
    initial: Optional[Union[Placement, Sequence[int]]] = None,
    seed: int = 0,
    move_cap: Optional[int] = None,
    cache: Optional[LoadCache] = None,
) -> DynamicsTrace:
    """
    Run round-robin best-response dynamics until no facility improves.

    Args:
        g: Host graph
        k: Number of facilities
        initial: Starting placement; a random one from ``seed`` if None
        seed: Seed of the random starting placement
        move_cap: Maximum number of moves (defaults to config)
        cache: Optional shared load cache

    Returns:
        DynamicsTrace ending in an SPE

    Raises:
        MoveCapExceededError: If the dynamics need more than ``move_cap`` moves
        InvariantViolationError: If a move fails to raise the potential
    """
    move_cap = config.dynamics.move_cap if move_cap is None else move_cap
    if move_cap < 1:
        raise ValueError(f"move_cap must be at least 1, got {move_cap}")
    if initial is None:
        s = random_placement(g, k, seed)
    else:
        s = initial if isinstance(initial, Placement) else Placement(tuple(initial))
    if s.k != k:
        raise InvalidFacilityError(f"initial placement has {s.k} facilities, expected {k}")
    s.validate(g)
    cache = cache if cache is not None else LoadCache(g)
    start = s
    moves: List[Move] = []

    improved = True
    while improved:
        improved = False
        for j in range(k):
            loads = cache.loads(s)
            response = best_response(g, s, j, cache)
            if response.load <= loads[j]:
                continue
            if len(moves) >= move_cap:
                raise MoveCapExceededError(f"dynamics exceeded the move cap of {move_cap}")
            moved = s.relocate(j, response.location)
            move = Move(len(moves) + 1, j, s[j], response.location, loads, cache.loads(moved))
            if lex_compare(move.potential_after, move.potential_before) is not Ordering.GREATER:
                raise InvariantViolationError(f"move {move.index} did not increase the potential")
            logger.debug(MSG_DYNAMICS_MOVE.format(
                index=move.index, mover=j, old=move.old_location, new=move.new_location,
                old_load=format_rational(move.old_load), new_load=format_rational(move.new_load),
            ))
            moves.append(move)
            s = moved
            improved = True

    logger.info(MSG_DYNAMICS_DONE.format(moves=len(moves)))
    return DynamicsTrace(start, tuple(moves), s, cache.loads(s))
