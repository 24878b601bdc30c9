"""Exact 2-fold Pfister number search.

Every nonzero 2-fold Pfister element has support {0, u, v, u+v}, a
2-dimensional subspace, so the minimal decomposition question is: how
few such subspaces XOR to the target support?  Two structural facts
drive the pruning:

* each candidate support contains 0, so a sum of t terms contains 0 in
  its support iff t is odd; the target fixes the parity of t;
* each term has exactly three nonzero support vectors, so t is at
  least a third of the number of nonzero target vectors.

The default strategy is iterative deepening: at every node the least
(numerically smallest) uncovered vector of the residual support must be
covered an odd number of times, hence by some remaining term, so
branching is limited to candidate subspaces through that vector.
Residuals exhausted at a given depth budget are memoized as bitmask
keys.  The alternative meet-in-the-middle strategy XOR-joins half-size
combinations of candidate supports and serves as a structurally
different cross-check.

Candidates are restricted to the span of the target support by default.
Projecting any decomposition onto that span fixes the target and maps
terms to terms, so the restriction never loses minimality.

Whatever the strategy, exhausting the node budget yields a ``bounded``
outcome carrying certified lower and upper bounds, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import GroupAlgebraElement, LinearMap, PfisterElement, pushforward
from .bits import basis_vector, rank, span
from .decompose import Decomposition, _require_i2, decompose_pf2_greedy

DEFAULT_NODE_BUDGET = 5_000_000

STRATEGY_IDDFS = "iddfs"
STRATEGY_MITM = "mitm"
STRATEGIES = (STRATEGY_IDDFS, STRATEGY_MITM)


class SearchBudgetExceeded(RuntimeError):
    """Raised when an exact value is required but the budget ran out."""


class _BudgetExceeded(Exception):
    """Internal signal: node budget exhausted mid-search."""


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = DEFAULT_NODE_BUDGET
    strategy: str = STRATEGY_IDDFS
    restrict_to_support_span: bool = True

    def __post_init__(self) -> None:
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.strategy not in STRATEGIES:
            raise ValueError(
                f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}"
            )


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "exact" or "bounded"
    lower: int
    upper: int
    nodes_visited: int
    value: int | None = None
    witness: Decomposition | None = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def to_json_dict(self) -> dict:
        out = {
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "nodes_visited": self.nodes_visited,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


class _SearchSpace:
    """Candidate 2-dimensional subspaces of a span, indexed for search.

    Span points are sorted ascending, so bit i of a residual mask is the
    i-th smallest span vector and bit 0 is the zero vector.  A candidate
    is keyed by its two smallest nonzero members (a, b) with a < b < a^b.
    """

    __slots__ = ("points", "index", "keys", "masks", "by_vector")

    def __init__(self, generators) -> None:
        self.points = span(generators)
        self.index = {v: i for i, v in enumerate(self.points)}
        nonzero = self.points[1:]
        keys: list[tuple[int, int]] = []
        for ia, a in enumerate(nonzero):
            for b in nonzero[ia + 1:]:
                if a ^ b > b:
                    keys.append((a, b))
        self.keys = keys  # generation order is ascending (a, b)
        self.masks = []
        self.by_vector: dict[int, list[int]] = {v: [] for v in nonzero}
        for ci, (a, b) in enumerate(keys):
            c = a ^ b
            mask = (
                1
                | (1 << self.index[a])
                | (1 << self.index[b])
                | (1 << self.index[c])
            )
            self.masks.append(mask)
            self.by_vector[a].append(ci)
            self.by_vector[b].append(ci)
            self.by_vector[c].append(ci)

    def element_mask(self, support) -> int:
        mask = 0
        for v in support:
            mask |= 1 << self.index[v]
        return mask

    @staticmethod
    def candidate_count(r: int) -> int:
        """Number of 2-dimensional subspaces in a span of rank r."""
        s = (1 << r) - 1
        return s * (s - 1) // 6


def _min_terms_bound(mask: int) -> int:
    """Sound lower bound on the number of terms XORing to this mask."""
    has_unit = mask & 1
    nonzero = mask.bit_count() - has_unit
    need = (nonzero + 2) // 3
    if need & 1 != has_unit:
        need += 1
    return need


class _Searcher:
    """Depth-limited DFS over candidate subspaces, with memoized failures."""

    __slots__ = ("space", "budget", "nodes", "memo")

    def __init__(self, space: _SearchSpace, node_budget: int) -> None:
        self.space = space
        self.budget = node_budget
        self.nodes = 0
        self.memo: dict[int, int] = {}

    def find(self, mask: int, depth: int) -> list[int] | None:
        """Candidate ids of a decomposition with at most ``depth`` terms."""
        if mask == 0:
            return []
        if depth == 0:
            return None
        if _min_terms_bound(mask) > depth:
            return None
        if self.memo.get(mask, 0) >= depth:
            return None
        nonzero_bits = mask & ~1
        # a nonzero residual of a valid target always has nonzero vectors
        assert nonzero_bits, "residual {0} cannot occur for valid input"
        low = nonzero_bits & -nonzero_bits
        w = self.space.points[low.bit_length() - 1]
        for ci in self.space.by_vector[w]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExceeded
            sub = self.find(mask ^ self.space.masks[ci], depth - 1)
            if sub is not None:
                return [ci] + sub
        self.memo[mask] = depth
        return None


def _mitm_find(space: _SearchSpace, target: int, t: int,
               nodes: list[int], budget: int) -> list[int] | None:
    """First t-subset of candidates XORing to target, in probe order.

    Halves may in principle overlap, but an overlapping hit would imply
    a decomposition of size t - 2k of the same parity, which earlier
    iterations already excluded; the assert guards that reasoning.
    """
    count = len(space.masks)
    a = t // 2
    b = t - a
    table: dict[int, tuple[int, ...]] = {}
    for combo in combinations(range(count), a):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _BudgetExceeded
        m = 0
        for ci in combo:
            m ^= space.masks[ci]
        table.setdefault(m, combo)
    for combo in combinations(range(count), b):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _BudgetExceeded
        m = target
        for ci in combo:
            m ^= space.masks[ci]
        hit = table.get(m)
        if hit is not None:
            ids = sorted(hit + combo)
            assert len(set(ids)) == t, "overlapping halves imply a smaller sum"
            return ids
    return None


def _witness_from_ids(space: _SearchSpace, ids, x: GroupAlgebraElement) -> Decomposition:
    terms = [PfisterElement(x.n, space.keys[ci]) for ci in ids]
    return Decomposition(2, terms, x)


def _exact_outcome(value: int, witness: Decomposition, nodes: int) -> SearchOutcome:
    return SearchOutcome(
        status="exact",
        lower=value,
        upper=value,
        nodes_visited=nodes,
        value=value,
        witness=witness,
    )


def pf2_exact(x: GroupAlgebraElement,
              cfg: SearchConfig | None = None) -> SearchOutcome:
    """Exact minimal number of 2-fold Pfister elements summing to x.

    Returns an exact outcome with a verified witness, or a bounded
    outcome when the node budget runs out, with the greedy decomposition
    as the upper-bound certificate.
    """
    if cfg is None:
        cfg = SearchConfig()
    _require_i2(x)
    if x.is_zero:
        return _exact_outcome(0, Decomposition(2, (), x), 0)

    greedy = decompose_pf2_greedy(x)
    g = len(greedy.terms)
    if cfg.restrict_to_support_span:
        generators = x.support
    else:
        generators = [basis_vector(i, x.n) for i in range(1, x.n + 1)]
    r = rank(generators)
    n_candidates = _SearchSpace.candidate_count(r)

    nonzero = len(x.support) - (1 if x.has_unit else 0)
    lower = (nonzero + 2) // 3
    if lower & 1 != (1 if x.has_unit else 0):
        lower += 1

    if lower >= g:
        return _exact_outcome(g, greedy, 0)
    if n_candidates > cfg.node_budget:
        return SearchOutcome(
            status="bounded",
            lower=lower,
            upper=g,
            nodes_visited=0,
            witness=greedy,
        )

    space = _SearchSpace(generators)
    target = space.element_mask(x.support)
    nodes = n_candidates

    if cfg.strategy == STRATEGY_IDDFS:
        searcher = _Searcher(space, cfg.node_budget - nodes)
        for depth in range(lower, g, 2):
            try:
                found = searcher.find(target, depth)
            except _BudgetExceeded:
                return SearchOutcome(
                    status="bounded",
                    lower=depth,
                    upper=g,
                    nodes_visited=nodes + searcher.nodes,
                    witness=greedy,
                )
            if found is not None:
                return _exact_outcome(
                    depth, _witness_from_ids(space, found, x),
                    nodes + searcher.nodes,
                )
        return _exact_outcome(g, greedy, nodes + searcher.nodes)

    # meet in the middle
    node_box = [0]
    for t in range(lower, g, 2):
        try:
            found = _mitm_find(space, target, t, node_box,
                               cfg.node_budget - nodes)
        except _BudgetExceeded:
            return SearchOutcome(
                status="bounded",
                lower=t,
                upper=g,
                nodes_visited=nodes + node_box[0],
                witness=greedy,
            )
        if found is not None:
            return _exact_outcome(
                t, _witness_from_ids(space, found, x), nodes + node_box[0]
            )
    return _exact_outcome(g, greedy, nodes + node_box[0])


def projection_lower_bound(x: GroupAlgebraElement, phi: LinearMap,
                           cfg: SearchConfig | None = None) -> int:
    """Exact 2-fold count of the pushforward, a lower bound for x.

    The induced homomorphism maps 2-fold Pfister elements to 2-fold
    Pfister elements (possibly zero), so no decomposition of x can beat
    the minimum on the projected side.
    """
    _require_i2(x)
    out = pf2_exact(pushforward(phi, x), cfg)
    if not out.exact:
        raise SearchBudgetExceeded(
            "projection search exhausted its node budget before certifying "
            f"an exact value (lower {out.lower}, upper {out.upper})"
        )
    assert out.value is not None
    return out.value
