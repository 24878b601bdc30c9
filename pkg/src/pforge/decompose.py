"""Constructive Pfister decompositions and the exact 1-fold count.

The 1-fold case is closed form: an element of the fundamental ideal is
the sum of one 1-fold Pfister element per support vector, and the term
for the zero vector vanishes.  The 2-fold greedy peels one subspace at
a time and lands within the support-size upper bound; the exact 2-fold
minimum lives in ``search``.
"""

from __future__ import annotations

from typing import Iterable

from .algebra import GroupAlgebraElement, PfisterElement
from .bits import all_ones, basis_vector, check_dim


class Decomposition:
    """A list of equal-fold Pfister elements summing to a target."""

    __slots__ = ("fold", "terms", "target")

    def __init__(self, fold: int, terms: Iterable[PfisterElement],
                 target: GroupAlgebraElement) -> None:
        if fold < 1:
            raise ValueError("fold must be at least 1")
        terms = tuple(terms)
        for t in terms:
            if t.fold != fold:
                raise ValueError(f"term fold {t.fold} != {fold}")
            if t.n != target.n:
                raise ValueError(
                    f"dimension mismatch: term {t.n}, target {target.n}"
                )
        self.fold = fold
        self.terms = terms
        self.target = target

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Decomposition)
            and self.fold == other.fold
            and self.terms == other.terms
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((self.fold, self.terms, self.target))

    def __repr__(self) -> str:
        return (
            f"Decomposition(fold={self.fold}, terms={len(self.terms)}, "
            f"target={self.target!r})"
        )

    def to_json_dict(self) -> dict:
        return {
            "fold": self.fold,
            "terms": [t.to_json_list() for t in self.terms],
        }

    @classmethod
    def from_json_dict(cls, data: dict,
                       target: GroupAlgebraElement) -> "Decomposition":
        fold = int(data["fold"])
        terms = [
            PfisterElement.from_json_list(target.n, gens)
            for gens in data["terms"]
        ]
        return cls(fold, terms, target)


def verify_decomposition(x: GroupAlgebraElement, d: Decomposition) -> bool:
    """True iff the term expansions sum to x."""
    acc = GroupAlgebraElement.zero(x.n)
    for t in d.terms:
        acc = acc + t.expand()
    return acc == x


def generic_element(n: int) -> GroupAlgebraElement:
    """The extremal element with support on 0 (n even), the basis
    vectors, and their total sum.

    Its exact 2-fold Pfister number is n - 1, the worst case over all
    elements with that support size.
    """
    check_dim(n)
    if n < 2:
        raise ValueError(f"generic element needs dimension >= 2, got {n}")
    sup = {all_ones(n)} | {basis_vector(i, n) for i in range(1, n + 1)}
    if n % 2 == 0:
        sup.add(0)
    return GroupAlgebraElement(n, sup)


def _require_fundamental(x: GroupAlgebraElement) -> None:
    if not x.in_fundamental_ideal():
        raise ValueError(
            "element is not in the fundamental ideal: "
            "coefficient sum (augmentation) is 1"
        )


def _require_i2(x: GroupAlgebraElement) -> None:
    _require_fundamental(x)
    if x.support_sum() != 0:
        raise ValueError(
            "element is not in the squared fundamental ideal: "
            f"support sum is {x.support_sum()}"
        )


def pf1_exact(x: GroupAlgebraElement) -> int:
    """Minimal number of 1-fold Pfister elements summing to x.

    Equals the support size, less one when the unit monomial appears.
    """
    _require_fundamental(x)
    return len(x.support) - (1 if x.has_unit else 0)


def decompose_pf1(x: GroupAlgebraElement) -> Decomposition:
    """A minimal 1-fold decomposition: one term per nonzero support vector."""
    _require_fundamental(x)
    terms = [PfisterElement(x.n, (v,)) for v in x.support if v != 0]
    return Decomposition(1, terms, x)


def pf2_upper(x: GroupAlgebraElement) -> int:
    """Upper bound for the 2-fold count from the support size alone."""
    _require_i2(x)
    if x.is_zero:
        raise ValueError("upper bound is only defined for nonzero elements")
    return len(x.support) - (3 if x.has_unit else 2)


def decompose_pf2_greedy(x: GroupAlgebraElement) -> Decomposition:
    """Peel 2-fold Pfister elements off the two smallest nonzero support
    vectors until nothing is left.

    The result length is at most |support| - 2, and at most
    |support| - 3 when the unit monomial appears: peeling with the unit
    present drops the support size by two, and otherwise introduces the
    unit for the next round.
    """
    _require_i2(x)
    terms: list[PfisterElement] = []
    current = x
    while not current.is_zero:
        nonzero = [v for v in current.support if v != 0]
        # a nonzero residual here has at least 3 nonzero vectors
        u, v = nonzero[0], nonzero[1]
        term = PfisterElement(current.n, (u, v))
        terms.append(term)
        current = current + term.expand()
    return Decomposition(2, terms, x)
