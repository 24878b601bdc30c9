"""Exact arithmetic in the group algebra F2[V] for V = (Z/2Z)^n.

An element is stored by its support: the set of v in V whose monomial
X^v carries coefficient 1.  Addition is symmetric difference of
supports and multiplication distributes X^u * X^v = X^(u+v) with
coefficients reduced mod 2.  The coefficient-sum and support-sum maps
cut out the fundamental ideal and its square, which is all the
structure the decomposition and search layers rely on.

Supports are canonicalized as sorted tuples of ints, so equality and
hashing are structural and elements can serve as cache keys.  Every
object in this module is an immutable value; mixing ambient dimensions
is an error, and a linear pushforward is the only sanctioned way to
move between dimensions.
"""

from __future__ import annotations

from typing import Iterable

from .bits import (
    basis_vector,
    check_dim,
    check_vector,
    format_vector,
    is_independent,
    parse_vector,
    span,
    xor_all,
)


class GroupAlgebraElement:
    """An element of F2[V], stored as its support set."""

    __slots__ = ("n", "support")

    def __init__(self, n: int, support: Iterable[int] = ()) -> None:
        check_dim(n)
        vecs = sorted(support)
        prev = -1
        for v in vecs:
            check_vector(v, n)
            if v == prev:
                raise ValueError(f"duplicate support vector {v}")
            prev = v
        self.n = n
        self.support = tuple(vecs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, (0,))

    @classmethod
    def monomial(cls, n: int, v: int) -> "GroupAlgebraElement":
        """The monomial X^v."""
        return cls(n, (v,))

    @classmethod
    def from_parity(cls, n: int, vectors: Iterable[int]) -> "GroupAlgebraElement":
        """Sum of monomials X^v, keeping vectors with odd multiplicity."""
        seen: set[int] = set()
        for v in vectors:
            seen ^= {v}
        return cls(n, seen)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.support

    @property
    def has_unit(self) -> bool:
        """Whether the monomial X^0 = 1 appears."""
        return bool(self.support) and self.support[0] == 0

    @property
    def size(self) -> int:
        return len(self.support)

    def augmentation(self) -> int:
        """Coefficient sum in F2: the parity of the support size."""
        return len(self.support) & 1

    def support_sum(self) -> int:
        """XOR of all support vectors (the discriminant analogue)."""
        return xor_all(self.support)

    def in_fundamental_ideal(self) -> bool:
        return self.augmentation() == 0

    def in_i2(self) -> bool:
        """Membership in the square of the fundamental ideal."""
        return self.augmentation() == 0 and self.support_sum() == 0

    # -- arithmetic ---------------------------------------------------

    def _check_same(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(
                f"dimension mismatch: {self.n} != {other.n}"
            )

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check_same(other)
        return GroupAlgebraElement(
            self.n, set(self.support) ^ set(other.support)
        )

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check_same(other)
        acc: set[int] = set()
        for u in self.support:
            for v in other.support:
                acc ^= {u ^ v}
        return GroupAlgebraElement(self.n, acc)

    def scaled(self, v: int) -> "GroupAlgebraElement":
        """Multiplication by the monomial X^v: translates the support."""
        check_vector(v, self.n)
        return GroupAlgebraElement(self.n, (v ^ u for u in self.support))

    # -- value semantics ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.support == other.support
        )

    def __hash__(self) -> int:
        return hash((self.n, self.support))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self.n}, {self.support})"

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(
            "1" if v == 0 else f"X^{format_vector(v, self.n)}"
            for v in self.support
        )

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "support": [format_vector(v, self.n) for v in self.support],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GroupAlgebraElement":
        n = int(data["n"])
        vecs = []
        for s in data["support"]:
            v, m = parse_vector(s)
            if m != n:
                raise ValueError(f"bitstring {s!r} has length {m}, expected {n}")
            vecs.append(v)
        return cls(n, vecs)


class PfisterElement:
    """A product (1 + X^v1) ... (1 + X^vm) given by its m generators."""

    __slots__ = ("n", "generators")

    def __init__(self, n: int, generators: Iterable[int]) -> None:
        check_dim(n)
        gens = tuple(generators)
        if len(gens) < 1:
            raise ValueError("a Pfister element needs at least one generator")
        for g in gens:
            check_vector(g, n)
        self.n = n
        self.generators = gens

    @property
    def fold(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        """The product vanishes iff the generators are F2-dependent."""
        return not is_independent(self.generators)

    def expand(self) -> GroupAlgebraElement:
        """Multiply the factors out.

        For independent generators the subset sums are pairwise distinct
        and the support is the full span; any dependency makes every
        coefficient even, hence zero.
        """
        if self.is_zero:
            return GroupAlgebraElement.zero(self.n)
        return GroupAlgebraElement(self.n, span(self.generators))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PfisterElement)
            and self.n == other.n
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        return f"PfisterElement({self.n}, {self.generators})"

    def to_json_list(self) -> list[str]:
        return [format_vector(g, self.n) for g in self.generators]

    @classmethod
    def from_json_list(cls, n: int, data: Iterable[str]) -> "PfisterElement":
        gens = []
        for s in data:
            v, m = parse_vector(s)
            if m != n:
                raise ValueError(f"bitstring {s!r} has length {m}, expected {n}")
            gens.append(v)
        return cls(n, gens)


class LinearMap:
    """An F2-linear map given by the images of the basis vectors.

    ``columns[i]`` is the image of basis vector i+1 (1-based), encoded
    in the codomain's bit convention.
    """

    __slots__ = ("domain_dim", "codomain_dim", "columns")

    def __init__(self, domain_dim: int, codomain_dim: int,
                 columns: Iterable[int]) -> None:
        check_dim(domain_dim)
        check_dim(codomain_dim)
        cols = tuple(columns)
        if len(cols) != domain_dim:
            raise ValueError(
                f"expected {domain_dim} columns, got {len(cols)}"
            )
        for c in cols:
            check_vector(c, codomain_dim)
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        self.columns = cols

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, (basis_vector(i, n) for i in range(1, n + 1)))

    @classmethod
    def zero(cls, domain_dim: int, codomain_dim: int) -> "LinearMap":
        return cls(domain_dim, codomain_dim, (0,) * domain_dim)

    def apply(self, v: int) -> int:
        check_vector(v, self.domain_dim)
        acc = 0
        n = self.domain_dim
        for i, col in enumerate(self.columns):
            if (v >> (n - 1 - i)) & 1:
                acc ^= col
        return acc

    def __repr__(self) -> str:
        return (
            f"LinearMap({self.domain_dim}, {self.codomain_dim}, "
            f"{self.columns})"
        )


def pushforward(phi: LinearMap, x: GroupAlgebraElement) -> GroupAlgebraElement:
    """The induced ring homomorphism, applied to one element.

    Sends X^v to X^(phi v); support vectors that collide cancel mod 2.
    """
    if phi.domain_dim != x.n:
        raise ValueError(
            f"dimension mismatch: map domain {phi.domain_dim}, element {x.n}"
        )
    return GroupAlgebraElement.from_parity(
        phi.codomain_dim, (phi.apply(v) for v in x.support)
    )
