"""
Edge lists for standard posets and random hierarchies, in (child, parent) form ready for `build_poset`.
"""
from itertools import combinations
from typing import List, Tuple

import numpy as np
from numpy.random import Generator

Edges = List[Tuple[str, str]]

BOTTOM = "⊥"
TOP = "⊤"


def ex9_edges() -> Edges:
    """
    A nine-element bounded poset of height 5 with six maximal chains and a single spindle chain ⊥ A H K ⊤. It mixes
    precisely ranked elements with ones of rank width 1 and 2, and has two elements (E and J) with equal ranks.
    """
    return [
        (BOTTOM, "A"),
        (BOTTOM, "B"),
        (BOTTOM, "E"),
        (BOTTOM, "J"),
        ("A", "H"),
        ("H", "K"),
        ("J", "C"),
        ("J", "K"),
        ("E", "C"),
        ("E", "K"),
        ("B", TOP),
        ("C", TOP),
        ("K", TOP),
    ]


def n5_edges() -> Edges:
    """
    The pentagon: ⊥ < C < A < ⊤ on one side and ⊥ < B < ⊤ on the other.
    """
    return [(BOTTOM, "C"), ("C", "A"), ("A", TOP), (BOTTOM, "B"), ("B", TOP)]


def chain_edges(n: int) -> Edges:
    if n < 2:
        raise ValueError("A bounded chain needs at least 2 elements, got {}".format(n))
    ids = ["c{}".format(i) for i in range(n)]
    return list(zip(ids, ids[1:]))


def two_element_edges() -> Edges:
    return [(BOTTOM, TOP)]


def boolean_lattice_edges(n: int) -> Edges:
    """
    Subsets of an n-element set ordered by inclusion, named by their bit strings ("000" is the bottom).
    """

    def name(mask: int) -> str:
        return format(mask, "0{}b".format(n))

    return [(name(mask), name(mask | 1 << bit)) for mask in range(1 << n) for bit in range(n) if not mask & 1 << bit]


def random_bounded_edges(rng: Generator, n: int, p: float) -> Tuple[Edges, List[str]]:
    """
    A random order on n elements: each pair i < j of a random numbering becomes an edge with probability p. The
    result is acyclic by construction and is bounded by `build_poset`.

    :return: the edges and the full list of ids, so that elements without edges can be passed as isolated
    """
    ids = ["v{:02d}".format(i) for i in range(n)]
    order = rng.permutation(n)
    draws = np.triu(rng.random((n, n)) < p, k=1)
    edges = [(ids[order[i]], ids[order[j]]) for i, j in combinations(range(n), 2) if draws[i, j]]
    return edges, ids
