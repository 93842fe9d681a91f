# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/4 15:40
# @Last Modified by: wqshen
"""Bracketings of V^(x)n as binary trees

A tree is a leaf (int, 1-based position) or a pair (left, right) of trees.
An elementary move is recorded by the leaf spans of its three segments,
0-based half-open ranges of tensor positions.
"""

from functools import lru_cache
from typing import Iterator, List, Tuple, Union

Tree = Union[int, tuple]
Span = Tuple[int, int]
Move = Tuple[Span, Span, Span]


def leaves(tree: Tree) -> List[int]:
    if isinstance(tree, int):
        return [tree]
    return leaves(tree[0]) + leaves(tree[1])


def span(tree: Tree) -> Span:
    lv = leaves(tree)
    return lv[0] - 1, lv[-1]


def _fold_left(items: list) -> Tree:
    tree = items[0]
    for item in items[1:]:
        tree = (tree, item)
    return tree


def left_comb(n: int) -> Tree:
    """((1, 2), 3), ... the canonical bracketing"""
    if n < 1:
        raise ValueError(f"need at least one leaf, got {n}")
    return _fold_left(list(range(1, n + 1)))


def right_comb(n: int) -> Tree:
    if n < 1:
        raise ValueError(f"need at least one leaf, got {n}")
    tree = n
    for k in range(n - 1, 0, -1):
        tree = (k, tree)
    return tree


def sibling_tree(n: int, i: int) -> Tree:
    """left comb in which leaves i and i+1 form one subtree"""
    if not 1 <= i < n:
        raise IndexError(f"strand index {i} out of range for n={n}")
    items = list(range(1, i)) + [(i, i + 1)] + list(range(i + 2, n + 1))
    return _fold_left(items)


@lru_cache(maxsize=1024)
def right_moves(tree: Tree) -> Tuple[Move, ...]:
    """rotations ((A, B), C) -> (A, (B, C)) taking tree to the right comb"""
    moves = []

    def walk(t):
        if isinstance(t, int):
            return t
        left, right = t
        while not isinstance(left, int):
            a, b = left
            moves.append((span(a), span(b), span(right)))
            left, right = a, (b, right)
        return left, walk(right)

    walk(tree)
    return tuple(moves)


@lru_cache(maxsize=1024)
def left_moves(tree: Tree) -> Tuple[Move, ...]:
    """rotations (A, (B, C)) -> ((A, B), C) taking tree to the left comb"""
    moves = []

    def walk(t):
        if isinstance(t, int):
            return t
        left, right = t
        while not isinstance(right, int):
            b, c = right
            moves.append((span(left), span(b), span(c)))
            left, right = (left, b), c
        return walk(left), right

    walk(tree)
    return tuple(moves)


def check_same_leaves(a: Tree, b: Tree):
    if leaves(a) != leaves(b):
        raise ValueError(f"trees have different leaves: {leaves(a)} and {leaves(b)}")


def all_trees(lo: int, hi: int) -> Iterator[Tree]:
    """every bracketing of the leaves lo..hi"""
    if lo == hi:
        yield lo
        return
    for mid in range(lo, hi):
        for left in all_trees(lo, mid):
            for right in all_trees(mid + 1, hi):
                yield left, right
