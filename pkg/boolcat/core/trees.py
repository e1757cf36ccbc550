"""
0-1-trees: plane binary trees whose two-child vertices carry a label 0 or 1

Trees are immutable node objects. Codes use the prefix grammar
T ::= "o" | "l" T | "r" T | ("0"|"1") T T.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple, Union

from boolcat.core.errors import TreeCodeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Leaf:
    pass


@dataclass(frozen=True)
class LeftOnly:
    child: "ZeroOneTree"


@dataclass(frozen=True)
class RightOnly:
    child: "ZeroOneTree"


@dataclass(frozen=True)
class Both:
    label: int
    left: "ZeroOneTree"
    right: "ZeroOneTree"

    def __post_init__(self):
        if self.label not in (0, 1):
            raise ValueError(f"two-child vertices are labeled 0 or 1, got {self.label!r}")


ZeroOneTree = Union[Leaf, LeftOnly, RightOnly, Both]

LEAF = Leaf()


def tree_size(t: ZeroOneTree) -> int:
    """Number of vertices"""
    if isinstance(t, Leaf):
        return 1
    if isinstance(t, (LeftOnly, RightOnly)):
        return 1 + tree_size(t.child)
    return 1 + tree_size(t.left) + tree_size(t.right)


def is_well_labeled(t: ZeroOneTree) -> bool:
    """Labels sit exactly on the two-child vertices and are 0 or 1"""
    if isinstance(t, Leaf):
        return True
    if isinstance(t, (LeftOnly, RightOnly)):
        return is_well_labeled(t.child)
    if isinstance(t, Both):
        return t.label in (0, 1) and is_well_labeled(t.left) and is_well_labeled(t.right)
    return False


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def generate_trees(n: int) -> Iterator[ZeroOneTree]:
    """
    Every 0-1-tree on n vertices, once each, in a fixed order

    Order: the leaf (n = 1); left-only roots; right-only roots; roots
    labeled 0 over left-subtree sizes ascending; roots labeled 1 likewise.
    Subtrees come from memoized tables of smaller sizes, so the trees of
    size n themselves are never held in memory at once.
    """
    if n <= 0:
        return
    if n == 1:
        yield LEAF
        return

    smaller = _tree_table(n - 1)
    for child in smaller:
        yield LeftOnly(child)
    for child in smaller:
        yield RightOnly(child)
    for label in (0, 1):
        for left_size in range(1, n - 1):
            right_trees = _tree_table(n - 1 - left_size)
            for left in _tree_table(left_size):
                for right in right_trees:
                    yield Both(label, left, right)


@lru_cache(maxsize=None)
def _tree_table(n: int) -> Tuple[ZeroOneTree, ...]:
    logger.debug(f"Materializing 0-1-trees of size {n}")
    return tuple(generate_trees(n))


def count_trees(n: int) -> int:
    """Count the 0-1-trees on n vertices by exhaustive generation"""
    return sum(1 for _ in generate_trees(n))


# ---------------------------------------------------------------------------
# Codec
# ---------------------------------------------------------------------------

def encode(t: ZeroOneTree) -> str:
    parts: List[str] = []
    stack: List[ZeroOneTree] = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            parts.append("o")
        elif isinstance(node, LeftOnly):
            parts.append("l")
            stack.append(node.child)
        elif isinstance(node, RightOnly):
            parts.append("r")
            stack.append(node.child)
        else:
            parts.append(str(node.label))
            stack.append(node.right)
            stack.append(node.left)
    return "".join(parts)


def decode(code: str) -> ZeroOneTree:
    """Parse a tree code; rejects malformed input with the failing position"""
    tree, end = _parse(code, 0)
    if end != len(code):
        raise TreeCodeError("trailing characters after a complete tree", end)
    return tree


def _parse(code: str, pos: int) -> Tuple[ZeroOneTree, int]:
    if pos >= len(code):
        raise TreeCodeError("unexpected end of code", pos)
    symbol = code[pos]
    if symbol == "o":
        return LEAF, pos + 1
    if symbol == "l":
        child, end = _parse(code, pos + 1)
        return LeftOnly(child), end
    if symbol == "r":
        child, end = _parse(code, pos + 1)
        return RightOnly(child), end
    if symbol in "01":
        left, mid = _parse(code, pos + 1)
        right, end = _parse(code, mid)
        return Both(int(symbol), left, right), end
    raise TreeCodeError(f"unexpected symbol {symbol!r}", pos)


def erase_labels(t: ZeroOneTree) -> str:
    """Code of the underlying plane binary tree (labels replaced by 'b')"""
    return "".join("b" if ch in "01" else ch for ch in encode(t))


def plane_shapes(n: int) -> int:
    """Number of distinct plane binary trees underlying the 0-1-trees of size n"""
    return len({erase_labels(t) for t in generate_trees(n)})
