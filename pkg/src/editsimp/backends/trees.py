"""Penn-style bracketed trees and their projection onto token sequences."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..core import is_punct
from ..errors import BackendError
from .base import Constituent

_PTB_ESCAPES = {"-LRB-": "(", "-RRB-": ")", "-LSB-": "[", "-RSB-": "]",
                "-LCB-": "{", "-RCB-": "}", "``": '"', "''": '"'}
_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


@dataclass
class Node:
    label: str
    children: list = field(default_factory=list)  # Node or leaf index (int)


def read_bracketed(text: str) -> tuple[Node, list[str]]:
    """Parse ``(S (NP the dog) (VP barked))`` into a node tree and its leaves.

    Leaves are replaced by their integer position in the returned list.
    """
    toks = _TOKEN_RE.findall(text or "")
    if not toks or toks[0] != "(":
        raise BackendError(f"malformed tree: {text!r}")
    leaves: list[str] = []
    pos = 0

    def parse_node() -> Node:
        nonlocal pos
        pos += 1  # "("
        if pos < len(toks) and toks[pos] not in "()":
            label = toks[pos]
            pos += 1
        else:
            label = ""
        node = Node(label)
        while True:
            if pos >= len(toks):
                raise BackendError(f"malformed tree (unbalanced brackets): {text!r}")
            tok = toks[pos]
            if tok == ")":
                pos += 1
                break
            if tok == "(":
                node.children.append(parse_node())
            else:
                leaves.append(_PTB_ESCAPES.get(tok, tok))
                node.children.append(len(leaves) - 1)
                pos += 1
        if not node.children:
            raise BackendError(f"malformed tree (empty constituent): {text!r}")
        return node

    root = parse_node()
    if pos != len(toks):
        raise BackendError(f"malformed tree (trailing material): {text!r}")
    # "( (S ...))" wrappers carry an empty label
    while not root.label and len(root.children) == 1 and isinstance(root.children[0], Node):
        root = root.children[0]
    return root, leaves


def _align(words: Sequence[str], leaves: Sequence[str]):
    """Align sentence words to tree leaves as a subsequence.

    Words that are punctuation may stay unmatched (absorbed). Among valid
    alignments pick the one with the fewest skipped-leaf runs, then the
    fewest absorbed words, then the leftmost. Returns ``{word_index:
    leaf_index}`` or ``None``.
    """
    m, n = len(words), len(leaves)
    INF = (10 ** 9, 10 ** 9)
    # cost[i][j][g]: best (gaps, absorbed) having consumed i words, j leaves;
    # g = 1 when the last leaf was skipped
    cost = [[[INF, INF] for _ in range(n + 1)] for _ in range(m + 1)]
    back = [[[None, None] for _ in range(n + 1)] for _ in range(m + 1)]
    cost[0][0][0] = (0, 0)

    def relax(i, j, g, value, prev):
        if value < cost[i][j][g]:
            cost[i][j][g] = value
            back[i][j][g] = prev

    for i in range(m + 1):
        for j in range(n + 1):
            for g in (0, 1):
                c = cost[i][j][g]
                if c == INF:
                    continue
                if i < m and j < n and words[i] == leaves[j]:
                    relax(i + 1, j + 1, 0, c, (i, j, g, "match"))
                if j < n:
                    relax(i, j + 1, 1, (c[0] + (0 if g else 1), c[1]), (i, j, g, "skip"))
                if i < m and is_punct(words[i]):
                    relax(i + 1, j, g, (c[0], c[1] + 1), (i, j, g, "absorb"))
    g = 0 if cost[m][n][0] <= cost[m][n][1] else 1
    if cost[m][n][g] == INF:
        return None
    mapping = {}
    i, j = m, n
    while (i, j) != (0, 0) or g:
        prev = back[i][j][g]
        if prev is None:
            break
        pi, pj, pg, op = prev
        if op == "match":
            mapping[pi] = pj
        i, j, g = pi, pj, pg
    return mapping


def project(root: Node, leaves: Sequence[str], words: Sequence[str],
            canon: Callable[[str], str] = str.lower) -> list[Constituent] | None:
    """Constituents of ``words`` obtained by pruning the tree to the aligned leaves.

    An unmatched punctuation word extends every constituent ending right
    before it. Returns ``None`` when ``words`` cannot be aligned.
    """
    mapping = _align([canon(w) for w in words], [canon(leaf) for leaf in leaves])
    if mapping is None or not mapping:
        return None
    leaf_to_word = {leaf: w for w, leaf in mapping.items()}
    m = len(words)
    # extend[w] = end position after absorbing unmatched punctuation following w
    extend = list(range(1, m + 1))
    for w in range(m - 1, -1, -1):
        if w + 1 < m and (w + 1) not in mapping:
            extend[w] = extend[w + 1]
    spans: set[Constituent] = set()

    def walk(node: Node, depth: int):
        positions = []
        for child in node.children:
            if isinstance(child, Node):
                positions.extend(walk(child, depth + 1))
            elif child in leaf_to_word:
                positions.append(leaf_to_word[child])
        if positions:
            start, last = min(positions), max(positions)
            spans.add(Constituent(depth, start, extend[last], node.label))
        return positions

    walk(root, 0)
    spans = {c for c in spans if c.depth > 0}
    spans.add(Constituent(0, 0, m, root.label or "ROOT"))
    return sorted(spans)
