"""Bracket notation for decorated forests.

Grammar (whitespace is spaces and tabs)::

    forest     := ws (tree (ws "," ws tree)*)? ws
    tree       := decoration (ws "[" forest "]")?
    decoration := digit+

``"1[2,3],4[5[6]],7"`` is a forest of three trees.  The empty string is the
empty forest.  Serialization is canonical: trees and branches in canonical
order, no whitespace, leaves written without brackets.
"""

from __future__ import annotations

from .forest import Forest, Tree

__all__ = ["ParseError", "parse_forest", "parse_tree", "serialize_forest", "serialize_tree"]


class ParseError(ValueError):
    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {position}: expected {expected}, found {found}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def found(self) -> str:
        c = self.peek()
        return repr(c) if c else "end of input"

    def skip_ws(self):
        while self.peek() in (" ", "\t") and self.peek():
            self.pos += 1

    def fail(self, expected: str):
        raise ParseError(self.pos, expected, self.found())

    def forest(self, closing: str) -> list[Tree]:
        trees = []
        self.skip_ws()
        if self.peek() == closing:
            return trees
        while True:
            trees.append(self.tree())
            self.skip_ws()
            if self.peek() != ",":
                break
            self.pos += 1
            self.skip_ws()
        return trees

    def tree(self) -> Tree:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        if self.pos == start:
            self.fail("decoration")
        root = int(self.text[start:self.pos])
        save = self.pos
        self.skip_ws()
        if self.peek() != "[":
            self.pos = save
            return Tree(root)
        self.pos += 1
        branches = self.forest("]")
        if self.peek() != "]":
            self.fail("',' or ']'")
        self.pos += 1
        return Tree(root, branches)


def parse_forest(s: str) -> Forest:
    p = _Parser(s)
    trees = p.forest("")
    if p.pos != len(s):
        p.fail("',' or end of input")
    return Forest(trees)


def parse_tree(s: str) -> Tree:
    f = parse_forest(s)
    if len(f) != 1:
        raise ParseError(0, "a single tree", f"{len(f)} trees")
    return f.trees[0]


def serialize_tree(t: Tree) -> str:
    if not t.branches:
        return str(t.root)
    return f"{t.root}[{serialize_forest(t.branches)}]"


def serialize_forest(pi: Forest | Tree) -> str:
    if isinstance(pi, Tree):
        return serialize_tree(pi)
    return ",".join(serialize_tree(t) for t in pi.trees)
