"""Text, LaTeX and JSON output for vectors and their basis elements.

LaTeX output uses two macros, ``\\rootedtree{<bracket string>}`` and
``\\one``, defined by :data:`LATEX_PREAMBLE`.  ``\\rootedtree`` rewrites the
bracket string into ``forest`` package syntax and draws it with the root at
the bottom.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from .brackets import serialize_forest, serialize_tree
from .forest import Forest, Tree
from .graphalg import IntegerGraph, RootedGraph
from .treealg import ForestPair
from .vecspace import GradedVector, Multiset

__all__ = [
    "LATEX_PREAMBLE",
    "basis_string",
    "elementary_differential",
    "texify",
    "texify_forest",
    "texify_vector",
    "text_vector",
    "to_json",
    "write_latex_document",
]

LATEX_PREAMBLE = r"""\documentclass[border=4pt]{standalone}
\usepackage{amsmath}
\usepackage{amssymb}
\usepackage{forest}
\ExplSyntaxOn
\tl_new:N \l__rootedtree_tl
\cs_new_protected:Npn \__rootedtree_draw:n #1
  {
    \tl_set:Nn \l__rootedtree_tl {#1}
    \regex_replace_all:nnN { \[ } { } \l__rootedtree_tl
    \regex_replace_all:nnN { , } { \] } \l__rootedtree_tl
    \regex_replace_all:nnN { (\d+) } { \[ \1 } \l__rootedtree_tl
    \tl_put_right:Nn \l__rootedtree_tl { ] }
    \exp_args:NV \__rootedtree_forest:n \l__rootedtree_tl
  }
\cs_new_protected:Npn \__rootedtree_forest:n #1
  {
    \vcenter{\hbox{\Forest{for~tree={grow'=north,~font=\scriptsize,
      inner~sep=1pt,~l~sep=3pt,~s~sep=4pt}~#1}}}
  }
\NewDocumentCommand{\rootedtree}{m}{ \__rootedtree_draw:n {#1} }
\ExplSyntaxOff
\newcommand{\one}{\mathbf{1}}
"""


def _coeff_tex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _coeff_text(c: Fraction) -> str:
    return str(c)


def _composite(b) -> bool:
    if isinstance(b, (str, tuple, Multiset)):
        return len(b) > 1
    return isinstance(b, ForestPair)


def texify_forest(pi: Forest | Tree) -> str:
    if isinstance(pi, Tree):
        return rf"\rootedtree{{{serialize_tree(pi)}}}"
    if not pi:
        return r"\one"
    return r" \cdot ".join(texify_forest(t) for t in pi.trees)


def texify(b) -> str:
    """LaTeX for a single basis element."""
    if isinstance(b, (Forest, Tree)):
        return texify_forest(b)
    if isinstance(b, ForestPair):
        return f"{texify_forest(b.left)} \\otimes {texify_forest(b.right)}"
    if isinstance(b, (IntegerGraph, RootedGraph)):
        return rf"\mathrm{{{b.text()}}}".replace(" ", r"\ ")
    if isinstance(b, str):
        return r" \cdot ".join(b)
    if isinstance(b, (tuple, Multiset)):
        return r" \cdot ".join(texify(x) for x in b)
    if isinstance(b, Fraction):
        return _coeff_tex(b)
    return str(b)


def _text(b) -> str:
    if isinstance(b, (Forest, Tree)):
        return basis_string(b) or "1"
    if isinstance(b, ForestPair):
        return basis_string(b)
    if isinstance(b, (str, tuple, Multiset)):
        # sequences of symbols read the same in text and LaTeX
        return texify(b)
    return basis_string(b)


def _join_terms(v: GradedVector, coeff_fmt, basis_fmt, composite, gap=lambda b: "") -> str:
    parts = []
    for b, c in v.items():
        body = basis_fmt(b)
        if composite(b):
            body = f"({body})"
        mag = abs(c)
        lead = "" if mag == 1 else coeff_fmt(mag)
        piece = f"{lead}{gap(b) if lead and body[0] != '(' else ''}{body}"
        if not parts:
            parts.append(f"-{piece}" if c < 0 else piece)
        else:
            parts.append(f"- {piece}" if c < 0 else f"+ {piece}")
    return " ".join(parts) if parts else "0"


def texify_vector(v: GradedVector) -> str:
    """Terms joined by ``+`` in stored order, unit coefficients omitted."""
    return _join_terms(v, _coeff_tex, texify, _composite)


def text_vector(v: GradedVector) -> str:
    """Plain-text counterpart of :func:`texify_vector` using bracket strings."""
    def composite(b):
        if isinstance(b, Forest):
            return len(b) > 1
        return _composite(b)

    # "2 1[1]", never "21[1]": bracket strings start with digits
    def gap(b):
        return " " if isinstance(b, (Forest, Tree, IntegerGraph, RootedGraph)) else ""

    return _join_terms(v, _coeff_text, _text, composite, gap)


def basis_string(b) -> str:
    """Canonical string form of a basis element, as used in JSON output."""
    if isinstance(b, (Forest, Tree)):
        return serialize_forest(b)
    if isinstance(b, ForestPair):
        return f"{serialize_forest(b.left) or '1'} (x) {serialize_forest(b.right) or '1'}"
    if isinstance(b, (IntegerGraph, RootedGraph)):
        return b.text()
    if isinstance(b, tuple):
        return "".join(basis_string(x) for x in b)
    if isinstance(b, Multiset):
        return ",".join(basis_string(x) for x in b)
    return str(b)


def to_json(v: GradedVector) -> str:
    """Vector as JSON, layers ascending and terms in canonical basis order."""
    layers = []
    for n, terms in v.canonical().layers():
        layers.append({
            "grade": n,
            "terms": [{"coeff": str(t.coeff), "basis": basis_string(t.basis)} for t in terms],
        })
    return json.dumps({"layers": layers}, separators=(",", ":"), ensure_ascii=False)


def elementary_differential(t: Tree) -> str:
    """hf for a leaf, hf^(n)(F(t_1), ..., F(t_n)) otherwise."""
    if not t.branches:
        return "hf"
    args = ", ".join(elementary_differential(b) for b in t.branches.trees)
    return f"hf^({len(t.branches)})({args})"


def latex_document(v: GradedVector) -> str:
    return (LATEX_PREAMBLE + "\\begin{document}\n$ " + texify_vector(v)
            + " $\n\\end{document}\n")


def write_latex_document(v: GradedVector, path: str | os.PathLike) -> None:
    """Write a standalone LaTeX file for ``v``; the write is atomic."""
    path = Path(path)
    text = latex_document(v)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", suffix=".tex", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
