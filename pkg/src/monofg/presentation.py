"""Reader and writer for the ``.qp`` presentation format.

Example::

    quiver
    vertices 1 2
    arrow a 1 1
    arrow b 1 2
    relations
    a a
    a b
    end

Relations list arrow ids left to right, one relation per line.  ``#`` starts a
comment that runs to the end of the line.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .algebra import MonomialPresentation
from .errors import ParseError, UnknownCorpusError
from .quiver import Arrow, Quiver

KEYWORDS = frozenset({"quiver", "vertices", "arrow", "relations", "end"})

CORPUS_NAMES = (
    "ex_dkoszul3",
    "ex_62_fs",
    "ex_42_stretched",
    "ex_63_mixed",
    "ex_notfg_quadratic",
)


@dataclass(frozen=True)
class SourceLocation:
    line: int
    column: int

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError("source locations are 1-based")


def _tokens(text: str):
    """Yield (line_no, [(column, token), ...]) for every non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for piece in line.split():
            col = line.index(piece, col)
            toks.append((col + 1, piece))
            col += len(piece)
        if toks:
            yield lineno, toks


def parse_presentation(text: str, name: str | None = None) -> MonomialPresentation:
    vertices: list = []
    arrows: dict = {}
    relations: list = []
    seen_rel: set = set()
    state = "start"
    last_line = 1

    def err(msg, line, col):
        raise ParseError(msg, SourceLocation(line, col))

    def check_id(tok, line, col):
        if tok in KEYWORDS:
            err(f"keyword {tok!r} cannot be used as an identifier", line, col)

    for lineno, toks in _tokens(text):
        last_line = lineno
        col, head = toks[0]
        if state == "start":
            if head != "quiver" or len(toks) != 1:
                err(f"expected 'quiver', found {head!r}", lineno, col)
            state = "header"
        elif state == "header":
            if head == "vertices":
                if len(toks) < 2:
                    err("'vertices' needs at least one id", lineno, col)
                for c, v in toks[1:]:
                    check_id(v, lineno, c)
                    if v in vertices:
                        err(f"duplicate vertex id {v!r}", lineno, c)
                    vertices.append(v)
            elif head == "arrow":
                if len(toks) != 4:
                    err("expected 'arrow <id> <source> <target>'", lineno, col)
                (ca, aid), (cs, src), (ct, tgt) = toks[1:]
                check_id(aid, lineno, ca)
                if aid in arrows:
                    err(f"duplicate arrow id {aid!r}", lineno, ca)
                for c, v in ((cs, src), (ct, tgt)):
                    if v not in vertices:
                        err(f"undeclared vertex {v!r}", lineno, c)
                arrows[aid] = Arrow(aid, src, tgt)
            elif head == "relations":
                if len(toks) != 1:
                    err("unexpected token after 'relations'", lineno, toks[1][0])
                state = "relations"
            else:
                err(f"unknown token {head!r}", lineno, col)
        elif state == "relations":
            if head == "end":
                if len(toks) != 1:
                    err("unexpected token after 'end'", lineno, toks[1][0])
                state = "done"
                continue
            for c, t in toks:
                if t in KEYWORDS:
                    err(f"unknown token {t!r} in relation", lineno, c)
                if t not in arrows:
                    err(f"undeclared arrow {t!r}", lineno, c)
            for (c0, a0), (c1, a1) in zip(toks, toks[1:]):
                if arrows[a0].target != arrows[a1].source:
                    err(
                        f"relation is not composable: {a0} ends at {arrows[a0].target}, "
                        f"{a1} starts at {arrows[a1].source}",
                        lineno,
                        c1,
                    )
            if len(toks) < 2:
                err("relations must have length at least 2", lineno, col)
            word = tuple(t for _, t in toks)
            if word in seen_rel:
                err(f"duplicate relation {' '.join(word)}", lineno, col)
            seen_rel.add(word)
            relations.append(word)
        else:
            err(f"unknown token {head!r} after 'end'", lineno, col)

    if state != "done":
        expected = {"start": "'quiver'", "header": "'relations'", "relations": "'end'"}[state]
        raise ParseError(f"unexpected end of input, expected {expected}", SourceLocation(max(last_line, 1), 1))

    q = Quiver(vertices, list(arrows.values()))
    rho = [q.path(w) for w in relations]
    return MonomialPresentation(q, rho, name=name)


def serialize(p: MonomialPresentation, canonical: bool = False) -> str:
    """Text form of p.  ``canonical=True`` sorts every section."""
    q = p.quiver
    verts = sorted(q.vertices) if canonical else list(q.vertices)
    arrs = sorted(q.arrows, key=lambda a: a.id) if canonical else list(q.arrows)
    lines = ["quiver", "vertices " + " ".join(verts)]
    lines += [f"arrow {a.id} {a.source} {a.target}" for a in arrs]
    lines.append("relations")
    lines += [" ".join(r.arrows) for r in p.rho]
    lines.append("end")
    return "\n".join(lines) + "\n"


def corpus_text(name: str) -> str:
    if name not in CORPUS_NAMES:
        raise UnknownCorpusError(f"unknown corpus entry {name!r}; choose from {', '.join(CORPUS_NAMES)}")
    return resources.files("monofg.corpus").joinpath(f"{name}.qp").read_text(encoding="utf-8")


def load_corpus(name: str) -> MonomialPresentation:
    return parse_presentation(corpus_text(name), name=name)
