"""Parsing of the versioned, line-oriented input document format.

A document looks like::

    format: 1
    kind: covering
    universe: a b c
    block: K1 = a b k=1
    block: K2 = b c k=1

``kind`` is one of ``covering``, ``partition`` or ``indexed_family``.
Block names (``NAME =``) and capacities (``k=N``, default 1) are optional.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import GroundSet, SubsetMask, ValidationError
from .constructions import CapacitatedCovering, IndexedFamily, PartitionWitness

KINDS = ("covering", "partition", "indexed_family")


class ParseError(ValueError):
    """Malformed input document; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class Block:
    name: Optional[str]
    elements: SubsetMask
    k: int


@dataclass(frozen=True)
class InputDocument:
    kind: str
    ground: GroundSet
    blocks: tuple[Block, ...]

    def covering(self) -> CapacitatedCovering:
        if self.kind not in ("covering", "partition"):
            raise ValidationError(
                f"document kind {self.kind!r} does not describe a covering"
            )
        return CapacitatedCovering(
            self.ground,
            tuple(b.elements for b in self.blocks),
            tuple(b.k for b in self.blocks),
        )

    def partition(self) -> PartitionWitness:
        if self.kind != "partition":
            raise ValidationError(
                f"document kind {self.kind!r} does not describe a partition"
            )
        return PartitionWitness(self.covering())

    def family(self) -> IndexedFamily:
        if self.kind != "indexed_family":
            raise ValidationError(
                f"document kind {self.kind!r} does not describe an indexed family"
            )
        return IndexedFamily(self.ground, tuple(b.elements for b in self.blocks))


def parse_document(text: str) -> InputDocument:
    fmt: Optional[str] = None
    kind: Optional[str] = None
    ground: Optional[GroundSet] = None
    raw_blocks: list[tuple[int, Optional[str], list[str], int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key == "format":
            if value != "1":
                raise ParseError(f"unsupported format version {value!r}", lineno)
            fmt = value
        elif key == "kind":
            if value not in KINDS:
                raise ParseError(
                    f"kind must be one of {', '.join(KINDS)}; got {value!r}", lineno
                )
            kind = value
        elif key == "universe":
            if ground is not None:
                raise ParseError("duplicate universe line", lineno)
            labels = value.replace(",", " ").split()
            if not labels:
                raise ParseError("universe must list at least one element", lineno)
            try:
                ground = GroundSet(labels)
            except ValidationError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "block" or key == "member":
            name = None
            body = value
            if "=" in body.split("k=", 1)[0]:
                name, _, body = body.partition("=")
                name = name.strip()
            tokens = body.replace(",", " ").split()
            k = 1
            elems = []
            for tok in tokens:
                if tok.startswith("k="):
                    try:
                        k = int(tok[2:])
                    except ValueError:
                        raise ParseError(f"bad capacity {tok!r}", lineno) from None
                    if k < 0:
                        raise ParseError("capacity must be nonnegative", lineno)
                else:
                    elems.append(tok)
            raw_blocks.append((lineno, name, elems, k))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)

    if fmt is None:
        raise ParseError("missing 'format: 1' header")
    if kind is None:
        raise ParseError("missing 'kind' line")
    if ground is None:
        raise ParseError("missing 'universe' line")
    if not raw_blocks:
        raise ParseError("document lists no blocks")

    blocks = []
    for lineno, name, elems, k in raw_blocks:
        try:
            mask = ground.subset(elems)
        except ValidationError as exc:
            raise ParseError(str(exc), lineno) from None
        blocks.append(Block(name, mask, k))

    doc = InputDocument(kind, ground, tuple(blocks))
    # surface covering/partition structural problems as parse-stage errors
    if kind == "covering":
        doc.covering()
    elif kind == "partition":
        doc.partition()
    return doc


def parse_file(path: str) -> InputDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def render_covering_document(c: CapacitatedCovering) -> str:
    lines = ["format: 1", "kind: covering",
             "universe: " + " ".join(c.ground.labels)]
    for b, k in zip(c.blocks, c.capacities):
        lines.append("block: " + " ".join(b.labels()) + f" k={k}")
    return "\n".join(lines) + "\n"


def render_family_document(f: IndexedFamily) -> str:
    lines = ["format: 1", "kind: indexed_family",
             "universe: " + " ".join(f.ground.labels)]
    for m in f.members:
        lines.append("block: " + " ".join(m.labels()))
    return "\n".join(lines) + "\n"
