import logging
import re

from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from hyperci.errors import ParseError
from hyperci.hypergraph import Hypergraph, build

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[,\s]+")


class ParseWarning(BaseModel):
    line: int = Field(..., ge=1)
    message: str


class HyperedgeListDocument(BaseModel):
    """
    Hyperedges as read from a hyperedge-list file. A document's identity is its
    hyperedge sequence; provenance (source, lines, warnings) is not compared.
    """

    hyperedges: List[Tuple[str, ...]] = Field(default_factory=list)
    lines: List[int] = Field(default_factory=list, description="Input line per hyperedge")
    source: Optional[str] = Field(None, description="Path the document was read from")
    warnings: List[ParseWarning] = Field(default_factory=list)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HyperedgeListDocument):
            return NotImplemented
        return self.hyperedges == other.hyperedges

    def __len__(self) -> int:
        return len(self.hyperedges)

    def to_hypergraph(self) -> Hypergraph:
        return build(self.hyperedges, lines=self.lines or None)


def parse_hyperedge_list(text: str, source: Optional[str] = None) -> HyperedgeListDocument:
    """
    One hyperedge per line, labels separated by commas and/or whitespace.
    ``#`` starts a comment; blank and comment-only lines are skipped.
    """
    document = HyperedgeListDocument(source=source)

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue

        labels = [label for label in _SEPARATORS.split(content) if label]
        if not labels:
            raise ParseError("line has separators but no labels", line=number, path=source)

        unique = tuple(dict.fromkeys(labels))
        if len(unique) != len(labels):
            repeated = sorted({label for label in labels if labels.count(label) > 1})
            message = f"duplicate labels collapsed: {', '.join(repeated)}"
            document.warnings.append(ParseWarning(line=number, message=message))
            logger.warning("%s:%d: %s", source or "<text>", number, message)

        document.hyperedges.append(unique)
        document.lines.append(number)

    return document


def write_hyperedge_list(document: HyperedgeListDocument) -> str:
    return "".join(" ".join(edge) + "\n" for edge in document.hyperedges)


def read_hyperedge_list(path: Union[str, Path]) -> HyperedgeListDocument:
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise ParseError(
            f"invalid UTF-8 (byte 0x{data[e.start]:02x})", line=line, path=str(path)
        ) from e
    return parse_hyperedge_list(text, source=str(path))


def load_hypergraph(path: Union[str, Path]) -> Hypergraph:
    return read_hyperedge_list(path).to_hypergraph()
