from __future__ import annotations

import logging
import re
from typing import Iterable, Iterator

from pyconll.exception import ParseError
from pyconll.unit.sentence import Sentence as ConllSentence

from depbits.tree.models import DepTree, InvalidForestError
from depbits.treebank.models import ConlluFormatError, Sentence, SkippedSentence, Treebank

log = logging.getLogger("depbits")

_WORD_ID_RE = re.compile(r"^[1-9][0-9]*$")
_HEAD_RE = re.compile(r"[0-9]+")
_SENT_ID_RE = re.compile(r"^#\s*sent_id\s*=\s*(.*?)\s*$")
_EMPTY = "_"


def _blocks(lines: Iterable[str]) -> Iterator[tuple[int, list[str]]]:
    """Yield (first line number, lines) per blank-line separated block."""
    block: list[str] = []
    start = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            if block:
                yield start, block
                block = []
            continue
        if not block:
            start = line_no
        block.append(line)
    if block:
        yield start, block


def _parse_block(start: int, block: list[str]) -> Sentence:
    comments = tuple(line for line in block if line.startswith("#"))
    token_lines = [line for line in block if not line.startswith("#")]
    if not token_lines:
        raise ConlluFormatError(start, "sentence without token lines")
    for offset, line in enumerate(block):
        if not line.startswith("#") and line.count("\t") != 9:
            raise ConlluFormatError(
                start + offset, f"expected 10 tab-separated columns, got {line.count(chr(9)) + 1}"
            )
    try:
        parsed = ConllSentence("\n".join(token_lines))
    except ParseError as exc:
        raise ConlluFormatError(start, str(exc)) from exc

    words = [t for t in parsed if not t.is_multiword() and not t.is_empty_node()]
    if not words:
        raise ConlluFormatError(start, "sentence without word lines")

    heads: list[int] = []
    forms: list[str] = []
    deprels: list[str] = []
    for k, token in enumerate(words, start=1):
        line_no = start + _line_offset(block, token.id)
        if not _WORD_ID_RE.match(token.id) or int(token.id) != k:
            raise ConlluFormatError(line_no, f"word id {token.id!r} out of sequence, expected {k}")
        if token.head is None or not _HEAD_RE.fullmatch(token.head):
            raise ConlluFormatError(line_no, f"non-integer head {token.head!r}")
        head = int(token.head)
        if head > len(words):
            raise ConlluFormatError(line_no, f"head {head} out of range 0..{len(words)}")
        heads.append(head)
        forms.append(token.form if token.form is not None else _EMPTY)
        deprels.append(token.deprel or "")

    try:
        tree = DepTree.from_heads(heads, deprels=deprels, forms=forms)
    except InvalidForestError as exc:
        raise ConlluFormatError(start, str(exc)) from exc
    sent_id = next((m.group(1) for c in comments if (m := _SENT_ID_RE.match(c))), None)
    return Sentence(tree=tree, comments=comments, sent_id=sent_id)


def _line_offset(block: list[str], token_id: str) -> int:
    prefix = token_id + "\t"
    for offset, line in enumerate(block):
        if line.startswith(prefix):
            return offset
    return 0


def parse_conllu(text: str | Iterable[str], *, strict: bool = False, name: str = "") -> Treebank:
    """Read a CoNLL-U treebank.

    Multiword-token (``a-b``) and empty-node (``a.b``) lines are skipped.
    A malformed sentence is skipped and recorded on ``Treebank.skipped``;
    with *strict* it raises :class:`ConlluFormatError` instead.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    sentences: list[Sentence] = []
    skipped: list[SkippedSentence] = []
    for start, block in _blocks(lines):
        try:
            sentences.append(_parse_block(start, block))
        except ConlluFormatError as exc:
            if strict:
                raise
            log.warning("Skipping sentence at line %d: %s", start, exc)
            skipped.append(SkippedSentence(exc.line_no, exc.message))
    return Treebank(sentences=tuple(sentences), skipped=tuple(skipped), name=name)


def _field(value: str) -> str:
    return value if value else _EMPTY


def format_sentence(sentence: Sentence | DepTree) -> str:
    if isinstance(sentence, DepTree):
        sentence = Sentence(sentence)
    tree = sentence.tree
    out = [c + "\n" for c in sentence.comments]
    for i in range(1, tree.n + 1):
        cols = [
            str(i),
            _field(tree.forms[i - 1]),
            _EMPTY, _EMPTY, _EMPTY, _EMPTY,
            str(tree.head_of(i)),
            _field(tree.deprels[i - 1]),
            _EMPTY, _EMPTY,
        ]
        out.append("\t".join(cols) + "\n")
    out.append("\n")
    return "".join(out)


def write_conllu(tb: Treebank | Iterable[Sentence | DepTree]) -> str:
    """Serialise to CoNLL-U; columns the model does not carry are ``_``."""
    sentences = tb.sentences if isinstance(tb, Treebank) else tb
    return "".join(format_sentence(s) for s in sentences)
