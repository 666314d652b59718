from __future__ import annotations

from typing import Iterable

from depbits.config import LabelSyntax
from depbits.encoding.labels import Label, LabelSyntaxError, parse_label
from depbits.treebank.models import LabelFileError, LabeledSentence

_EMPTY = "_"


def write_labels(sentences: Iterable[LabeledSentence], syntax: LabelSyntax = "bits") -> str:
    """One ``INDEX FORM LABEL DEPREL`` line per word, blank line after each sentence."""
    out: list[str] = []
    for sent in sentences:
        for i, (form, label, deprel) in enumerate(zip(sent.forms, sent.labels, sent.deprels), start=1):
            text = label.to_bits() if syntax == "bits" else label.to_brackets()
            out.append(f"{i}\t{form or _EMPTY}\t{text}\t{deprel or _EMPTY}\n")
        out.append("\n")
    return "".join(out)


def _finish(rows: list[tuple[str, Label, str]], line_no: int) -> LabeledSentence:
    widths = {label.WIDTH for _, label, _ in rows}
    if len(widths) > 1:
        raise LabelFileError(line_no, "sentence mixes 4-bit and 7-bit labels")
    forms, labels, deprels = zip(*rows)
    return LabeledSentence(forms=tuple(forms), labels=tuple(labels), deprels=tuple(deprels))


def read_labels(text: str | Iterable[str]) -> list[LabeledSentence]:
    """Parse a label file; each label's syntax (bits or brackets) is detected on its own.

    Raises :class:`LabelFileError` on ragged lines, out-of-sequence
    indices or unknown label syntax.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    sentences: list[LabeledSentence] = []
    rows: list[tuple[str, Label, str]] = []
    line_no = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            if rows:
                sentences.append(_finish(rows, line_no))
                rows = []
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise LabelFileError(line_no, f"expected 4 tab-separated columns, got {len(cols)}")
        index, form, label_text, deprel = cols
        if index != str(len(rows) + 1):
            raise LabelFileError(line_no, f"index {index!r} out of sequence, expected {len(rows) + 1}")
        try:
            label = parse_label(label_text)
        except LabelSyntaxError as exc:
            raise LabelFileError(line_no, str(exc)) from exc
        rows.append(("" if form == _EMPTY else form, label, "" if deprel == _EMPTY else deprel))
    if rows:
        sentences.append(_finish(rows, line_no))
    return sentences
