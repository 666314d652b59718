from __future__ import annotations

from typing import Sequence

from depbits.config import Encoding, OutermostScope, RepairOptions
from depbits.encoding.bits4 import decode4, decode4_raw, encode4
from depbits.encoding.bits7 import decode7, decode7_raw, encode7_with_log
from depbits.encoding.labels import Label, Label4, Label7, LabelSyntaxError
from depbits.encoding.passes import RawDecode
from depbits.repair.models import RepairLog
from depbits.tree.models import DepTree

_LABEL_TYPES: dict[Encoding, type] = {"4bit": Label4, "7bit": Label7}


def encode(
    tree: DepTree, encoding: Encoding, outermost: OutermostScope = "plane"
) -> tuple[list[Label], RepairLog]:
    """Encode with either codec; the log holds 7-bit dropped arcs."""
    if encoding == "4bit":
        return list(encode4(tree)), RepairLog()
    labels, log = encode7_with_log(tree, outermost)
    return list(labels), log


def check_labels(labels: Sequence[Label], encoding: Encoding) -> None:
    expected = _LABEL_TYPES[encoding]
    for i, label in enumerate(labels, start=1):
        if not isinstance(label, expected):
            raise LabelSyntaxError(
                f"word {i}: {label.WIDTH}-bit label {label} in a {encoding} sequence"
            )


def decode_raw(
    labels: Sequence[Label], encoding: Encoding, outermost: OutermostScope = "plane"
) -> RawDecode:
    check_labels(labels, encoding)
    if encoding == "4bit":
        return decode4_raw(labels)  # type: ignore[arg-type]
    return decode7_raw(labels, outermost)  # type: ignore[arg-type]


def decode(
    labels: Sequence[Label],
    encoding: Encoding,
    options: RepairOptions | None = None,
    *,
    outermost: OutermostScope = "plane",
    deprels: Sequence[str] = (),
    forms: Sequence[str] = (),
) -> tuple[DepTree, RepairLog]:
    check_labels(labels, encoding)
    if encoding == "4bit":
        return decode4(labels, options, deprels=deprels, forms=forms)  # type: ignore[arg-type]
    return decode7(labels, options, outermost=outermost, deprels=deprels, forms=forms)  # type: ignore[arg-type]

