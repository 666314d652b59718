"""Executes the ``depbits-fixture`` and ``depbits-labels`` blocks in ``docs/``."""
from __future__ import annotations

import re
from pathlib import Path

import pytest

from depbits.config import RepairOptions
from depbits.encoding.codec import decode, encode
from depbits.encoding.labels import LabelSyntaxError, parse_label
from depbits.tree.models import DepTree

DOCS = Path(__file__).resolve().parent.parent / "docs"
_BLOCK_RE = re.compile(r"^```(depbits-fixture|depbits-labels)\n(.*?)^```", re.MULTILINE | re.DOTALL)


def _blocks(kind: str) -> list[tuple[str, dict[str, str]]]:
    found = []
    for doc in sorted(DOCS.glob("*.md")):
        for k, m in enumerate(_BLOCK_RE.finditer(doc.read_text(encoding="utf-8"))):
            if m.group(1) != kind:
                continue
            fields = dict(
                (key.strip(), value.strip())
                for key, _, value in (line.partition(":") for line in m.group(2).splitlines() if line.strip())
            )
            found.append((f"{doc.name}#{k}", fields))
    return found


FIXTURES = _blocks("depbits-fixture")
LABEL_BLOCKS = _blocks("depbits-labels")


def test_docs_carry_fixtures():
    assert len(FIXTURES) >= 10
    assert LABEL_BLOCKS


@pytest.mark.parametrize("fields", [f for _, f in FIXTURES], ids=[name for name, _ in FIXTURES])
def test_fixture(fields):
    encoding = fields["encoding"]
    labels = [parse_label(b) for b in fields["bits"].split()]

    if "brackets" in fields:
        assert [label.to_brackets() for label in labels] == fields["brackets"].split()
        assert [parse_label(b) for b in fields["brackets"].split()] == labels

    if "heads" in fields:
        gold = DepTree(tuple(int(h) for h in fields["heads"].split()))
        encoded, log = encode(gold, encoding)
        assert encoded == labels
        assert not log
        decoded, log = decode(labels, encoding)
        assert decoded == gold
        assert not log

    if "decoded" in fields:
        options = RepairOptions(enforce_single_root=fields.get("single_root") == "yes")
        decoded, log = decode(labels, encoding, options)
        assert decoded.heads == tuple(int(h) for h in fields["decoded"].split())
        assert sorted(e.kind for e in log) == sorted(fields.get("repairs", "").split())


@pytest.mark.parametrize("fields", [f for _, f in LABEL_BLOCKS], ids=[name for name, _ in LABEL_BLOCKS])
def test_label_syntax(fields):
    for text in fields["valid"].split():
        label = parse_label(text)
        assert parse_label(label.to_brackets()) == label
    for text in fields["invalid"].split():
        with pytest.raises(LabelSyntaxError):
            parse_label(text)
