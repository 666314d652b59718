from __future__ import annotations

import logging
import sys
from collections import Counter
from pathlib import Path

from depbits.config import Config
from depbits.encoding.codec import decode, encode
from depbits.encoding.labels import LabelSyntaxError
from depbits.repair.models import REPAIR_KINDS
from depbits.stats.coverage import measure
from depbits.stats.profile import profile
from depbits.stats.report import format_coverage, report, report_profiles
from depbits.tree.models import InvalidForestError
from depbits.treebank.conllu import parse_conllu, write_conllu
from depbits.treebank.labels_tsv import read_labels, write_labels
from depbits.treebank.models import (
    ConlluFormatError,
    LabeledSentence,
    LabelFileError,
    Sentence,
    Treebank,
)

log = logging.getLogger("depbits")

STDIN = "-"


def _read_inputs(cfg: Config) -> list[tuple[str, str]]:
    """(name, text) per input; no inputs or ``-`` means stdin."""
    out: list[tuple[str, str]] = []
    for path in cfg.inputs or (STDIN,):
        if path == STDIN:
            out.append(("stdin", sys.stdin.read()))
        else:
            p = Path(path)
            out.append((p.stem, p.read_text(encoding="utf-8")))
    return out


def _write_output(cfg: Config, text: str) -> None:
    if cfg.output is None or cfg.output == STDIN:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out = Path(cfg.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    log.info("Wrote %s", out)


def _treebanks(cfg: Config) -> list[Treebank]:
    return [parse_conllu(text, name=name) for name, text in _read_inputs(cfg)]


def _log_repair_summary(counts: Counter[str], sentences: int, repaired: int, words: int, changed: int) -> None:
    kinds = ", ".join(f"{k}={counts[k]}" for k in REPAIR_KINDS if counts[k])
    log.info(
        "Repaired %d/%d sentences, %d/%d words%s",
        repaired, sentences, changed, words, f" ({kinds})" if kinds else "",
    )


# ── Commands ────────────────────────────────────────────────────────


def run_encode(cfg: Config) -> int:
    """CoNLL-U in, label file out."""
    labeled: list[LabeledSentence] = []
    dropped = 0
    for tb in _treebanks(cfg):
        for sent in tb:
            try:
                labels, enc_log = encode(sent.tree, cfg.encoding, cfg.outermost)
            except InvalidForestError as exc:
                log.warning("Skipping sentence %s: %s", sent.sent_id or "?", exc)
                continue
            for event in enc_log:
                log.debug("Sentence %s: %s word %d %s", sent.sent_id or "?", event.kind, event.word, event.detail)
            dropped += len(enc_log)
            labeled.append(LabeledSentence(sent.tree.forms, tuple(labels), sent.tree.deprels))
    _write_output(cfg, write_labels(labeled, cfg.syntax))
    log.info("Encoded %d sentences with %s labels", len(labeled), cfg.encoding)
    if dropped:
        log.warning("%d arcs left off both planes and not encoded", dropped)
    return 0


def run_decode(cfg: Config) -> int:
    """Label file in, repaired CoNLL-U out."""
    decoded: list[Sentence] = []
    counts: Counter[str] = Counter()
    words = repaired = changed = 0
    for name, text in _read_inputs(cfg):
        for k, sent in enumerate(read_labels(text), start=1):
            tree, rlog = decode(
                sent.labels, cfg.encoding, cfg.repair,
                outermost=cfg.outermost, deprels=sent.deprels, forms=sent.forms,
            )
            for event in rlog:
                log.info("%s sentence %d: %s word %d %s", name, k, event.kind, event.word, event.detail)
            counts.update(rlog.counts())
            words += tree.n
            repaired += bool(rlog)
            changed += len(rlog.words_changed())
            decoded.append(Sentence(tree))
    _write_output(cfg, write_conllu(decoded))
    _log_repair_summary(counts, len(decoded), repaired, words, changed)
    return 0


def run_roundtrip(cfg: Config) -> int:
    """CoNLL-U through encode and decode back to CoNLL-U; coverage goes to the log."""
    out: list[Sentence] = []
    for tb in _treebanks(cfg):
        for sent in tb:
            try:
                labels, _ = encode(sent.tree, cfg.encoding, cfg.outermost)
            except InvalidForestError as exc:
                log.warning("Skipping sentence %s: %s", sent.sent_id or "?", exc)
                continue
            tree, _ = decode(
                labels, cfg.encoding, cfg.repair,
                outermost=cfg.outermost, deprels=sent.tree.deprels, forms=sent.tree.forms,
            )
            out.append(Sentence(tree, sent.comments, sent.sent_id))
        cov = measure(tb, cfg.encoding, cfg.outermost)
        log.info(
            "%s %s: arc coverage %s%%, tree coverage %s%%",
            tb.name, cfg.encoding, format_coverage(cov.arc_coverage), format_coverage(cov.tree_coverage),
        )
    _write_output(cfg, write_conllu(out))
    return 0


def run_stats(cfg: Config) -> int:
    """Coverage table (or structural profile) for each input treebank."""
    treebanks = _treebanks(cfg)
    if cfg.profile:
        _write_output(cfg, report_profiles([profile(tb) for tb in treebanks], cfg.report_format))
        return 0
    rows = [measure(tb, enc, cfg.outermost) for tb in treebanks for enc in cfg.encodings]
    _write_output(cfg, report(rows, cfg.report_format))
    return 0


_COMMANDS = {
    "encode": run_encode,
    "decode": run_decode,
    "roundtrip": run_roundtrip,
    "stats": run_stats,
}


def run(cfg: Config) -> int:
    """Run one command; returns the process exit status."""
    try:
        return _COMMANDS[cfg.command](cfg)
    except OSError as exc:
        log.error("I/O error: %s", exc)
        return 1
    except (ConlluFormatError, LabelFileError, LabelSyntaxError, UnicodeDecodeError) as exc:
        log.error("Format error: %s", exc)
        return 1
