from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

Command = Literal["encode", "decode", "roundtrip", "stats"]
Encoding = Literal["4bit", "7bit"]
LabelSyntax = Literal["bits", "brackets"]
ReportFormat = Literal["text", "tsv", "json"]
OutermostScope = Literal["plane", "side"]

ENCODINGS: tuple[Encoding, ...] = ("4bit", "7bit")


@dataclass(frozen=True)
class RepairOptions:
    enforce_single_root: bool = False


@dataclass(frozen=True)
class Config:
    command: Command = "encode"

    # Codec
    encodings: tuple[Encoding, ...] = ("4bit",)
    outermost: OutermostScope = "plane"

    # Label files
    syntax: LabelSyntax = "bits"

    # Repair
    repair: RepairOptions = field(default_factory=lambda: RepairOptions(enforce_single_root=True))

    # I/O; empty inputs / None output mean the standard streams
    inputs: tuple[str, ...] = ()
    output: str | None = None

    # Stats
    report_format: ReportFormat = "text"
    profile: bool = False

    @property
    def encoding(self) -> Encoding:
        """The single encoding used by encode/decode/roundtrip."""
        return self.encodings[0]
