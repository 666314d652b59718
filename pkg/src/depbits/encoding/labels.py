from __future__ import annotations

import re
from dataclasses import astuple, dataclass
from typing import Union


class LabelSyntaxError(ValueError):
    """A label string is neither a valid bit string nor valid bracket syntax."""


_BITS4_RE = re.compile(r"^[01]{4}$")
_BITS7_RE = re.compile(r"^[01]{7}$")
_BRACKETS4_RE = re.compile(r"^(\\)?([<>])(\*)?(/)?$")
_BRACKETS7_RE = re.compile(r"^(\\0)?([<>])([01])(\*)?(/0)?(\\1)?(/1)?$")


def _bits_to_str(bits: tuple[bool, ...]) -> str:
    return "".join("1" if b else "0" for b in bits)


@dataclass(frozen=True)
class Label4:
    """4-bit label ``b0b1b2b3``.

    * ``b0`` right dependent (``>``) or left dependent (``<``)
    * ``b1`` outermost dependent on its side of the parent (``*``)
    * ``b2`` has left dependents (``\\``)
    * ``b3`` has right dependents (``/``)
    """

    b0: bool = False
    b1: bool = False
    b2: bool = False
    b3: bool = False

    WIDTH = 4

    def to_bits(self) -> str:
        return _bits_to_str(astuple(self))

    def to_brackets(self) -> str:
        return (
            ("\\" if self.b2 else "")
            + (">" if self.b0 else "<")
            + ("*" if self.b1 else "")
            + ("/" if self.b3 else "")
        )

    @classmethod
    def from_bits(cls, text: str) -> Label4:
        if not _BITS4_RE.match(text):
            raise LabelSyntaxError(f"not a 4-bit label: {text!r}")
        return cls(*(c == "1" for c in text))

    @classmethod
    def from_brackets(cls, text: str) -> Label4:
        m = _BRACKETS4_RE.match(text)
        if not m:
            raise LabelSyntaxError(f"not a 4-bit bracket label: {text!r}")
        back, direction, star, slash = m.groups()
        return cls(b0=direction == ">", b1=bool(star), b2=bool(back), b3=bool(slash))

    def __str__(self) -> str:
        return self.to_bits()


@dataclass(frozen=True)
class Label7:
    """7-bit two-plane label ``b0..b6``.

    * ``b0`` right dependent; ``b1`` incoming arc on plane 1
    * ``b2`` outermost dependent (``*``)
    * ``b3``/``b4`` left/right dependents on plane 0 (``\\0``, ``/0``)
    * ``b5``/``b6`` left/right dependents on plane 1 (``\\1``, ``/1``)
    """

    b0: bool = False
    b1: bool = False
    b2: bool = False
    b3: bool = False
    b4: bool = False
    b5: bool = False
    b6: bool = False

    WIDTH = 7

    @property
    def plane(self) -> int:
        return 1 if self.b1 else 0

    def has_left(self, plane: int) -> bool:
        return self.b5 if plane else self.b3

    def has_right(self, plane: int) -> bool:
        return self.b6 if plane else self.b4

    def to_bits(self) -> str:
        return _bits_to_str(astuple(self))

    def to_brackets(self) -> str:
        return (
            ("\\0" if self.b3 else "")
            + (">" if self.b0 else "<")
            + ("1" if self.b1 else "0")
            + ("*" if self.b2 else "")
            + ("/0" if self.b4 else "")
            + ("\\1" if self.b5 else "")
            + ("/1" if self.b6 else "")
        )

    @classmethod
    def from_bits(cls, text: str) -> Label7:
        if not _BITS7_RE.match(text):
            raise LabelSyntaxError(f"not a 7-bit label: {text!r}")
        return cls(*(c == "1" for c in text))

    @classmethod
    def from_brackets(cls, text: str) -> Label7:
        m = _BRACKETS7_RE.match(text)
        if not m:
            raise LabelSyntaxError(f"not a 7-bit bracket label: {text!r}")
        left0, direction, plane, star, right0, left1, right1 = m.groups()
        return cls(
            b0=direction == ">",
            b1=plane == "1",
            b2=bool(star),
            b3=bool(left0),
            b4=bool(right0),
            b5=bool(left1),
            b6=bool(right1),
        )

    def __str__(self) -> str:
        return self.to_bits()


Label = Union[Label4, Label7]


def parse_label(text: str) -> Label:
    """Parse a label in either syntax; the width follows from the text."""
    text = text.strip()
    if _BITS4_RE.match(text):
        return Label4.from_bits(text)
    if _BITS7_RE.match(text):
        return Label7.from_bits(text)
    if _BRACKETS4_RE.match(text):
        return Label4.from_brackets(text)
    if _BRACKETS7_RE.match(text):
        return Label7.from_brackets(text)
    raise LabelSyntaxError(f"unknown label syntax: {text!r}")


def all_labels4() -> list[Label4]:
    return [Label4.from_bits(format(k, "04b")) for k in range(16)]


def all_labels7() -> list[Label7]:
    return [Label7.from_bits(format(k, "07b")) for k in range(128)]
