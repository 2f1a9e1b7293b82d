from __future__ import annotations

from enum import Enum

from .errors import InputError


class BoundId(str, Enum):
    """The general lower bound and the twelve constructive upper bounds."""

    LB = "LB"
    LIN5 = "LIN5"
    LIN6 = "LIN6"
    LIN7 = "LIN7"
    LIN8 = "LIN8"
    UNI5 = "UNI5"
    UNI6 = "UNI6"
    UNI7 = "UNI7"
    UNI8 = "UNI8"
    PACK5 = "PACK5"
    PACK6 = "PACK6"
    PACK7 = "PACK7"
    PACK8 = "PACK8"

    def __str__(self) -> str:
        return self.value

    @property
    def family(self) -> str:
        return self.value.rstrip("5678")

    @property
    def m(self) -> int | None:
        return None if self is BoundId.LB else int(self.value[-1])

    @property
    def min_n(self) -> int:
        return {"LB": 1, "LIN": 2}.get(self.family, 4)

    @classmethod
    def parse(cls, value: str | BoundId) -> BoundId:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise InputError(f"unknown bound/construction id {value!r}") from None

    @classmethod
    def upper(cls, m: int | None = None) -> list[BoundId]:
        """Upper-bound ids in the priority order LIN, UNI, PACK (optionally for one m)."""
        ids = [b for fam in ("LIN", "UNI", "PACK") for b in cls if b.family == fam]
        return [b for b in ids if m is None or b.m == m]


ConstructionId = BoundId
CONSTRUCTION_IDS = BoundId.upper()
