"""The ten parameter kinds and their metadata."""

from __future__ import annotations

import enum

from .errors import BadArgument


class ParameterKind(enum.Enum):
    # value: (cli name, kernel code, direction, robust, value at K1, label)
    DOMINATION = ("dom", 0, "X", True, 1, "domination")
    POWER_DOMINATION = ("pd", 1, "X", True, 1, "power domination")
    STANDARD_ZERO_FORCING = ("zf", 2, "X", True, 1, "standard zero forcing")
    PSD_ZERO_FORCING = ("psd", 3, "X", True, 1, "PSD zero forcing")
    SKEW_ZERO_FORCING = ("skew", 4, "X", True, 1, "skew zero forcing")
    VERTEX_COVER = ("vc", 5, "X", True, 0, "vertex cover")
    CONNECTED_DOMINATION = ("cdom", 6, "X", False, 1, "connected domination")
    INDEPENDENCE = ("ind", 7, "Y", True, 1, "independence")
    IRREDUNDANCE = ("ir", 8, "Y", True, 1, "irredundance")
    ZERO_FORCING_IRREDUNDANCE = ("zir", 9, "Y", True, 1, "zero forcing irredundance")

    @property
    def cli_name(self) -> str:
        return self.value[0]

    @property
    def code(self) -> int:
        return self.value[1]

    @property
    def direction(self) -> str:
        return self.value[2]

    @property
    def is_x(self) -> bool:
        return self.value[2] == "X"

    @property
    def robust(self) -> bool:
        return self.value[3]

    @property
    def value_at_k1(self) -> int:
        return self.value[4]

    @property
    def label(self) -> str:
        return self.value[5]

    @property
    def isolated_safe(self) -> bool:
        """Isolated vertices do not break the set-system isomorphism criterion.

        True when an isolated vertex is in no minimal X-set (X(K1) = 0) or in
        every maximal Y-set (Y(K1) = 1).
        """
        return self.value_at_k1 == (0 if self.is_x else 1)

    @classmethod
    def from_name(cls, name: str) -> "ParameterKind":
        key = name.strip().lower()
        for kind in cls:
            if key in (kind.cli_name, kind.name.lower()):
                return kind
        raise BadArgument(f"unknown parameter kind {name!r}; expected one of {', '.join(KIND_NAMES)}")

    def __str__(self) -> str:
        return self.cli_name


KIND_NAMES = tuple(k.cli_name for k in ParameterKind)
X_KINDS = tuple(k for k in ParameterKind if k.is_x)
Y_KINDS = tuple(k for k in ParameterKind if not k.is_x)
ROBUST_KINDS = tuple(k for k in ParameterKind if k.robust)
