"""
Reports produced by the duality checks.
"""

from dataclasses import dataclass, field

from semidual.extint import ExtInt

from .enums import Construction, GDimCertificate, Verdict


@dataclass(frozen=True)
class SemidualVerdict:
    """
    `yes` comes only from a theorem-backed construction; `yes-window` means
    the homothety was checked to be an isomorphism and Ext vanished in every
    degree the window covers.
    """

    outcome: Verdict
    window: int | None = None
    construction: Construction | None = None
    witness: dict = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.outcome != Verdict.NO

    def to_dict(self) -> dict:
        data = {"outcome": self.outcome.value}
        if self.window is not None:
            data["window"] = self.window
        if self.construction is not None:
            data["construction"] = self.construction.value
        if self.witness:
            data["witness"] = dict(self.witness)
        return data

    def __str__(self):
        if self.outcome == Verdict.YES_WINDOW:
            return f"yes-window({self.window})"
        return self.outcome.value


@dataclass(frozen=True)
class GDimReport:
    """G_C-dim(X) with the evidence for it."""

    value: ExtInt
    certificate: GDimCertificate
    window: int | None = None
    rhom_homology: dict = field(default_factory=dict)
    ab_check: dict | None = None
    witness_degree: int | None = None
    rhom_inf: ExtInt = field(default_factory=ExtInt.pos_inf)

    @property
    def is_finite(self) -> bool:
        return self.value.is_finite

    def to_dict(self) -> dict:
        data = {
            "value": self.value.to_json(),
            "certificate": self.certificate.value,
            "window": self.window,
            "rhom_homology": self.rhom_homology,
            "ab_check": self.ab_check,
        }
        if self.witness_degree is not None:
            data["witness"] = {"ext_degree": self.witness_degree}
        return data
