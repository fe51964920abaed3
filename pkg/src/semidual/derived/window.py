"""
Certified windows for derived-functor results.

A result computed from a truncated free replacement is claimed only for
homological degrees strictly between `above` and `below`. A `finite-pd`
certificate claims every degree.
"""

from dataclasses import dataclass, field

from semidual.extint import ExtInt

from .enums import WindowKind


@dataclass(frozen=True)
class WindowCertificate:
    kind: WindowKind
    cutoff: int | None = None
    above: ExtInt = field(default_factory=ExtInt.neg_inf)
    below: ExtInt = field(default_factory=ExtInt.pos_inf)

    @classmethod
    def exact(cls) -> "WindowCertificate":
        return cls(WindowKind.FINITE_PD)

    @property
    def is_exact(self) -> bool:
        return self.kind == WindowKind.FINITE_PD

    def covers(self, n: int) -> bool:
        return self.above < n < self.below

    def meet(self, other: "WindowCertificate") -> "WindowCertificate":
        """The certificate of a result built from two windowed inputs."""
        if self.is_exact:
            return other
        if other.is_exact:
            return self
        cutoffs = [c for c in (self.cutoff, other.cutoff) if c is not None]
        kind = WindowKind.USER if WindowKind.USER in (self.kind, other.kind) else self.kind
        return WindowCertificate(
            kind,
            min(cutoffs) if cutoffs else None,
            max(self.above, other.above),
            min(self.below, other.below),
        )

    def shifted(self, k: int) -> "WindowCertificate":
        if self.is_exact:
            return self
        return WindowCertificate(self.kind, self.cutoff, self.above + k, self.below + k)

    def to_dict(self) -> dict:
        data = {"kind": self.kind.value, "cutoff": self.cutoff}
        if not self.is_exact:
            data["valid"] = [self.above.to_json(), self.below.to_json()]
        return data

    def __str__(self):
        if self.is_exact:
            return "finite-pd"
        return f"{self.kind.value}(N={self.cutoff}, {self.above} < n < {self.below})"
