"""Machine-readable outcome of a batch of exact axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import LinMap


class PreconditionError(ValueError):
    """An operation was called on data that fails its stated precondition."""


class InternalInvariantError(AssertionError):
    """A theorem-backed internal cross-check failed; the input data is suspect."""


@dataclass
class CheckItem:
    axiom: str
    objects: tuple[str, ...]
    ok: bool
    witness: int | None = None
    residual: str = ""
    failures: int = 0
    required: bool = True   # False: a measured property, not an axiom

    def record(self) -> dict:
        return {
            "axiom": self.axiom,
            "objects": list(self.objects),
            "ok": self.ok,
            "witness": self.witness,
            "residual": self.residual,
            "failures": self.failures,
            "required": self.required,
        }


@dataclass
class Report:
    items: list[CheckItem] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(it.ok for it in self.items if it.required)

    @property
    def total_failures(self) -> int:
        return sum(it.failures for it in self.items if it.required)

    def failed(self) -> list[CheckItem]:
        return [it for it in self.items if it.required and not it.ok]

    def add(self, item: CheckItem):
        self.items.append(item)

    def extend(self, other: "Report"):
        self.items.extend(other.items)

    def by_axiom(self, axiom: str) -> list[CheckItem]:
        return [it for it in self.items if it.axiom == axiom]

    def summary(self) -> str:
        bad = self.failed()
        verdict = "pass" if not bad else "FAIL"
        return (f"{verdict}: {len(self.items) - len(bad)}/{len(self.items)} "
                f"checks ok, {self.total_failures} failing basis elements")

    def table(self, failures_only: bool = True) -> str:
        lines = []
        for it in self.items:
            if failures_only and it.ok:
                continue
            obj = ",".join(it.objects)
            if it.ok:
                status = "ok  "
            elif it.required:
                status = "FAIL"
            else:
                status = "note"
            line = f"{status} {it.axiom:28s} ({obj})"
            if not it.ok:
                line += f" witness={it.witness} residual={it.residual}"
                if it.failures > 1:
                    line += f" [+{it.failures - 1} more]"
            lines.append(line)
        lines.append(self.summary())
        return "\n".join(lines)


def check_map_equal(report: Report, axiom: str, objects: tuple[str, ...],
                    lhs: LinMap, rhs: LinMap, required: bool = True) -> bool:
    """Record exact equality of two maps, checked basis element by element.

    Every domain basis vector is an independent instance; the first failing one
    is kept as witness together with the nonzero residual coordinates.
    """
    diff = lhs - rhs
    witness = None
    residual = ""
    failures = 0
    for j in range(diff.cols):
        col = diff.col(j)
        if any(col):
            failures += 1
            if witness is None:
                witness = j
                parts = [f"[{r}]={diff.field.fmt(v)}"
                         for r, v in enumerate(col) if v]
                residual = " ".join(parts)
    item = CheckItem(axiom, objects, failures == 0, witness, residual,
                     failures, required)
    report.add(item)
    return item.ok


def check_condition(report: Report, axiom: str, objects: tuple[str, ...],
                    ok: bool, residual: str = "", witness: int | None = None,
                    failures: int | None = None, required: bool = True) -> bool:
    report.add(CheckItem(axiom, objects, ok, None if ok else witness,
                         "" if ok else residual,
                         (0 if ok else 1) if failures is None else failures,
                         required))
    return ok
