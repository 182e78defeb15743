"""The bundled reference catalogue of the 406 solutions and comparison against it.

Reference file layout (JSON)::

    {"solutions": [
        {"id": 37, "item": 11, "r": ["0", "x+z", "0"], "sigma1": 37, "sigma2": 38,
         "im_delta2": [[0, 0, -1, -1, 0, -2, -1, -3]],
         "ker_delta3": [[1, 1, 0, 0, 1, 0, 0, -1], ...]},
        ...]}

``im_delta2``/``ker_delta3`` are ``null`` when no matrices are printed for the
entry; an empty ``im_delta2`` list stands for a printed zero image.  An
optional ``note`` string records transcription remarks.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .cohomology import CohomologyReport, cohomology3
from .intlinalg import Lattice
from .rmap import (
    RMap,
    image_cardinality,
    is_bijective,
    satisfies_stte,
    sigma1_conjugate,
    sigma2_conjugate,
)
from .search import SolutionSet

__all__ = [
    "CatalogueEntry",
    "CatalogueError",
    "DiffReport",
    "analyze",
    "build_records",
    "compare",
    "emit_json",
    "emit_text",
    "load_reference",
    "reference_path",
]

EXPECTED_COUNT = 406


class CatalogueError(ValueError):
    """Malformed or inconsistent reference data."""


def _vectors(raw, where: str):
    if raw is None:
        return None
    out = []
    for v in raw:
        if len(v) != 8 or not all(isinstance(a, int) for a in v):
            raise CatalogueError(f"{where}: expected integer vectors of length 8, got {v!r}")
        out.append(tuple(v))
    return tuple(out)


@dataclass(frozen=True)
class CatalogueEntry:
    id: int
    item: int
    r: tuple[str, str, str]
    sigma1: int
    sigma2: int
    im_delta2: tuple[tuple[int, ...], ...] | None = None
    ker_delta3: tuple[tuple[int, ...], ...] | None = None
    note: str | None = None

    @classmethod
    def from_json(cls, d: Mapping) -> CatalogueEntry:
        where = f"entry {d.get('id', '?')}"
        try:
            entry = cls(
                id=int(d["id"]),
                item=int(d["item"]),
                r=tuple(d["r"]),
                sigma1=int(d["sigma1"]),
                sigma2=int(d["sigma2"]),
                im_delta2=_vectors(d.get("im_delta2"), where),
                ker_delta3=_vectors(d.get("ker_delta3"), where),
                note=d.get("note"),
            )
        except (KeyError, TypeError) as exc:
            raise CatalogueError(f"{where}: missing or malformed field {exc}") from None
        if len(entry.r) != 3:
            raise CatalogueError(f"{where}: need three polynomials")
        if (entry.im_delta2 is None) != (entry.ker_delta3 is None):
            raise CatalogueError(f"{where}: im_delta2 and ker_delta3 must be printed together")
        return entry

    def to_json(self) -> dict:
        d = {
            "id": self.id,
            "item": self.item,
            "r": list(self.r),
            "sigma1": self.sigma1,
            "sigma2": self.sigma2,
            "im_delta2": None if self.im_delta2 is None else [list(v) for v in self.im_delta2],
            "ker_delta3": None if self.ker_delta3 is None else [list(v) for v in self.ker_delta3],
        }
        if self.note is not None:
            d["note"] = self.note
        return d

    @property
    def rmap(self) -> RMap:
        return RMap.from_polys(*self.r)

    @property
    def has_matrices(self) -> bool:
        return self.ker_delta3 is not None


def reference_path() -> Path:
    return Path(str(resources.files("stte") / "data" / "reference.json"))


def _validate(entries: Sequence[CatalogueEntry], expected_count: int | None) -> None:
    by_id = {}
    for e in entries:
        if e.id in by_id:
            raise CatalogueError(f"entry {e.id}: duplicate id")
        by_id[e.id] = e
    if expected_count is not None and len(entries) != expected_count:
        raise CatalogueError(f"expected {expected_count} entries, found {len(entries)}")
    maps = {}
    for e in entries:
        try:
            maps[e.id] = e.rmap
        except ValueError as exc:
            raise CatalogueError(f"entry {e.id}: {exc}") from None
        if not satisfies_stte(maps[e.id]):
            raise CatalogueError(f"entry {e.id}: {e.r} does not satisfy the tetrahedron equation")
    for e in entries:
        for name, conj in (("sigma1", sigma1_conjugate), ("sigma2", sigma2_conjugate)):
            partner = getattr(e, name)
            if partner not in by_id:
                raise CatalogueError(f"entry {e.id}: {name} partner {partner} missing")
            if getattr(by_id[partner], name) != e.id:
                raise CatalogueError(f"entry {e.id}: {name} partner {partner} does not point back")
            if conj(maps[e.id]) != maps[partner]:
                raise CatalogueError(f"entry {e.id}: {name} image is not entry {partner}")
            if by_id[partner].item != e.item:
                raise CatalogueError(f"entry {e.id}: {name} partner {partner} in another item")


def load_reference(
    path: str | Path | None = None,
    validate: bool = True,
    expected_count: int | None = EXPECTED_COUNT,
) -> list[CatalogueEntry]:
    """Read a reference file (the bundled one by default)."""
    path = reference_path() if path is None else Path(path)
    text = path.read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogueError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(raw, dict) or not isinstance(raw.get("solutions"), list):
        raise CatalogueError(f"{path}: top level must be an object with a 'solutions' list")
    entries = [CatalogueEntry.from_json(d) for d in raw["solutions"]]
    if validate:
        _validate(entries, expected_count)
    return entries


def analyze(solutions: Iterable[RMap], jobs: int = 1) -> dict[int, CohomologyReport]:
    """Cohomology reports keyed by code."""
    solutions = list(solutions)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(cohomology3, solutions, chunksize=16))
    else:
        reports = [cohomology3(R) for R in solutions]
    return {rep.code: rep for rep in reports}


@dataclass
class DiffReport:
    missing: list[int] = field(default_factory=list)
    extra: list[int] = field(default_factory=list)
    mismatched_cohomology: list[int] = field(default_factory=list)
    mismatched_sigma: list[int] = field(default_factory=list)
    unparsable: list[int] = field(default_factory=list)
    compared_matrices: int = 0

    @property
    def ok(self) -> bool:
        return not (
            self.missing
            or self.extra
            or self.mismatched_cohomology
            or self.mismatched_sigma
            or self.unparsable
        )

    def summary(self) -> dict:
        return {
            "missing": len(self.missing),
            "extra": len(self.extra),
            "mismatched_cohomology": len(self.mismatched_cohomology),
            "mismatched_sigma": len(self.mismatched_sigma),
            "unparsable": len(self.unparsable),
            "compared_matrices": self.compared_matrices,
        }

    def __str__(self) -> str:
        lines = [", ".join(f"{k}={v}" for k, v in self.summary().items())]
        if self.missing:
            lines.append("missing codes: " + " ".join(f"{c:06x}" for c in self.missing))
        if self.extra:
            lines.append("extra codes: " + " ".join(f"{c:06x}" for c in self.extra))
        if self.mismatched_cohomology:
            lines.append("cohomology mismatch ids: " + " ".join(map(str, self.mismatched_cohomology)))
        if self.mismatched_sigma:
            lines.append("sigma mismatch ids: " + " ".join(map(str, self.mismatched_sigma)))
        return "\n".join(lines)


def _safe_code(e: CatalogueEntry) -> int | None:
    try:
        return e.rmap.code
    except ValueError:
        return None


def compare(
    computed: SolutionSet | Iterable[RMap],
    ref: Sequence[CatalogueEntry],
    reports: Mapping[int, CohomologyReport] | None = None,
) -> DiffReport:
    """Differences between computed solutions (and reports) and the reference.

    Cohomology is compared at lattice level, so printed vectors may differ
    from the computed bases by sign or by a change of basis.
    """
    codes = {R.code for R in computed}
    ref_codes = {e.id: _safe_code(e) for e in ref}
    diff = DiffReport()
    diff.missing = sorted(c for c in set(ref_codes.values()) - codes if c is not None)
    diff.extra = sorted(codes - set(ref_codes.values()))
    diff.unparsable = sorted(i for i, c in ref_codes.items() if c is None)
    for e in ref:
        code = ref_codes[e.id]
        if code is None:
            continue
        R = RMap.from_code(code)
        for name, conj in (("sigma1", sigma1_conjugate), ("sigma2", sigma2_conjugate)):
            if conj(R).code != ref_codes.get(getattr(e, name)):
                diff.mismatched_sigma.append(e.id)
                break
    if reports is not None:
        for e in ref:
            code = ref_codes[e.id]
            rep = reports.get(code)
            if rep is None:
                continue
            if e.has_matrices:
                diff.compared_matrices += 1
                same = (
                    rep.kernel == Lattice.span(e.ker_delta3, 8)
                    and rep.image == Lattice.span(e.im_delta2, 8)
                    and rep.nontrivial
                )
            else:
                same = not rep.nontrivial
            if not same:
                diff.mismatched_cohomology.append(e.id)
    return diff


def _group_json(g) -> dict:
    return {"free": g.free_rank, "torsion": list(g.torsion)}


def build_records(
    solutions: SolutionSet | Iterable[RMap],
    reports: Mapping[int, CohomologyReport] | None = None,
    ref: Sequence[CatalogueEntry] | None = None,
) -> list[dict]:
    """One JSON-ready record per solution, in the order given."""
    by_code = {e.rmap.code: e for e in ref} if ref else {}
    records = []
    for R in solutions:
        entry = by_code.get(R.code)
        if entry is not None:
            rec = entry.to_json()
        else:
            rec = {
                "id": None,
                "item": None,
                "r": list(R.polys()),
                "sigma1": getattr(by_code.get(sigma1_conjugate(R).code), "id", None),
                "sigma2": getattr(by_code.get(sigma2_conjugate(R).code), "id", None),
                "im_delta2": None,
                "ker_delta3": None,
            }
        rec["code"] = R.code
        rec["image_cardinality"] = image_cardinality(R)
        rec["bijective"] = is_bijective(R)
        rec["sigma1_code"] = sigma1_conjugate(R).code
        rec["sigma2_code"] = sigma2_conjugate(R).code
        rep = reports.get(R.code) if reports else None
        if rep is not None:
            rec["ker_rank"] = rep.ker_rank
            rec["ker_basis"] = [list(v) for v in rep.kernel.basis]
            rec["im_generator"] = list(rep.im_generator)
            rec["h3"] = _group_json(rep.h3)
            rec["h3_reduced"] = _group_json(rep.h3_reduced)
            rec["nontrivial"] = rep.nontrivial
        records.append(rec)
    return records


def emit_json(records: Sequence[dict], path: str | Path | None = None) -> str:
    """Serialize records; the output is itself loadable by :func:`load_reference`."""
    lines = [json.dumps(rec, separators=(", ", ": ")) for rec in records]
    text = '{"solutions": [\n' + ",\n".join(lines) + "\n]}\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def emit_text(records: Sequence[dict], path: str | Path | None = None) -> str:
    header = f"{'id':>4} {'code':>8} {'card':>4} {'bij':>3} {'ker':>3} {'H3':<14} {'H3/triv':<10} R"
    lines = [header]
    for rec in records:
        h3 = h3r = "-"
        if "h3" in rec:
            h3 = _group_str(rec["h3"])
            h3r = _group_str(rec["h3_reduced"])
        lines.append(
            f"{rec['id'] if rec['id'] is not None else '-':>4} {rec['code']:>#8x} "
            f"{rec['image_cardinality']:>4} {'yes' if rec['bijective'] else 'no':>3} "
            f"{rec.get('ker_rank', '-'):>3} {h3:<14} {h3r:<10} ({', '.join(rec['r'])})"
        )
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _group_str(g: Mapping) -> str:
    parts = []
    if g["free"] == 1:
        parts.append("Z")
    elif g["free"] > 1:
        parts.append(f"Z^{g['free']}")
    parts += [f"Z/{d}" for d in g["torsion"]]
    return "+".join(parts) or "0"
