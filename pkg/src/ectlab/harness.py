"""Seeded experiments that check the color-class quotient claims on real instances.

Every suite derives one seed per instance, so records do not depend on
how instances are scheduled. Each record embeds the graph and the
witnesses behind its verdict, and :func:`recheck_record` re-verifies a record
using only the validators, without trusting the searchers.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable

from . import __version__
from .coloring import Coloring, chromatic_number_exact, enumerate_minimal_colorings, is_proper
from .ect import apply_ect, color_classes, is_quotient_complete
from .errors import ContractViolation
from .generators import SPLIT_K5_LABELS, SPLIT_K5_PAIR, GraphSource, catalog_names, named_graph
from .graph import Graph, identify_vertices, is_complete
from .planarity import PlanarityVerdict, is_planar, validate_verdict

MASK64 = (1 << 64) - 1
THEOREM2_CAP = 50
THEOREM1_CAP = 1000
MAX_N = 12


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, index: int) -> int:
    return splitmix64((seed ^ index) & MASK64)


@dataclass
class ExperimentReport:
    experiment: str
    seed: int | None
    instances: int
    per_instance: list[dict]
    summary: dict
    artifact_version: str = __version__
    notes: dict = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return self.summary["violations"]

    def to_json(self) -> dict:
        out = {
            "experiment": self.experiment,
            "seed": self.seed,
            "instances": self.instances,
            "per_instance": self.per_instance,
            "summary": self.summary,
            "artifact_version": self.artifact_version,
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def summary_line(self) -> str:
        s = self.summary
        status = "PASS" if s["violations"] == 0 else "FAIL"
        return f"{self.experiment}: {status} ({self.instances} instances, {s['pass']} pass, {s['fail']} fail, {s['violations']} violations)"


def _summarize(records: list[dict], **extra) -> dict:
    passed = sum(1 for r in records if r["ok"])
    summary = {"pass": passed, "fail": len(records) - passed, "violations": len(records) - passed}
    summary.update(extra)
    return summary


def _ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


def _run(fn: Callable[[GraphSource], dict], sources: list[GraphSource], workers: int) -> list[dict]:
    if workers <= 1:
        return [fn(s) for s in sources]
    # map() yields in submission order, so records stay in instance order
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, sources, chunksize=max(1, len(sources) // (4 * workers))))


def _check_suite_args(count: int, n_max: int) -> None:
    if count < 1:
        raise ContractViolation(f"count must be >= 1, got {count}")
    if not 3 <= n_max <= MAX_N:
        raise ContractViolation(f"n_max must lie in 3..{MAX_N}, got {n_max}")


def _quotient_verdicts(g: Graph, colorings: Iterable[Coloring]) -> list[tuple[Coloring, object, PlanarityVerdict]]:
    cache: dict[tuple, PlanarityVerdict] = {}
    out = []
    for c in colorings:
        q = apply_ect(g, color_classes(g, c))
        key = (q.graph.n, q.graph.edges)
        if key not in cache:
            cache[key] = is_planar(q.graph)
        out.append((c, q, cache[key]))
    return out


# --- complete quotients of minimum colorings ---------------------------------


def theorem2_instance(source: GraphSource, cap: int = THEOREM2_CAP) -> dict:
    start = time.perf_counter()
    g = source.resolve()
    chi, witness = chromatic_number_exact(g)
    colorings = enumerate_minimal_colorings(g, cap) if g.n else [witness]
    checked = _quotient_verdicts(g, colorings)
    problems = []
    for c, q, _ in checked:
        if q.graph.n != chi or not is_quotient_complete(q):
            problems.append(f"coloring {list(c.colors)}: quotient on {q.graph.n} vertices with {q.graph.m} edges is not K{chi}")
    return {
        "source": source.to_json(),
        "n": g.n,
        "m": g.m,
        "chi": chi,
        "quotient_complete": not problems,
        "quotient_planar": all(v.planar for _, _, v in checked),
        "elapsed_ms": _ms(start),
        "ok": not problems,
        "violation": "; ".join(problems) or None,
        "colorings_checked": len(checked),
        "graph": g.to_json(),
        "chi_witness": list(witness.colors),
        "minimal_colorings": [list(c.colors) for c, _, _ in checked],
    }


def converse_witness() -> dict:
    """A non-minimum coloring whose quotient is nevertheless complete.

    C6 colored by classes {0,3}, {1,4}, {2,5} contracts to K3 although C6
    is 2-colorable, so a complete quotient does not certify minimality.
    """
    g = named_graph("C6")
    c = Coloring((0, 1, 2, 0, 1, 2))
    q = apply_ect(g, color_classes(g, c))
    chi, _ = chromatic_number_exact(g)
    return {
        "graph": g.to_json(),
        "classes": [list(cls) for cls in q.classes],
        "quotient": q.to_json(),
        "quotient_complete": is_quotient_complete(q),
        "colors_used": c.k,
        "chi": chi,
        "is_violation": False,
        "note": "complete quotient from a non-minimum coloring; the converse direction does not hold",
    }


def theorem2_sources(count: int, n_max: int, seed: int) -> list[GraphSource]:
    sources = []
    for i in range(count):
        rng = random.Random(derive_seed(seed, i))
        n = rng.randint(3, n_max)
        p = round(rng.uniform(0.15, 0.85), 4)
        sources.append(GraphSource("generated", ("gnp", n, rng.getrandbits(64), p)))
    return sources


def verify_theorem2_suite(
    count: int, n_max: int, seed: int, cap: int = THEOREM2_CAP, workers: int = 1, catalog: bool = False
) -> ExperimentReport:
    """Every enumerated minimum coloring must contract to K_chi.

    Instances are G(n, p) graphs with n uniform in ``3..n_max`` and p uniform
    in [0.15, 0.85], or the whole named catalog when ``catalog`` is set.
    """
    if catalog:
        sources = [GraphSource("named", name) for name in catalog_names()]
    else:
        _check_suite_args(count, n_max)
        sources = theorem2_sources(count, n_max, seed)
    records = _run(partial(theorem2_instance, cap=cap), sources, workers)
    return ExperimentReport(
        "theorem2",
        None if catalog else seed,
        len(records),
        records,
        _summarize(records),
        notes={"non_converse_witness": converse_witness()},
    )


# --- planar graphs and four colors -------------------------------------------


def fct_instance(source: GraphSource) -> dict:
    start = time.perf_counter()
    g = source.resolve()
    verdict = is_planar(g)
    chi, coloring = chromatic_number_exact(g)
    q = apply_ect(g, color_classes(g, coloring))
    qv = is_planar(q.graph)
    problems = []
    if not verdict.planar:
        problems.append("generated instance is not planar")
    if chi > 4:
        problems.append(f"planar graph needs {chi} colors")
    if not is_quotient_complete(q):
        problems.append("minimum-coloring quotient is not complete")
    if not qv.planar:
        problems.append(f"quotient K{q.graph.n} is not planar")
    return {
        "source": source.to_json(),
        "n": g.n,
        "m": g.m,
        "chi": chi,
        "quotient_complete": is_quotient_complete(q),
        "quotient_planar": qv.planar,
        "elapsed_ms": _ms(start),
        "ok": not problems,
        "violation": "; ".join(problems) or None,
        "graph": g.to_json(),
        "planarity": verdict.to_json(),
        "coloring": list(coloring.colors),
        "quotient": q.to_json(),
        "quotient_planarity": qv.to_json(),
    }


def planar_sources(count: int, n_max: int, seed: int, mode: str = "maximal", p: float = 0.3) -> list[GraphSource]:
    sources = []
    for i in range(count):
        rng = random.Random(derive_seed(seed, i))
        n = rng.randint(3, n_max)
        s = rng.getrandbits(64)
        detail = ("maximal", n, s) if mode == "maximal" else ("subsample", n, s, p)
        sources.append(GraphSource("generated", detail))
    return sources


def verify_fct_sample(
    count: int, n_max: int, seed: int, mode: str = "maximal", p: float = 0.3, workers: int = 1
) -> ExperimentReport:
    """Random planar graphs must be 4-colorable with a planar K_chi quotient."""
    _check_suite_args(count, n_max)
    records = _run(fct_instance, planar_sources(count, n_max, seed, mode, p), workers)
    chis = sorted({r["chi"] for r in records})
    return ExperimentReport("fct", seed, len(records), records, _summarize(records, chi_values=chis))


# --- planarity-preserving quotients --------------------------------------------


def _theorem1_records(g: Graph, source: dict, cap: int) -> tuple[list[dict], int]:
    chi = chromatic_number_exact(g)[0]
    out = []
    for idx, (c, q, qv) in enumerate(_quotient_verdicts(g, enumerate_minimal_colorings(g, cap) if g.n else [])):
        out.append(
            {
                "source": {**source, "coloring_index": idx},
                "n": g.n,
                "m": g.m,
                "chi": chi,
                "quotient_complete": is_quotient_complete(q),
                "quotient_planar": qv.planar,
                "elapsed_ms": 0.0,
                "ok": qv.planar,
                "coloring": list(c.colors),
                "quotient": q.to_json(),
                "quotient_planarity": qv.to_json(),
            }
        )
    return out, chi


def _require_planar(g: Graph) -> PlanarityVerdict:
    if g.n > MAX_N:
        raise ContractViolation(f"theorem-1 search is limited to n <= {MAX_N}, got n={g.n}")
    verdict = is_planar(g)
    if not verdict.planar:
        raise ContractViolation("theorem-1 search needs a planar input graph")
    return verdict


def verify_theorem1_search(g: Graph, cap: int = THEOREM1_CAP, source: GraphSource | None = None) -> ExperimentReport:
    """Check every enumerated minimum coloring of one planar graph.

    One record per coloring. The claim under test is existence: the
    report has a violation only if no quotient is planar.
    """
    _require_planar(g)
    src = source.to_json() if source else {"kind": "inline", "graph": g.to_json()}
    start = time.perf_counter()
    records, _ = _theorem1_records(g, src, cap)
    elapsed = _ms(start)
    for r in records:
        r["elapsed_ms"] = round(elapsed / max(1, len(records)), 3)
    planar = sum(1 for r in records if r["ok"])
    exists = planar > 0
    summary = {
        "pass": planar,
        "fail": len(records) - planar,
        "violations": 0 if exists else 1,
        "existence": exists,
        "planar_fraction": round(planar / len(records), 6) if records else 0.0,
    }
    return ExperimentReport("theorem1-search", None, len(records), records, summary)


def theorem1_instance(source: GraphSource, cap: int = THEOREM1_CAP) -> dict:
    start = time.perf_counter()
    g = source.resolve()
    verdict = _require_planar(g)
    records, chi = _theorem1_records(g, source.to_json(), cap)
    planar = [r for r in records if r["quotient_planar"]]
    exists = bool(planar)
    example = planar[0] if planar else (records[0] if records else None)
    return {
        "source": source.to_json(),
        "n": g.n,
        "m": g.m,
        "chi": chi,
        "quotient_complete": all(r["quotient_complete"] for r in records),
        "quotient_planar": len(planar) == len(records),
        "elapsed_ms": _ms(start),
        "ok": exists,
        "violation": None if exists else "no minimum coloring has a planar quotient",
        "existence": exists,
        "colorings_checked": len(records),
        "planar_quotients": len(planar),
        "planar_fraction": round(len(planar) / len(records), 6) if records else 0.0,
        "graph": g.to_json(),
        "planarity": verdict.to_json(),
        "coloring": example["coloring"] if example else [],
        "quotient": example["quotient"] if example else None,
        "quotient_planarity": example["quotient_planarity"] if example else None,
    }


def verify_theorem1_suite(
    count: int, n_max: int, seed: int, cap: int = THEOREM1_CAP, mode: str = "maximal", p: float = 0.3, workers: int = 1
) -> ExperimentReport:
    """Existence of a planar minimum-coloring quotient, over random planar graphs."""
    _check_suite_args(count, n_max)
    records = _run(partial(theorem1_instance, cap=cap), planar_sources(count, n_max, seed, mode, p), workers)
    return ExperimentReport("theorem1", seed, len(records), records, _summarize(records))


# --- single identification can break planarity -------------------------------


@dataclass(frozen=True)
class GapReport:
    base: Graph
    base_planar: PlanarityVerdict
    pair: tuple[int, int]
    identified: Graph
    identified_planar: PlanarityVerdict

    @property
    def holds(self) -> bool:
        u, v = self.pair
        return (
            self.base_planar.planar
            and not self.base.adjacent(u, v)
            and not self.identified_planar.planar
            and self.identified.n == 5
            and is_complete(self.identified)
        )

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "base_labels": list(SPLIT_K5_LABELS),
            "base_planar": self.base_planar.to_json(),
            "pair": list(self.pair),
            "pair_adjacent": self.base.adjacent(*self.pair),
            "identified": self.identified.to_json(),
            "identified_complete": is_complete(self.identified),
            "identified_planar": self.identified_planar.to_json(),
            "holds": self.holds,
            "artifact_version": __version__,
        }


def demo_proof_gap() -> GapReport:
    """Split-K5 is planar, but identifying its two split vertices yields K5."""
    base = named_graph("split-K5")
    u, v = SPLIT_K5_PAIR
    identified = identify_vertices(base, u, v)
    return GapReport(base, is_planar(base), (u, v), identified, is_planar(identified))


# --- independent re-checking ---------------------------------------------------


def _quotient_matches(g: Graph, coloring: Coloring, quotient: dict) -> bool:
    q = apply_ect(g, color_classes(g, coloring))
    return q.to_json() == quotient


def recheck_record(experiment: str, record: dict) -> list[str]:
    """Re-verify one record from its embedded witnesses; returns problems found.

    Minimality of ``chi`` itself has no short certificate, so it is not
    re-derived here; everything that has one (properness, color counts,
    quotients, embeddings, minor models) is.
    """
    problems: list[str] = []
    g = Graph.from_json(record["graph"])
    chi = record["chi"]

    def proper(colors: list[int], k: int, label: str) -> Coloring | None:
        c = Coloring(tuple(colors))
        if not is_proper(g, c):
            problems.append(f"{label} is not proper")
            return None
        if c.k != k:
            problems.append(f"{label} uses {c.k} colors, expected {k}")
        return c

    def verdict_ok(graph: Graph, data: dict, label: str) -> PlanarityVerdict | None:
        try:
            verdict = PlanarityVerdict.from_json(data)
            validate_verdict(graph, verdict)
        except ValueError as exc:
            problems.append(f"{label}: {exc}")
            return None
        return verdict

    if experiment == "theorem2":
        proper(record["chi_witness"], chi, "chi witness")
        for colors in record["minimal_colorings"]:
            c = proper(colors, chi, f"coloring {colors}")
            if c is not None and record["ok"]:
                q = apply_ect(g, color_classes(g, c))
                if not (q.graph.n == chi and is_quotient_complete(q)):
                    problems.append(f"coloring {colors} does not contract to K{chi}")
    elif experiment in ("fct", "theorem1"):
        base = verdict_ok(g, record["planarity"], "base witness")
        if base is not None and not base.planar and record["ok"]:
            problems.append("base graph is not planar")
        if record["coloring"]:
            c = proper(record["coloring"], chi, "coloring")
            if c is not None and not _quotient_matches(g, c, record["quotient"]):
                problems.append("recorded quotient does not match the coloring")
            qg = Graph.from_json(record["quotient"]["graph"])
            qv = verdict_ok(qg, record["quotient_planarity"], "quotient witness")
            if qv is not None and experiment == "fct" and qv.planar != record["quotient_planar"]:
                problems.append("quotient planarity flag disagrees with its witness")
            if qv is not None and experiment == "theorem1" and record["ok"] and not qv.planar:
                problems.append("existence claimed but the example quotient is not planar")
        if experiment == "fct" and record["ok"] and chi > 4:
            problems.append(f"chi={chi} recorded as passing")
    else:
        raise ContractViolation(f"unknown experiment {experiment!r}")
    return problems
