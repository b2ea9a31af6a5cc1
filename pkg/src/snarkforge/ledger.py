"""Append-only store of psi search results and the harness that fills it.

One JSON record per line.  Fields are fixed per record kind:

    kind="psi":       recipe, graph6, edge_index, psi, ec_count,
                      certificate, wall_time, version, tags
    kind="truncated": recipe, reason, version

The in-memory index is rebuilt when a ledger is opened; a line that fails
to parse or violates a record invariant raises LedgerIntegrityError with
its 1-based line number.  Writes always go through append(), keeping the
file a faithful event log (single writer, any number of readers).
"""

from __future__ import annotations

import csv
import json
import os
import time
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Optional

from . import __version__
from .errors import BudgetExceededError, DomainError, LedgerIntegrityError
from .graph import list_pentagons
from .graph6 import decode_graph6, encode_graph6
from .coloring import psi_with_counts
from .isomorphism import edge_orbits
from .analyze import certify_snark
from .recipe import evaluate_text, format_recipe, parse_recipe


@dataclass(frozen=True)
class PsiRecord:
    """One verified psi value: the recipe that builds the graph, the graph
    itself (graph6), an orbit-representative edge, and the raw counts."""

    recipe: str
    graph6: str
    edge_index: int
    psi: int
    ec_count: int
    certificate: str
    wall_time: float
    version: str = __version__
    tags: tuple[str, ...] = ()

    def validate(self) -> None:
        if self.psi * 18 != self.ec_count:
            raise DomainError(
                f"psi {self.psi} inconsistent with coloring count {self.ec_count}"
            )
        g = decode_graph6(self.graph6)
        if not 0 <= self.edge_index < g.m:
            raise DomainError(f"edge index {self.edge_index} invalid for stored graph")


@dataclass(frozen=True)
class TruncationRecord:
    """Marker for an instance the search attempted but had to abandon."""

    recipe: str
    reason: str
    version: str = __version__


LedgerEntry = PsiRecord | TruncationRecord


def _entry_to_line(entry: LedgerEntry) -> str:
    if isinstance(entry, PsiRecord):
        payload = {"kind": "psi", **asdict(entry)}
        payload["tags"] = list(entry.tags)
    else:
        payload = {"kind": "truncated", **asdict(entry)}
    return json.dumps(payload, sort_keys=True)


def _line_to_entry(line: str, record_id: int) -> LedgerEntry:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise LedgerIntegrityError(f"unparsable line: {exc}", record_id) from None
    kind = payload.pop("kind", None)
    try:
        if kind == "psi":
            payload["tags"] = tuple(payload.get("tags", ()))
            rec = PsiRecord(**payload)
            rec.validate()
            return rec
        if kind == "truncated":
            return TruncationRecord(**payload)
    except (TypeError, DomainError, ValueError) as exc:
        raise LedgerIntegrityError(str(exc), record_id) from None
    raise LedgerIntegrityError(f"unknown record kind {kind!r}", record_id)


class Ledger:
    """A ledger file plus its in-memory index."""

    def __init__(self, path: str):
        self.path = path
        self.entries: list[LedgerEntry] = []
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if line:
                        self.entries.append(_line_to_entry(line, lineno))

    def record(self, entry: LedgerEntry) -> int:
        """Append one entry; returns its 1-based record id."""
        if isinstance(entry, PsiRecord):
            entry.validate()
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(_entry_to_line(entry) + "\n")
        self.entries.append(entry)
        return len(self.entries)

    def psi_records(self) -> list[PsiRecord]:
        return [e for e in self.entries if isinstance(e, PsiRecord)]

    def achieved(self) -> list[int]:
        """Sorted distinct psi values with at least one witness."""
        return sorted({r.psi for r in self.psi_records()})

    def query(self, n: int) -> list[PsiRecord]:
        """Witnesses for psi value n, smallest graph first, ties broken by
        recipe text."""
        hits = [r for r in self.psi_records() if r.psi == n]
        return sorted(hits, key=lambda r: (decode_graph6(r.graph6).n, r.recipe))

    def reverify(self, rec: PsiRecord) -> bool:
        """Rebuild the witness from its recipe and confirm the stored
        graph6 string and counts bit-identically."""
        g = evaluate_text(rec.recipe)
        if encode_graph6(g) != rec.graph6:
            return False
        psi_val, _ned, ec = psi_with_counts(g, rec.edge_index)
        return psi_val == rec.psi and ec == rec.ec_count

    def export_csv(self, path: str) -> None:
        """Summary: one row per achieved value with its smallest witness."""
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["psi", "witness_vertices", "recipe"])
            for n in self.achieved():
                best = self.query(n)[0]
                writer.writerow([n, decode_graph6(best.graph6).n, best.recipe])


# -- search harness -----------------------------------------------------


@dataclass
class SearchBudget:
    max_edges: int = 80
    max_nodes: int = 10**8


def evaluate_recipe_records(
    recipe_text: str,
    budget: Optional[SearchBudget] = None,
    certification_level: int = 4,
) -> list[LedgerEntry]:
    """Build one recipe, certify it, and compute psi for one edge per
    automorphism orbit.  Oversized or over-budget instances yield a single
    truncation marker instead."""
    budget = budget or SearchBudget()
    canonical = format_recipe(parse_recipe(recipe_text))
    g = evaluate_text(canonical)
    if g.m > budget.max_edges:
        return [TruncationRecord(canonical, f"edge count {g.m} over budget")]
    t0 = time.perf_counter()
    cert = certify_snark(g, certification_level)
    g6 = encode_graph6(g)
    pentagon_edges = {
        g.edge_index(a, b) for p in list_pentagons(g) for a, b in p.edge_pairs()
    }
    out: list[LedgerEntry] = []
    try:
        for orbit in edge_orbits(g):
            rep = orbit[0]
            psi_val, _ned, ec = psi_with_counts(g, rep, node_budget=budget.max_nodes)
            tags = ("pentagon",) if rep in pentagon_edges else ()
            out.append(
                PsiRecord(
                    recipe=canonical,
                    graph6=g6,
                    edge_index=rep,
                    psi=psi_val,
                    ec_count=ec,
                    certificate=cert.summary(),
                    wall_time=round(time.perf_counter() - t0, 6),
                    tags=tags,
                )
            )
    except BudgetExceededError as exc:
        out.append(TruncationRecord(canonical, str(exc)))
    return out


def search(
    family: Iterable[str],
    ledger: Optional[Ledger] = None,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> Iterator[LedgerEntry]:
    """Evaluate a stream of recipes under the budget, recording every
    produced entry into the ledger (when given) and yielding it.

    With ``workers > 1`` recipes are evaluated in parallel processes;
    ledger appends still happen here, in order, through the one writer.
    """
    budget = budget or SearchBudget()
    if workers > 1:
        import functools
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            evaluate = functools.partial(evaluate_recipe_records, budget=budget)
            for entries in pool.imap(evaluate, family):
                for entry in entries:
                    if ledger is not None:
                        ledger.record(entry)
                    yield entry
        return
    for recipe_text in family:
        for entry in evaluate_recipe_records(recipe_text, budget):
            if ledger is not None:
                ledger.record(entry)
            yield entry


# -- built-in recipe families -------------------------------------------


def flower_family(max_n: int) -> Iterator[str]:
    n = 5
    while n <= max_n:
        yield f"(flower {n})"
        n += 2


def pentagon_join_family(bases: Iterable[str] = ("(petersen)", "(flower 5)")) -> Iterator[str]:
    bases = list(bases)
    for left in bases:
        for right in bases:
            yield f"(pentagonjoin {left} p=0 {right} p=0)"


def superpose_chain_family(depth: int, u: int = 0, v: int = 6) -> Iterator[str]:
    """Repeatedly splice the previous graph in place of a Petersen edge.

    The default u, v work for the first step (two non-adjacent Petersen
    vertices); later steps splice at two of the freshly added path
    vertices, which are always non-adjacent.
    """
    inner = "(petersen)"
    yield inner
    for step in range(depth):
        if step == 0:
            inner = f"(superpose52 (petersen) e=0 {inner} u={u} v={v})"
        else:
            g = evaluate_text(inner)
            # the last six vertices are the fresh path vertices; pick the
            # the middle of each path (T(0) and W(0)), never adjacent
            t0_vertex = g.n - 5
            w0_vertex = g.n - 2
            inner = (
                f"(superpose52 (petersen) e=0 {inner} u={t0_vertex} v={w0_vertex})"
            )
        yield inner
