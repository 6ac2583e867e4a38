"""Verification harness: formula-vs-oracle sweeps, a persistent result cache,
and JSON reports.

Reports are plain JSON with a fixed key order and a schema version.  Every
graph is written as graph6.  Timing lives only under keys named ``timing``
or ``elapsed`` so reports can be compared with those stripped.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .closed_forms import RamseyQuery, generalized_ramsey_closed
from .graph import complement
from .graph6 import decode
from .oracle import EXCEEDS_BUDGET, brute_generalized_ramsey
from .soundness import SoundnessTally, check_graph
from .witnesses import active_case, best_witness, verify_witness

SCHEMA_VERSION = 1
CACHE_ENV = "GENRAMSEY_CACHE_DIR"
CACHE_FILE = "results.jsonl"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DOMAIN = 2
EXIT_BUDGET = 3


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "genramsey"


def cache_key(kind: str, params: dict) -> str:
    return kind + "|" + ";".join(f"{k}={params[k]}" for k in sorted(params))


class ResultCache:
    """Append-only JSON-lines store keyed by (quantity, parameters).

    The first line records the tool version; a file written by another
    version is discarded wholesale on open.
    """

    def __init__(self, directory: str | os.PathLike | None = None, version: str = __version__):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.path = self.directory / CACHE_FILE
        self.version = version
        self._lock = threading.Lock()
        self._data: dict[str, dict] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open() as fh:
            lines = fh.read().splitlines()
        if not lines:
            return
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError:
            header = {}
        if header.get("tool_version") != self.version:
            self.path.unlink()
            return
        for line in lines[1:]:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                # a torn final line from an interrupted run
                continue
            self._data[rec["key"]] = rec["value"]

    def get(self, kind: str, params: dict) -> dict | None:
        return self._data.get(cache_key(kind, params))

    def put(self, kind: str, params: dict, value: dict) -> None:
        key = cache_key(kind, params)
        with self._lock:
            self._data[key] = value
            self.directory.mkdir(parents=True, exist_ok=True)
            fresh = not self.path.exists()
            with self.path.open("a") as fh:
                if fresh:
                    fh.write(json.dumps({"tool_version": self.version}) + "\n")
                fh.write(json.dumps({"key": key, "value": value}) + "\n")

    def __len__(self):
        return len(self._data)


def oracle_ramsey(q: RamseyQuery, p_max: int, cache: ResultCache | None = None) -> dict:
    """Oracle verdict as a dict, served from ``cache`` when present."""
    params = _ramsey_params(q, p_max)
    if cache is not None:
        hit = cache.get("ramsey", params)
        if hit is not None:
            return hit
    verdict = brute_generalized_ramsey(q, p_max).as_dict()
    if cache is not None:
        cache.put("ramsey", params, verdict)
    return verdict


@dataclass(frozen=True)
class SweepConfig:
    n_values: tuple[int, ...]
    k_values: tuple[int, ...]
    r_values: tuple[int, ...] | None = None
    p_max: int = 10
    jobs: int = 1

    def grid(self) -> list[tuple[int, int, int]]:
        cells = []
        for n in self.n_values:
            rs = self.r_values if self.r_values is not None else range(1, n - 1)
            for r in rs:
                if not 1 <= r <= n - 2:
                    continue
                for k in self.k_values:
                    cells.append((n, r, k))
        return cells

    def as_dict(self) -> dict:
        return {
            "n": list(self.n_values),
            "r": None if self.r_values is None else list(self.r_values),
            "k": list(self.k_values),
            "p_max": self.p_max,
        }

    def digest(self) -> str:
        return hashlib.sha256(json.dumps(self.as_dict(), sort_keys=True).encode()).hexdigest()[:16]


def _bound_check_certificate(cert: str | None) -> tuple[int, int]:
    """(pairs checked, violations) over the certificate graph and its complement."""
    if cert is None:
        return 0, 0
    g = decode(cert)
    tally = SoundnessTally()
    for h in (g, complement(g)):
        check_graph(h.adj, tally)
    return tally.pairs_checked, len(tally.violations)


def _ramsey_params(q: RamseyQuery, p_max: int) -> dict:
    return {"n": q.n, "r": q.r, "k": q.k, "s": q.s, "p_max": p_max}


def evaluate_cell(n: int, r: int, k: int, p_max: int, cache: ResultCache | None = None) -> dict:
    cell, _ = _evaluate(n, r, k, p_max, cache)
    return cell


def _evaluate(n, r, k, p_max, cache):
    t0 = time.perf_counter()
    formula = generalized_ramsey_closed(n, r, k)
    w = best_witness(n, r, k)
    wrep = verify_witness(w)
    q = RamseyQuery.from_deficiency(n, r, k)
    verdict = None
    if formula <= p_max:
        verdict = oracle_ramsey(q, p_max, cache)
        oracle_value = verdict["value"]
        cert = verdict["certificate"]
    else:
        oracle_value = f"skipped: {EXCEEDS_BUDGET}"
        cert = None
    pairs, violations = _bound_check_certificate(cert)
    match = None if not isinstance(oracle_value, int) else oracle_value == formula
    cell = {
        "n": n,
        "r_star": r,
        "r": q.r,
        "k": k,
        "case": active_case(n, r, k),
        "formula": formula,
        "oracle": oracle_value,
        "match": match,
        "certificate": cert,
        "witness": w.label(),
        "witness_verified": wrep.passed,
        "bound_pairs": pairs,
        "bound_violations": violations,
        "timing": round(time.perf_counter() - t0, 6),
    }
    return cell, verdict


def _cell_job(args):
    n, r, k, p_max = args
    return _evaluate(n, r, k, p_max, None)


def run_sweep(config: SweepConfig, cache: ResultCache | None = None) -> dict:
    """Evaluate every grid cell; uncached cells go to worker processes when ``jobs > 1``.

    Fresh oracle verdicts are written to the cache as each cell completes,
    so an interrupted sweep resumes where it stopped.
    """
    t0 = time.perf_counter()
    grid = config.grid()
    by_cell: dict[tuple[int, int, int], dict] = {}
    pending = []
    for n, r, k in grid:
        q = RamseyQuery.from_deficiency(n, r, k)
        cached = cache is not None and cache.get("ramsey", _ramsey_params(q, config.p_max)) is not None
        if config.jobs > 1 and not cached:
            pending.append((n, r, k, config.p_max))
        else:
            by_cell[(n, r, k)] = evaluate_cell(n, r, k, config.p_max, cache)
    if pending:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for (n, r, k, p_max), (cell, verdict) in zip(pending, pool.map(_cell_job, pending)):
                by_cell[(n, r, k)] = cell
                if cache is not None and verdict is not None:
                    q = RamseyQuery.from_deficiency(n, r, k)
                    cache.put("ramsey", _ramsey_params(q, p_max), verdict)
    cells = [by_cell[c] for c in grid]
    compared = [c for c in cells if c["match"] is not None]
    mismatches = sum(1 for c in compared if not c["match"])
    witness_failures = sum(1 for c in cells if not c["witness_verified"])
    violations = sum(c["bound_violations"] for c in cells)
    status = "PASS" if mismatches == 0 and witness_failures == 0 and violations == 0 else "FAIL"
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "config_hash": config.digest(),
        "config": config.as_dict(),
        "cells": cells,
        "summary": {
            "cells": len(cells),
            "compared": len(compared),
            "skipped": len(cells) - len(compared),
            "mismatches": mismatches,
            "witness_failures": witness_failures,
            "bound_violations": violations,
            "status": status,
        },
        "timing": round(time.perf_counter() - t0, 6),
    }


def strip_timing(obj):
    """Copy of a report with every ``timing``/``elapsed`` entry removed."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k not in ("timing", "elapsed")}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
