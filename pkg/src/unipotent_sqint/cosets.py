"""Block-parallel, checkpointed driver for the coset kernel.

The coset tree is cut at ``split_depth``: one head task covers the nodes above
the cut and every node at the cut roots an independent block.  Finished
blocks are appended to a journal (``PREFIX <indices> DONE`` lines) and their
aggregates to a ``.blocks.jsonl`` sidecar, so an interrupted run resumes by
skipping finished blocks.
"""

from __future__ import annotations

import json
import os
from multiprocessing import get_context

from .kernel import get_kernel
from .rootsys import RootSystem


class CheckpointError(OSError):
    """The checkpoint journal exists but cannot be used."""


def prefixes_at_depth(rs: RootSystem, mu0, depth: int) -> list[tuple[int, ...]]:
    """Words of the coset tree at the given depth, in DFS order."""
    cart = rs.cartan
    r = rs.rank
    out = []

    def rec(mu, word):
        if len(word) == depth:
            out.append(tuple(word))
            return
        for i in range(r):
            k = mu[i]
            if k > 0 and all(mu[j] - k * cart[i][j] >= 0 for j in range(i)):
                rec([x - k * c for x, c in zip(mu, cart[i])], word + [i])
    rec(list(mu0), [])
    return out


def merge(into: dict, agg: dict) -> None:
    for key, (good, bad, mask, wit) in agg.items():
        rec = into.get(key)
        if rec is None:
            into[key] = [good, bad, mask, list(wit)]
            continue
        rec[0] += good
        rec[1] += bad
        rec[2] |= mask
        for j, w in enumerate(wit):
            if w is not None and (rec[3][j] is None or tuple(w) < tuple(rec[3][j])):
                rec[3][j] = w


def _encode(agg: dict) -> dict:
    return {str(k): [g, b, m, [None if w is None else [w[0], list(w[1])] for w in wit]]
            for k, (g, b, m, wit) in agg.items()}


def _decode(data: dict) -> dict:
    return {int(k): [g, b, m, [None if w is None else (w[0], tuple(w[1])) for w in wit]]
            for k, (g, b, m, wit) in data.items()}


_WORKER = {}


def _init_worker(tables, backend):
    _WORKER["kernel"] = get_kernel(tables, backend)


def _run_task(task):
    prefix, stop = task
    nodes, agg = _WORKER["kernel"].run(prefix, stop)
    return prefix, stop, nodes, agg


def _task_name(task) -> str:
    prefix, stop = task
    return "*" if stop >= 0 else ",".join(map(str, prefix))


def load_checkpoint(path: str) -> dict:
    """Finished blocks recorded under ``path``: name -> (nodes, aggregate)."""
    done: dict = {}
    if not os.path.exists(path):
        return done
    try:
        with open(path) as fh:
            names = set()
            for line in fh:
                parts = line.split()
                if not parts:
                    continue
                if len(parts) != 3 or parts[0] != "PREFIX" or parts[2] != "DONE":
                    raise CheckpointError(f"checkpoint {path}: malformed journal line {line.strip()!r}")
                names.add(parts[1])
        side = path + ".blocks.jsonl"
        if names:
            with open(side) as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    rec = json.loads(line)
                    if rec["name"] in names:
                        done[rec["name"]] = (rec["nodes"], _decode(rec["agg"]))
        missing = names - set(done)
        if missing:
            raise CheckpointError(f"checkpoint {path}: journal lists blocks without data: {sorted(missing)[:3]}")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, CheckpointError):
            raise
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    return done


def run_enumeration(rs: RootSystem, tables: dict, workers: int = 1,
                    checkpoint: str | None = None, split_depth: int | None = None,
                    backend: str | None = None, progress=None) -> tuple[dict, int]:
    """Aggregate the whole coset tree; returns ``(aggregate, number of cosets)``."""
    if split_depth is None:
        split_depth = 0 if workers <= 1 and checkpoint is None else min(6, len(rs.positive_roots))
    if split_depth == 0:
        tasks = [((), -1)]
    else:
        tasks = [((), split_depth)] + [(p, -1) for p in
                                        prefixes_at_depth(rs, tables["mu0"], split_depth)]
    done = load_checkpoint(checkpoint) if checkpoint else {}
    total: dict = {}
    nodes = 0
    for name, (n, agg) in done.items():
        merge(total, agg)
        nodes += n
    todo = [t for t in tasks if _task_name(t) not in done]
    journal = side = None
    if checkpoint:
        journal = open(checkpoint, "a")
        side = open(checkpoint + ".blocks.jsonl", "a")
    finished = len(tasks) - len(todo)

    def record(prefix, stop, n, agg):
        nonlocal nodes, finished
        merge(total, agg)
        nodes += n
        finished += 1
        if journal:
            name = _task_name((prefix, stop))
            side.write(json.dumps({"name": name, "nodes": n, "agg": _encode(agg)}) + "\n")
            side.flush()
            journal.write(f"PREFIX {name} DONE\n")
            journal.flush()
        if progress:
            progress(finished, len(tasks), nodes)

    try:
        if workers <= 1 or len(todo) <= 1:
            _init_worker(tables, backend)
            for t in todo:
                record(*_run_task(t))
        else:
            ctx = get_context("fork" if os.name == "posix" else "spawn")
            with ctx.Pool(workers, initializer=_init_worker, initargs=(tables, backend)) as pool:
                for res in pool.imap(_run_task, todo, chunksize=1):
                    record(*res)
    finally:
        if journal:
            journal.close()
            side.close()
    return total, nodes
