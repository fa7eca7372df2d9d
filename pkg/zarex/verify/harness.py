# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Iterable, List, Optional, Tuple
from concurrent.futures import ProcessPoolExecutor
import asyncio
import logging
import pathlib
import time

from ..errors import SchemaError
from ..types import CheckReport
from ..util.logging import TraceLogger
from .checks import ZARANKIEWICZ_FIXTURE, fixture_document
from .registry import Params, checks, get_check, select_checks

log: TraceLogger = logging.getLogger("zarex.verify")

Job = Tuple[str, Params]


def plan(
    ids: Iterable[str], overrides: Optional[Params] = None, seed: Optional[int] = None
) -> List[Job]:
    """
    Every (check id, parameters) job the ids ask for. Overrides that no selected check takes are
    rejected so that typos do not pass silently.
    """
    handlers = select_checks(ids)
    unknown = set(overrides or {}) - set().union(*(handler.params for handler in handlers))
    if unknown:
        raise SchemaError(f"no selected check takes the parameters {', '.join(sorted(unknown))}")
    jobs: List[Job] = []
    for handler in handlers:
        jobs += [(handler.name, params) for params in handler.expand(overrides, seed)]
    return jobs


def run_job(check_id: str, params: Params) -> List[CheckReport]:
    start = time.monotonic()
    reports = get_check(check_id)(**params)
    log.debug("Check %s%s took %.2fs", check_id, params, time.monotonic() - start)
    return reports


async def run_checks(
    ids: Iterable[str],
    overrides: Optional[Params] = None,
    seed: Optional[int] = None,
    *,
    threads: int = 1,
    loop: Optional[asyncio.AbstractEventLoop] = None,
) -> List[CheckReport]:
    """
    Run the selected checks and merge their reports by check id, keeping the case order within
    one check. With ``threads > 1`` the jobs go to a process pool.
    """
    jobs = plan(ids, overrides, seed)
    log.info("Running %d verification jobs from %d checks", len(jobs), len(checks))
    if threads > 1 and len(jobs) > 1:
        loop = loop or asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [loop.run_in_executor(pool, run_job, *job) for job in jobs]
            results = await asyncio.gather(*futures)
    else:
        results = [run_job(check_id, params) for check_id, params in jobs]
    order = sorted(range(len(jobs)), key=lambda index: (jobs[index][0], index))
    reports = [report for index in order for report in results[index]]
    failed = sum(not report.passed for report in reports)
    if failed:
        log.warning("%d of %d reports failed", failed, len(reports))
    return reports


def regen_fixtures(path: pathlib.Path = ZARANKIEWICZ_FIXTURE) -> bool:
    """Rewrite the fixture file from the oracle. Returns whether its contents changed."""
    document = fixture_document()
    old = path.read_text() if path.exists() else None
    if old != document:
        path.write_text(document)
        log.info("Rewrote %s", path)
    return old != document
