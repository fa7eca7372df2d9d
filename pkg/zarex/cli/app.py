# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

import pathlib

from .. import __version__
from ..errors import exit_status_map
from .cache import ResultCache
from .commands import CommandContext, command_handlers, positive_int
from .program import Program


def exit_status_help() -> str:
    lines = [
        "exit status:",
        "  0    success",
        "  1    a verification check failed",
        "  2    unexpected error",
    ]
    for code, errors in sorted(exit_status_map.items()):
        if code <= 2:
            continue
        for i, error in enumerate(errors):
            label = str(code) if i == 0 else ""
            lines.append(f"  {label:<4} {error.__name__}: {error.__doc__.strip().splitlines()[0]}")
    lines += [
        "  11   configuration error",
        "  12   packaged base config missing",
        "  130  interrupted",
    ]
    return "\n".join(lines)


class Zarex(Program):
    module = "zarex"
    name = "zarex"
    command = "zarex"
    version = __version__
    description = "Extremal functions of forbidden 0-1 matrices and forbidden point patterns."

    @property
    def epilog(self) -> str:
        return exit_status_help()

    def prepare_arg_parser(self) -> None:
        super().prepare_arg_parser()
        self.parser.add_argument(
            "--threads",
            type=positive_int,
            default=1,
            metavar="N",
            help="worker processes for jobs that split",
        )
        self.parser.add_argument(
            "--no-cache", action="store_true", help="neither read nor write the result cache"
        )
        self.parser.add_argument(
            "--cache-dir", type=pathlib.Path, metavar="<dir>", help="override cache.directory"
        )
        subparsers = self.parser.add_subparsers(dest="command", metavar="<command>")
        subparsers.required = True
        for handler in command_handlers.values():
            handler.register(subparsers)

    async def start(self) -> int:
        enabled = bool(self.config["cache.enabled"]) and not self.args.no_cache
        cache = ResultCache(self.args.cache_dir or self.config.cache_dir, enabled=enabled)
        ctx = CommandContext(self.args, self.config, cache, threads=self.args.threads)
        self.log.debug("Running %s with cache at %s", self.args.command, cache.path)
        return await command_handlers[self.args.command](ctx)
