# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Sequence, cast
from time import time
import argparse
import asyncio
import copy
import logging
import logging.config
import sys

from ..config import Config
from ..errors import SchemaError, ZarexError
from ..types import SerializerError
from ..util.config import BaseMissingError, ConfigValueError
from ..util.logging import TraceLogger

try:
    import uvloop
except ImportError:
    uvloop = None


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser whose usage errors exit with the schema error status."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(SchemaError.exit_status, f"{self.prog}: error: {message}\n")


class Program:
    """
    A generic main class for one-shot commands that handles argument parsing, config loading,
    logger setup and the asyncio loop the command runs in.
    """

    loop: asyncio.AbstractEventLoop
    log: TraceLogger
    parser: argparse.ArgumentParser
    args: argparse.Namespace

    config_class: type[Config] = Config
    config: Config

    module: str = "zarex"
    name: str = "zarex"
    version: str
    command: str = "zarex"
    description: str = ""
    epilog: str | None = None

    def __init__(
        self,
        module: str | None = None,
        name: str | None = None,
        description: str | None = None,
        command: str | None = None,
        version: str | None = None,
        config_class: type[Config] | None = None,
    ) -> None:
        if module:
            self.module = module
        if name:
            self.name = name
        if description:
            self.description = description
        if command:
            self.command = command
        if version:
            self.version = version
        if config_class:
            self.config_class = config_class

    def run(self, argv: Sequence[str] | None = None) -> int:
        """Prepare and run the program. Returns the process exit status instead of exiting."""
        try:
            self.preinit(argv)
            return self._run()
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 0 if e.code is None else 1

    def preinit(self, argv: Sequence[str] | None = None) -> None:
        """
        First part of startup: parse command-line arguments, load and check config, prepare the
        logger. Asyncio must not be used at this stage, as the loop is only initialized later.
        """
        self.prepare_arg_parser()
        self.args = self.parser.parse_args(argv)

        self.prepare_config()
        self.prepare_log()
        self.check_config()
        self.init_loop()

    @property
    def base_config_path(self) -> str:
        return f"pkg://{self.module}/example-config.yaml"

    def prepare_arg_parser(self) -> None:
        """Pre-init lifecycle method. Extend this if you want custom command-line arguments."""
        self.parser = ArgumentParser(
            description=self.description,
            prog=self.command,
            epilog=self.epilog,
            formatter_class=argparse.RawDescriptionHelpFormatter,
            allow_abbrev=False,
        )
        self.parser.add_argument(
            "-c",
            "--config",
            type=str,
            default=None,
            metavar="<path>",
            help="the path to your config file (the packaged defaults are used without one)",
        )
        self.parser.add_argument(
            "--version", action="version", version=f"{self.name} {self.version}"
        )

    def prepare_config(self) -> None:
        """Pre-init lifecycle method. Extend this if you want to customize config loading."""
        self.config = self.config_class(self.args.config, self.base_config_path)
        self.load_and_update_config()

    def load_and_update_config(self) -> None:
        try:
            self.config.load()
        except OSError as e:
            print(f"Failed to read config file: {e}", file=sys.stderr)
            sys.exit(11)
        try:
            self.config.update()
        except BaseMissingError:
            print(
                "Failed to read base config from the default path "
                f"({self.base_config_path}). Maybe your installation is corrupted?",
                file=sys.stderr,
            )
            sys.exit(12)

    def check_config(self) -> None:
        """Pre-init lifecycle method. Extend this if you want to customize config validation."""
        try:
            self.config.check()
        except ConfigValueError as e:
            self.log.fatal(f"Configuration error: {e}")
            sys.exit(11)

    def prepare_log(self) -> None:
        """Pre-init lifecycle method. Extend this if you want to customize logging setup."""
        logging.config.dictConfig(copy.deepcopy(self.config["logging"]))
        self.log = cast(TraceLogger, logging.getLogger("zarex.cli"))

    def init_loop(self) -> None:
        """Init lifecycle method where the asyncio event loop is created."""
        if uvloop is not None:
            self.loop = uvloop.new_event_loop()
            self.log.debug("Using uvloop for asyncio")
        else:
            self.loop = asyncio.new_event_loop()
        asyncio.set_event_loop(self.loop)

    def _run(self) -> int:
        start_ts = time()
        try:
            exit_code = self.loop.run_until_complete(self.start())
        except ZarexError as e:
            self.log.error(f"{type(e).__name__}: {e}")
            exit_code = e.exit_status
        except SerializerError as e:
            self.log.error(f"SchemaError: {e}")
            exit_code = SchemaError.exit_status
        except KeyboardInterrupt:
            self.log.debug("Interrupt received, stopping...")
            exit_code = 130
        except Exception:
            self.log.critical("Unexpected error in main event loop", exc_info=True)
            exit_code = ZarexError.exit_status
        finally:
            self.loop.close()
            asyncio.set_event_loop(None)
        self.log.debug(f"Finished with status {exit_code} in {round(time() - start_ts, 2)} s")
        return exit_code

    async def start(self) -> int:
        """The lifecycle method that does the actual work inside the event loop."""
        return 0
