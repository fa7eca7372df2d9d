# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Type, cast
import logging

# Below DEBUG: per-box node counts from the branch and bound.
TRACE = logging.TRACE = 5
logging.addLevelName(TRACE, "TRACE")

BaseLogger: Type[logging.Logger] = cast(Type[logging.Logger], logging.getLoggerClass())


class TraceLogger(BaseLogger):
    def trace(self, msg, *args, **kwargs) -> None:
        if self.isEnabledFor(TRACE):
            self._log(TRACE, msg, args, **kwargs)


logging.setLoggerClass(TraceLogger)
