"""Run manifests: the reproducibility record written next to every output.

Rerunning the recorded command line reproduces byte-identical data files;
the manifest stores their digests so that claim is checkable.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from dataclasses import dataclass, field

from . import __version__


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunManifest:
    command_line: list
    seed: str  # verbatim, as given on the command line
    parameters: dict
    tool_version: str = __version__
    wall_time_s: float = 0.0
    outputs: dict = field(default_factory=dict)  # path -> sha256

    @staticmethod
    def begin(args_namespace, seed_text: str) -> "RunManifest":
        params = {k: v for k, v in vars(args_namespace).items()
                  if not k.startswith("_") and k != "func"}
        return RunManifest(list(sys.argv), seed_text,
                           {k: _plain(v) for k, v in params.items()})

    def finish(self, out_paths, started_at: float) -> str:
        self.wall_time_s = time.time() - started_at
        for p in out_paths:
            self.outputs[str(p)] = file_digest(p)
        main = next(iter(out_paths), None)
        path = f"{main}.manifest.json" if main else "run.manifest.json"
        with open(path, "w") as fh:
            json.dump({
                "command_line": self.command_line,
                "seed": self.seed,
                "parameters": self.parameters,
                "tool_version": self.tool_version,
                "wall_time_s": self.wall_time_s,
                "outputs": self.outputs,
            }, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)
