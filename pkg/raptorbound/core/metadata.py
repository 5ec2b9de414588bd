"""Run manifests for simulation results.

Captures the command, resolved configuration, seeds, outer-code hashes,
wall time and git state so a result file can be audited and replayed.
"""

import hashlib
import json
import platform
import subprocess
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any


@dataclass
class GitState:
    """State of the working tree the run was launched from."""

    branch: str
    commit: str
    dirty: bool


@dataclass
class RunManifest:
    """Provenance of one simulation output."""

    command: str
    created_at: str
    host: str
    config: dict[str, Any]
    master_seed: int
    workers: int
    wall_time_s: float
    code_hashes: list[str] = field(default_factory=list)
    censored_deltas: list[int] = field(default_factory=list)
    config_hash: str = "sha256:none"
    git: GitState | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunManifest":
        git_data = data.get("git")
        return cls(
            command=data.get("command", ""),
            created_at=data.get("created_at", ""),
            host=data.get("host", ""),
            config=data.get("config", {}),
            master_seed=int(data.get("master_seed", 0)),
            workers=int(data.get("workers", 1)),
            wall_time_s=float(data.get("wall_time_s", 0.0)),
            code_hashes=list(data.get("code_hashes", [])),
            censored_deltas=list(data.get("censored_deltas", [])),
            config_hash=data.get("config_hash", "sha256:none"),
            git=GitState(**git_data) if git_data else None,
        )

    @classmethod
    def from_json(cls, json_str: str) -> "RunManifest":
        return cls.from_dict(json.loads(json_str))


def _git(*args: str) -> str:
    result = subprocess.run(["git", *args], capture_output=True, text=True, check=True)
    return result.stdout.strip()


def get_git_info() -> GitState | None:
    """Branch, commit and dirtiness of the current directory; None outside a repository."""
    try:
        branch, commit = _git("rev-parse", "--abbrev-ref", "HEAD", "HEAD").splitlines()
        dirty = bool(_git("status", "--porcelain"))
    except (subprocess.CalledProcessError, FileNotFoundError, ValueError):
        return None
    return GitState(branch=branch, commit=commit, dirty=dirty)


def compute_config_hash(config_path: Path | None) -> str:
    """SHA-256 prefix of the config file, 'sha256:none' without one."""
    if config_path is None or not config_path.exists():
        return "sha256:none"
    return f"sha256:{hashlib.sha256(config_path.read_bytes()).hexdigest()[:16]}"


def manifest_path(out: Path) -> Path:
    """results.csv -> results.csv.manifest.json"""
    return out.with_name(out.name + ".manifest.json")


def create_manifest(
    command: str,
    config: dict[str, Any],
    master_seed: int,
    workers: int,
    wall_time_s: float,
    code_hashes: list[str],
    censored_deltas: list[int],
    config_path: Path | None = None,
) -> RunManifest:
    return RunManifest(
        command=command,
        created_at=datetime.now().isoformat(timespec="seconds"),
        host=platform.node(),
        config=config,
        master_seed=master_seed,
        workers=workers,
        wall_time_s=wall_time_s,
        code_hashes=code_hashes,
        censored_deltas=censored_deltas,
        config_hash=compute_config_hash(config_path),
        git=get_git_info(),
    )


def save_manifest(manifest: RunManifest, out: Path) -> Path:
    path = manifest_path(out)
    path.write_text(manifest.to_json() + "\n")
    return path


def load_manifest(path: Path) -> RunManifest:
    return RunManifest.from_json(path.read_text())
