"""
Version information for egcdkit.

The version string is derived from `version_base` and `build_type`:
`release` builds use the bare base, `nightly` builds append the UTC date and
`dev` builds append the dev tag (optionally numbered, e.g. `dev3`).
"""

from datetime import datetime
from typing import NamedTuple, Optional

version_base = "0.1.0"
build_type = "dev"


class VersionAttributes(NamedTuple):
    version: str
    major: int
    minor: int
    patch: int
    build: Optional[str]


def _generate_version_attributes(base: str, type_: str) -> VersionAttributes:
    major, minor, patch = (int(part) for part in base.split("."))

    if type_ == "release":
        build = None
    elif type_ == "nightly":
        build = datetime.utcnow().strftime("%Y%m%d")
    elif type_.startswith("dev"):
        build = type_
    else:
        raise ValueError(f"Unknown build type: {type_}")

    full = ".".join(str(part) for part in (major, minor, patch))
    if build:
        full = f"{full}.{build}"

    return VersionAttributes(full, major, minor, patch, build)


version, version_major, version_minor, version_patch, version_build = (
    _generate_version_attributes(version_base, build_type)
)
__version__ = version


__all__ = [
    "__version__",
    "VersionAttributes",
    "version_base",
    "build_type",
    "version",
    "version_major",
    "version_minor",
    "version_patch",
    "version_build",
]
