import ast
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional


@dataclass()
class VersionInfo:
    version_base: str
    build_type: str
    version: str
    version_major: int
    version_minor: int
    version_patch: int
    version_build: Optional[str]


def _read_literals(version_path: str) -> Dict[str, Any]:
    # only the literal assignments are needed, version.py derives the rest
    with open(version_path, "r", encoding="utf-8") as file:
        tree = ast.parse(file.read(), filename=version_path)

    literals = {}
    for node in tree.body:
        if not isinstance(node, ast.Assign) or len(node.targets) != 1:
            continue
        target = node.targets[0]
        if isinstance(target, ast.Name) and isinstance(node.value, ast.Constant):
            literals[target.id] = node.value.value

    return literals


def extract_version_info(package_path: str) -> VersionInfo:
    """
    Load version and release info from the package without importing it
    """
    version_path = os.path.join(package_path, "version.py")
    print(f"Extracting version info from {version_path}")

    literals = _read_literals(version_path)
    version_base = literals.get("version_base", "unknown")
    build_type = literals.get("build_type", "unknown")

    major, minor, patch = (int(part) for part in version_base.split("."))
    if build_type == "release":
        build = None
    elif build_type == "nightly":
        from datetime import datetime

        build = datetime.utcnow().strftime("%Y%m%d")
    else:
        build = build_type

    version = f"{major}.{minor}.{patch}" + (f".{build}" if build else "")
    print(f"Loaded version {version} from {version_path}")

    return VersionInfo(
        version_base=version_base,
        build_type=build_type,
        version=version,
        version_major=major,
        version_minor=minor,
        version_patch=patch,
        version_build=build,
    )
