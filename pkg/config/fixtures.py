"""
Canonical triangulation fixtures
Frozen rotation-format documents used by tests, the CLI and the API
"""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional

# Fixture catalogue
CANONICAL_FIXTURES: Dict[str, Dict[str, Any]] = {
    "triangle": {
        "document": "3 3\nouter 1 0\n0: 1 2\n1: 2 0\n2: 0 1\n",
        "description": "Single triangle, the smallest triangulation",
        "separating_triangles": 0,
    },
    "k4": {
        "document": "4 6\nouter 1 0\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n",
        "description": "K4, one vertex inside a triangle; already 4-connected",
        "separating_triangles": 0,
    },
    "canon5": {
        # a=0 b=1 c=2 d=3 e=4; d inside abc, e outside
        "document": "5 9\nouter 1 0\n0: 1 3 2 4\n1: 4 2 3 0\n2: 4 0 3 1\n3: 2 0 1\n4: 0 2 1\n",
        "description": "Bipyramid with the separating triangle abc",
        "separating_triangles": 1,
    },
    "canon7": {
        # a=0 b=1 c=2 d=3 e=4 f=5; d stacked into abc, e into abd, f into abe
        "document": (
            "6 12\nouter 1 0\n"
            "0: 1 5 4 3 2\n1: 2 3 4 5 0\n2: 0 3 1\n3: 2 0 4 1\n4: 3 0 5 1\n5: 4 0 1\n"
        ),
        "description": "Stacked triangulation with nested separating triangles abd and abe",
        "separating_triangles": 2,
    },
    "octa_nested": {
        # octahedron 0..5 with 6 stacked outside face 012 and 7 inside face 345
        "document": (
            "8 18\nouter 1 0\n"
            "0: 1 5 4 2 6\n1: 2 3 5 0 6\n2: 0 4 3 1 6\n3: 4 7 5 1 2\n"
            "4: 0 5 7 3 2\n5: 4 0 1 3 7\n6: 1 0 2\n7: 3 4 5\n"
        ),
        "description": "Octahedron between the separating triangles 012 and 345",
        "separating_triangles": 2,
    },
}


def _fixture_dir() -> Optional[Path]:
    path = os.getenv("QB_FIXTURE_DIR")
    return Path(path) if path else None


def list_fixtures() -> List[str]:
    """Names of all fixtures, built-in first, then files from QB_FIXTURE_DIR"""
    names = list(CANONICAL_FIXTURES)
    directory = _fixture_dir()
    if directory is not None and directory.is_dir():
        names.extend(sorted(p.stem for p in directory.glob("*.rot") if p.stem not in CANONICAL_FIXTURES))
    return names


def validate_fixture_name(name: str) -> bool:
    """Validate if a fixture name is known"""
    return name in list_fixtures()


def get_fixture(name: str) -> str:
    """Rotation-format document of a fixture; a file in QB_FIXTURE_DIR overrides the built-in one"""
    directory = _fixture_dir()
    if directory is not None:
        path = directory / f"{name}.rot"
        if path.is_file():
            return path.read_text(encoding="utf-8")
    if name not in CANONICAL_FIXTURES:
        raise KeyError(name)
    return CANONICAL_FIXTURES[name]["document"]


def get_fixture_info(name: str) -> Dict[str, Any]:
    """Get information about a specific fixture"""
    info = CANONICAL_FIXTURES.get(name)
    if info is None:
        return {"description": "Custom fixture", "separating_triangles": None}
    return {k: v for k, v in info.items() if k != "document"}
