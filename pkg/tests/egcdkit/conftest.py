import os
import random
import tempfile
from typing import List

import pytest

from egcdkit import logger


def _get_files(directory: str) -> List[str]:
    list_filepaths = []
    for root, dirs, files in os.walk(directory):
        for file in files:
            list_filepaths.append(os.path.join(os.path.abspath(root), file))
    return list_filepaths


@pytest.fixture(scope="session", autouse=True)
def check_for_created_files():
    start_files_root = set(_get_files(directory=r"."))
    start_files_temp = set(_get_files(directory=tempfile.gettempdir()))
    yield

    # allow creation of __pycache__ and hypothesis cache directories
    created_root = [
        f_path
        for f_path in set(_get_files(directory=r".")) - start_files_root
        if "__pycache__" not in f_path and ".hypothesis" not in f_path
    ]
    assert not created_root, (
        f"{len(created_root)} files created in current working directory during "
        f"pytest run. Created files: {created_root}"
    )

    created_temp = [
        f_path
        for f_path in set(_get_files(directory=tempfile.gettempdir()))
        - start_files_temp
        if "pytest-of" not in f_path
    ]
    assert not created_temp, f"temp files left behind: {created_temp}"


@pytest.fixture(autouse=True)
def quiet_logger():
    # keep test output free of METRIC and warning records
    logger.disable("egcdkit")
    yield
    logger.enable("egcdkit")


@pytest.fixture
def rng():
    return random.Random(20240519)
