"""Explicit inequalities for zeros of Hecke L-functions."""

import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if "HECKE_DATA_DIR" not in os.environ and _data.is_dir():
    os.environ["HECKE_DATA_DIR"] = str(_data)

from ._hecke import *  # noqa: E402,F401,F403
from ._hecke import HeckeError  # noqa: E402,F401
