"""Peaked periodic waves of the reduced Ostrovsky equation."""

from ._rosto import *  # noqa: F401,F403
