"""Exact Fourier elimination, elementary duals and Farkas certificates.

Every function takes a system in the elimdual text format and returns the
decoded JSON report (rationals are strings such as "3/2").
"""

import json

from . import _core
from ._core import SCHEMA_VERSION, Error

__all__ = ["SCHEMA_VERSION", "Error", "canonical", "check", "eliminate", "dual",
           "implicit", "cone", "solve9", "difftest"]

canonical = _core.canonical


def check(text):
    return json.loads(_core.check(text))


def eliminate(text, names):
    if isinstance(names, str):
        names = [names]
    return json.loads(_core.eliminate(text, list(names)))


def dual(text, strong=False, objective="", sigma=""):
    return json.loads(_core.dual(text, strong, objective, str(sigma)))


def implicit(text):
    return json.loads(_core.implicit(text))


def cone(text, analyze=False):
    return json.loads(_core.cone(text, analyze))


def solve9(text, rule="main-first", sigma="", explore=False, trace=False):
    return json.loads(_core.solve9(text, rule, str(sigma), explore, trace))


def difftest(seed, trials, max_vars=None, max_cons=None, mode="box", threads=1):
    kwargs = {}
    if max_vars is not None:
        kwargs["max_vars"] = max_vars
    if max_cons is not None:
        kwargs["max_cons"] = max_cons
    return json.loads(_core.difftest(seed, trials, mode=mode, threads=threads, **kwargs))
