"""Python front end to the spinhecke library."""

import json

from ._spinhecke import command_names, map_names, suite_names
from ._spinhecke import run as _run

__all__ = ["SpinheckeError", "run", "command_names", "suite_names", "map_names",
           "nf", "mul", "dims", "verify"]


class SpinheckeError(RuntimeError):
    def __init__(self, exit_code, error):
        super().__init__(error.get("message", ""))
        self.exit_code = exit_code
        self.code = error.get("code")
        self.offset = error.get("offset")


def run(command, raise_on_error=True, **args):
    """Run a command and return (result dict, exit code)."""
    text, code = _run(command, json.dumps(args))
    body = json.loads(text)
    if raise_on_error and "error" in body:
        raise SpinheckeError(code, body["error"])
    return body, code


def nf(expr, algebra="spin", n=3):
    return run("nf", expr=expr, algebra=algebra, n=n)[0]["normal_form"]


def mul(lhs, rhs, algebra="spin", n=3):
    return run("mul", lhs=lhs, rhs=rhs, algebra=algebra, n=n)[0]["product"]


def dims(algebra="spin", n=3):
    return run("dims", algebra=algebra, n=n)[0]["dimension"]


def verify(suite, n=3, seed=1, **extra):
    body, _ = run("verify", suite=suite, n=n, seed=seed, **extra)
    return body
