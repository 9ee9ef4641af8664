"""Shared CLI parameter types and error handling."""

import functools
import math
import re

import click
from pydantic import ValidationError

from src.core.exceptions import POINT_ERRORS, InvalidParameterError, RingGateError

_PI_LITERAL = re.compile(
    r"^\s*([+-])?\s*((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*$", re.IGNORECASE
)


class AngleType(click.ParamType):
    """Angle in radians; accepts a ``<float>pi`` literal such as ``0.5pi``."""

    name = "angle"

    def convert(self, value, param, ctx):
        if isinstance(value, (int, float)):
            return float(value)

        match = _PI_LITERAL.match(str(value))
        if match:
            sign = -1.0 if match.group(1) == "-" else 1.0
            factor = float(match.group(2)) if match.group(2) else 1.0
            return sign * factor * math.pi

        try:
            angle = float(value)
        except ValueError:
            self.fail(f"{value!r} is not an angle (use radians or e.g. '0.5pi')", param, ctx)
        if not math.isfinite(angle):
            self.fail(f"{value!r} is not a finite angle", param, ctx)
        return angle


ANGLE = AngleType()


class DegenerateClickError(click.ClickException):
    """A parameter point sits on a resonance or singular system."""

    exit_code = 3


def handle_errors(func):
    """Map library errors onto click exceptions and exit codes.

    Invalid arguments exit with 2, degenerate points with 3, any other
    library error with 1.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except POINT_ERRORS as e:
            raise DegenerateClickError(e.message) from e
        except (InvalidParameterError, ValidationError) as e:
            raise click.UsageError(str(e)) from e
        except RingGateError as e:
            raise click.ClickException(e.message) from e
    return wrapper
