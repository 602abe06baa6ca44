"""Utility module parsing the textual arguments of the sub-commands."""
import math
from typing import List, Optional, Tuple

from seqrsp.protocol.cascade import ProtocolConfig, Target
from seqrsp.protocol.states import (
    BellDiagonal,
    BellDiagonalCoeffs,
    BellKind,
    BellState,
    InitialFamily,
    NonMaximal,
    Singlet,
    Werner,
)
from seqrsp.util.exceptions import ValidationError

# Tolerance on the number of sweep steps, so that an end point written with few digits is kept.
SWEEP_SLACK = 1e-3
# Polar angles this close to pi/2, 0 or pi are read as the equator or a pole.
SNAP_TOL = 5e-5


class Arguments:
    """Utility class for parsing command-line values."""

    @staticmethod
    def number(raw: str, field: str, index: Optional[int] = None) -> float:
        """
        Parse a finite float.

        :param raw: Text to parse.
        :param field: Parameter name used in the error.
        :param index: Position in a list, if any.
        :return: The number.
        """
        try:
            value = float(raw)
        except ValueError:
            raise ValidationError("'{}' is not a number.".format(raw), field, index) from None
        if not math.isfinite(value):
            raise ValidationError("'{}' is not a finite number.".format(raw), field, index)
        return value

    @staticmethod
    def angle(raw: str, field: str, degrees: bool = False) -> float:
        """
        Parse an angle, in radians unless degrees is set.

        :param raw: Text to parse.
        :param field: Parameter name used in the error.
        :param degrees: Whether the text is in degrees.
        :return: The angle in radians.
        """
        value = Arguments.number(raw, field)
        return math.radians(value) if degrees else value

    @staticmethod
    def theta(raw: str, degrees: bool = False) -> float:
        """
        Parse the polar angle of the target states.

        Values typed with a few digits, such as 1.5708, select the equator or a pole exactly.

        :param raw: Text to parse.
        :param degrees: Whether the text is in degrees.
        :return: The angle in radians.
        """
        value = Arguments.angle(raw, "theta", degrees)
        for special in (0.0, math.pi / 2, math.pi):
            if abs(value - special) < SNAP_TOL:
                return special
        return value

    @staticmethod
    def family(raw: str, degrees: bool = False) -> InitialFamily:
        """
        Parse an initial state family.

        Accepted are 'singlet', 'werner:C', 'nonmax:XI', 'bd:C1,C2,C3' and 'bell:KIND' with KIND one
        of psi-, psi+, phi+ and phi-.

        :param raw: Text to parse.
        :param degrees: Whether XI is given in degrees.
        :return: The family.
        """
        name, _, value = raw.strip().partition(":")
        name = name.lower()
        if name == "singlet" and not value:
            return Singlet()
        if name == "werner" and value:
            return Werner(Arguments.number(value, "family"))
        if name == "nonmax" and value:
            return NonMaximal(Arguments.angle(value, "family", degrees))
        if name == "bd" and value:
            parts = value.split(",")
            if len(parts) != 3:
                raise ValidationError("bd needs three coefficients, got '{}'.".format(value), "family")
            return BellDiagonal(BellDiagonalCoeffs(*(Arguments.number(p, "family", k) for k, p in enumerate(parts))))
        if name == "bell" and value:
            try:
                return BellState(BellKind(value.lower()))
            except ValueError:
                raise ValidationError("Unknown Bell state '{}'.".format(value), "family") from None
        raise ValidationError(
            "Unknown family '{}'; use singlet, werner:C, nonmax:XI, bd:C1,C2,C3 or bell:KIND.".format(raw), "family"
        )

    @staticmethod
    def lambdas(raw: str) -> Tuple[float, ...]:
        """
        Parse a comma separated sharpness chain.

        :param raw: Text such as '0.6,1'.
        :return: The chain; range checks are left to the protocol.
        """
        if not raw.strip():
            raise ValidationError("The sharpness chain is empty.", "lambdas")
        return tuple(Arguments.number(part, "lambdas", index) for index, part in enumerate(raw.split(",")))

    @staticmethod
    def sweep(raw: str, degrees: bool = False) -> List[float]:
        """
        Parse a range start:stop:step into its points.

        The number of points is floor((stop - start) / step + 0.001) + 1 and no point exceeds stop.

        :param raw: Text such as '0:3.14159:0.7854'.
        :param degrees: Whether the values are in degrees.
        :return: The points in radians.
        """
        parts = raw.split(":")
        if len(parts) != 3:
            raise ValidationError("A sweep is written start:stop:step, got '{}'.".format(raw), "sweep")
        start, stop, step = (Arguments.angle(part, "sweep", degrees) for part in parts)
        if step <= 0 or stop < start:
            raise ValidationError("A sweep needs step > 0 and stop >= start, got '{}'.".format(raw), "sweep")
        count = int(math.floor((stop - start) / step + SWEEP_SLACK)) + 1
        return [min(start + k * step, stop) for k in range(count)]

    @staticmethod
    def config(args) -> ProtocolConfig:
        """
        Build the protocol configuration from the family, theta and target options.

        :param args: Parsed arguments.
        :return: The configuration.
        """
        degrees = getattr(args, "deg", False)
        family = Arguments.family(args.family, degrees)
        theta = math.pi / 2 if args.theta is None else Arguments.theta(args.theta, degrees)
        return ProtocolConfig(family, theta, Target(args.target))
