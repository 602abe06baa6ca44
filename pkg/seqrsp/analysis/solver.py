"""Minimum sharpness of each Bob, the number of Bobs beating the classical bound, and boundary tables."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import bisect

from seqrsp.analysis.classical import ClassicalBaseline
from seqrsp.protocol.cascade import CascadeProtocol, ProtocolConfig, SharpnessChain
from seqrsp.protocol.states import NonMaximal, Singlet, Werner
from seqrsp.util.config import Config
from seqrsp.util.exceptions import ProtocolError, ValidationError

logger = logging.getLogger(__name__)

BISECT_XTOL = 1e-12
BOUNDARY_XTOL = 1e-10
SCAN_POINTS = 256
THETA_FLOOR = 1e-4


@dataclass(frozen=True)
class FeasibilityResult:
    """Infimum chain of a configuration and the number of Bobs it lets beat the classical bound."""

    lambda_mins: SharpnessChain
    n_max: int
    config: ProtocolConfig


@dataclass(frozen=True)
class Interval:
    """Interval of a parameter axis."""

    lower: float
    upper: float
    lower_open: bool
    upper_open: bool

    def contains(self, x: float) -> bool:
        """Whether x lies in the interval."""
        above = x > self.lower if self.lower_open else x >= self.lower
        below = x < self.upper if self.upper_open else x <= self.upper
        return above and below

    def render(self, decimals: int = 3) -> str:
        """
        Render the interval in the usual bracket notation.

        :param decimals: Number of decimals of the endpoints.
        :return: For example '(0.472, 0.849]'.
        """
        return "{}{:.{d}f}, {:.{d}f}{}".format(
            "(" if self.lower_open else "[", self.lower, self.upper, ")" if self.upper_open else "]", d=decimals
        )


@dataclass(frozen=True)
class BoundaryRow:
    """All parts of an axis on which exactly n Bobs beat the classical bound."""

    n: int
    intervals: Tuple[Interval, ...]


class Axis(Enum):
    """Parameter axes along which boundary tables are computed."""

    THETA = "theta"
    XI = "xi"
    WERNER_C = "werner_c"

    def config(self, x: float) -> ProtocolConfig:
        """
        Configuration at a point of the axis.

        :param x: Value of the parameter.
        :return: The configuration.
        """
        if self is Axis.THETA:
            return ProtocolConfig(Singlet(), theta=x)
        if self is Axis.XI:
            return ProtocolConfig(NonMaximal(x))
        return ProtocolConfig(Werner(x))

    @property
    def domain(self) -> Tuple[float, float]:
        """Full range of the parameter."""
        if self is Axis.THETA:
            return 0.0, math.pi
        if self is Axis.XI:
            return 0.0, math.pi / 2
        return 0.0, 1.0

    @property
    def half_domain(self) -> Tuple[float, float]:
        """Part of the axis searched; the remainder follows by mirroring."""
        if self is Axis.THETA:
            return THETA_FLOOR, math.pi / 2
        if self is Axis.XI:
            return 0.0, math.pi / 4
        return 0.0, 1.0

    @property
    def mirror(self) -> Optional[float]:
        """Upper end of the full axis when the table is symmetric about the end of the half-domain."""
        if self is Axis.THETA:
            return math.pi
        if self is Axis.XI:
            return math.pi / 2
        return None

    @property
    def includes_lower_end(self) -> bool:
        """Whether the lower end of the axis belongs to the first row."""
        # The poles admit no quantum advantage, so n jumps at theta = 0.
        return self is not Axis.THETA


class SharpnessSolver:
    """Utility class solving for minimum sharpness values and counting successful Bobs."""

    @staticmethod
    def threshold(theta: float) -> float:
        """
        Fidelity a Bob has to exceed.

        :param theta: Polar angle of the target circle.
        :return: The classical bound of the circle.
        """
        return ClassicalBaseline.classical_bound(theta)

    @staticmethod
    def _check_prefix(i: int, prefix: Sequence[float]) -> SharpnessChain:
        prefix = CascadeProtocol.check_chain(prefix)
        if len(prefix) != i - 1:
            raise ProtocolError("Bob {} needs a prefix of {} values, got {}.".format(i, i - 1, len(prefix)))
        return prefix

    @staticmethod
    def lambda_min(config: ProtocolConfig, i: int, prefix: Sequence[float]) -> float:
        """
        Smallest sharpness with which Bob i beats the classical bound, given his predecessors.

        The fidelity is affine in the sharpness of the last Bob, so the bound is inverted exactly.

        :param config: Protocol configuration.
        :param i: Bob index.
        :param prefix: Sharpness of Bobs 1 to i - 1.
        :return: The infimum of the feasible sharpness values, clamped at 0. A value of at least 1
        means Bob i cannot beat the bound; math.inf means his fidelity does not grow with the sharpness.
        """
        prefix = SharpnessSolver._check_prefix(i, prefix)
        offset = CascadeProtocol.average_fidelity(config, prefix + (0.0,), i)
        slope = CascadeProtocol.average_fidelity(config, prefix + (1.0,), i) - offset
        if slope <= 0.0:
            return math.inf
        return max(0.0, (SharpnessSolver.threshold(config.theta) - offset) / slope)

    @staticmethod
    def lambda_min_bisect(config: ProtocolConfig, i: int, prefix: Sequence[float]) -> float:
        """
        Bisection counterpart of lambda_min.

        :param config: Protocol configuration.
        :param i: Bob index.
        :param prefix: Sharpness of Bobs 1 to i - 1.
        :return: As lambda_min.
        """
        prefix = SharpnessSolver._check_prefix(i, prefix)
        threshold = SharpnessSolver.threshold(config.theta)

        def excess(lam: float) -> float:
            return CascadeProtocol.average_fidelity(config, prefix + (lam,), i) - threshold

        if excess(0.0) >= 0.0:
            return 0.0
        if excess(1.0) <= 0.0:
            return math.inf
        return bisect(excess, 0.0, 1.0, xtol=BISECT_XTOL)

    @staticmethod
    def min_chain(config: ProtocolConfig, max_i: Optional[int] = None) -> FeasibilityResult:
        """
        Infimum chain: every Bob measures at the minimum sharpness his predecessors allow.

        The chain stops at the first Bob who cannot beat the bound; his requirement is included.

        :param config: Protocol configuration.
        :param max_i: Longest chain computed; the configured maximum when omitted.
        :return: The chain and the number of Bobs with a requirement below 1.
        """
        max_i = Config.max_chain() if max_i is None else max_i
        if not 1 <= max_i <= Config.max_chain():
            raise ValidationError("max_i must lie in [1, {}], got {}.".format(Config.max_chain(), max_i), "max_i")

        chain: List[float] = []
        while len(chain) < max_i:
            lam = SharpnessSolver.lambda_min(config, len(chain) + 1, chain)
            chain.append(lam)
            if lam >= 1.0:
                break
        n_max = sum(1 for lam in chain if lam < 1.0)
        logger.debug("Infimum chain for %s: %s (n = %d)", config.describe(), chain, n_max)
        return FeasibilityResult(tuple(chain), n_max, config)

    @staticmethod
    def max_bobs(config: ProtocolConfig) -> int:
        """
        Number of Bobs who can beat the classical bound one after another.

        :param config: Protocol configuration.
        :return: n_max of the infimum chain.
        """
        return SharpnessSolver.min_chain(config).n_max

    @staticmethod
    def sweep(axis: Axis, points: int, max_i: Optional[int] = None) -> List[Tuple[float, FeasibilityResult]]:
        """
        Infimum chains at evenly spaced points of an axis, end points included.

        :param axis: The parameter axis.
        :param points: Number of points, at least 2.
        :param max_i: Longest chain computed at each point.
        :return: The points with their infimum chains.
        """
        if points < 2:
            raise ValidationError("A sweep needs at least 2 points, got {}.".format(points), "points")
        lower, upper = axis.domain
        curve = []
        for x in np.linspace(lower, upper, points):
            curve.append((float(x), SharpnessSolver.min_chain(axis.config(float(x)), max_i)))
        logger.info("Swept %d points of the %s axis.", points, axis.value)
        return curve

    @staticmethod
    def _transitions(count: Callable[[float], int], lower: float, upper: float) -> List[Tuple[float, int, int]]:
        """Locate the points where an integer-valued function of x changes value."""
        grid = np.linspace(lower, upper, SCAN_POINTS + 1)
        values = [count(float(x)) for x in grid]
        transitions = []
        for left, right, n_left, n_right in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
            step = 1 if n_right > n_left else -1
            for k in range(n_left, n_right, step):
                level = k + step / 2
                point = bisect(lambda x, lv=level: count(x) - lv, float(left), float(right), xtol=BOUNDARY_XTOL)
                transitions.append((point, k, k + step))
        return transitions

    @staticmethod
    def boundary_table(axis: Axis) -> List[BoundaryRow]:
        """
        Intervals of an axis on which exactly n Bobs beat the classical bound.

        At a transition point the fidelity equals the bound, so the point belongs to the smaller n.

        :param axis: The parameter axis.
        :return: One row per n, ordered by n.
        """
        lower, upper = axis.half_domain

        def count(x: float) -> int:
            return SharpnessSolver.max_bobs(axis.config(x))

        transitions = SharpnessSolver._transitions(count, lower, upper)
        edges = [0.0 if axis is Axis.THETA else lower] + [point for point, _, _ in transitions] + [upper]
        levels = [count(lower)] + [after for _, _, after in transitions]
        for point, before, after in transitions:
            logger.info("Boundary on %s axis at %.6f: n %d -> %d", axis.value, point, before, after)

        rows = {}
        last = len(levels) - 1
        for index, n in enumerate(levels):
            lower_open = levels[index - 1] < n if index > 0 else not axis.includes_lower_end
            upper_open = levels[index + 1] < n if index < last else False
            low, high = edges[index], edges[index + 1]
            if index == last and axis.mirror is not None:
                intervals = (Interval(low, axis.mirror - low, lower_open, lower_open),)
            else:
                intervals = (Interval(low, high, lower_open, upper_open),)
                if axis.mirror is not None:
                    intervals += (Interval(axis.mirror - high, axis.mirror - low, upper_open, lower_open),)
            rows[n] = rows.get(n, ()) + intervals
        return [BoundaryRow(n, tuple(sorted(rows[n], key=lambda iv: iv.lower))) for n in sorted(rows)]
