"""Assemble the per-Bob report of a cascade."""
import logging
from typing import Sequence

from seqrsp.analysis.correlations import ResourceMeasures
from seqrsp.analysis.solver import SharpnessSolver
from seqrsp.protocol.cascade import BobReport, CascadeProtocol, CascadeReport, ProtocolConfig
from seqrsp.protocol.states import StateFactory, StateInspector
from seqrsp.util.exceptions import ValidationError

logger = logging.getLogger(__name__)


class CascadeReporter:
    """Utility class combining fidelities, requirements and resources of every Bob."""

    # pylint: disable=too-few-public-methods

    @staticmethod
    def run(config: ProtocolConfig, chain: Sequence[float]) -> CascadeReport:
        """
        Evaluate every Bob of a chain.

        :param config: Protocol configuration.
        :param chain: Sharpness of each Bob in order.
        :return: The report.
        """
        chain = CascadeProtocol.check_chain(chain)
        if not chain:
            raise ValidationError("The sharpness chain is empty.", "lambdas")

        threshold = SharpnessSolver.threshold(config.theta)
        bobs = []
        for i, lam in enumerate(chain, start=1):
            fidelity = CascadeProtocol.average_fidelity(config, chain, i)
            discord, concurrence = ResourceMeasures.resources_at(config, chain, i)
            shared = StateFactory.from_profile(CascadeProtocol.profile(config, chain, i), config.family.frame)
            bobs.append(
                BobReport(
                    index=i,
                    sharpness=lam,
                    average_fidelity=fidelity,
                    postselected_fidelity=CascadeProtocol.postselected_fidelity(config, chain, i),
                    classical_bound=threshold,
                    beats_classical=fidelity > threshold,
                    p_up=CascadeProtocol.outcome_probability(config, chain, i),
                    lambda_min=SharpnessSolver.lambda_min(config, i, chain[: i - 1]),
                    coefficients=CascadeProtocol.shared_state_coefficients(config, chain, i),
                    discord=discord,
                    concurrence=concurrence,
                    linear_entropy=StateInspector.linear_entropy(shared),
                )
            )
        report = CascadeReport(config, chain, tuple(bobs))
        logger.info("%d of %d Bobs beat the classical bound %.6f.", report.successful_bobs, len(chain), threshold)
        return report
