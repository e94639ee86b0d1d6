"""Service for the sine-activated predictors and their input encodings."""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Sequence, Tuple

import numpy as np

from src.domain.exceptions.domain_exceptions import EncodingError, ShapeError
from src.domain.models.embedding import ForwardingGraph
from src.domain.models.predictor import GENES_PER_PREDICTOR, PredictorSet, PredictorSpec
from src.domain.models.topology import NodeId, Topology
from src.domain.models.workload import SfcRequest, VnfKind

logger = logging.getLogger(__name__)

Activation = Callable[[np.ndarray], np.ndarray]


def relu(values):
    """Rectified linear activation, the non-periodic comparison for sine."""
    return np.maximum(values, 0.0)


@dataclass(frozen=True)
class FeatureUniverse:
    """
    Sizes of the one-hot segments.

    Segment order is fixed: SFCR/FG/PEG id, then VNF kind, then extras
    (instance number for HMHP, source and destination node for HLCP).
    """

    n_sfcrs: int
    vnf_kinds: Tuple[VnfKind, ...] = tuple(VnfKind)
    nodes: Tuple[NodeId, ...] = ()
    _node_positions: Dict[NodeId, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_node_positions", {n: i for i, n in enumerate(self.nodes)})

    @classmethod
    def for_scenario(cls, n_sfcrs: int, topology: Topology) -> "FeatureUniverse":
        return cls(n_sfcrs=n_sfcrs, nodes=tuple(topology.nodes))

    @property
    def n_vnf_kinds(self) -> int:
        return len(self.vnf_kinds)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def hvpp_width(self) -> int:
        return self.n_sfcrs + self.n_vnf_kinds

    @property
    def hmhp_width(self) -> int:
        return self.n_sfcrs + self.n_vnf_kinds + 1

    @property
    def hlcp_width(self) -> int:
        return self.n_sfcrs + 2 * self.n_nodes

    def node_position(self, node: NodeId) -> int:
        try:
            return self._node_positions[node]
        except KeyError:
            raise EncodingError(f"Node {node} is not part of the topology")

    def vnf_position(self, vnf: VnfKind) -> int:
        try:
            return self.vnf_kinds.index(vnf)
        except ValueError:
            raise EncodingError(f"VNF {vnf} is not part of the catalog")


class Predictor:
    """A predictor spec bound to its two evolvable weights."""

    def __init__(self, spec: PredictorSpec, genes: Sequence[float],
                 service: "PredictorService", activation: Activation = np.sin):
        self.spec = spec
        self.genes = tuple(genes)
        self.activation = activation
        self._service = service

    def __call__(self, x: np.ndarray) -> float:
        return self._service.forward(self.spec, self.genes, x, self.activation)


class PredictorService:
    """Service responsible for predictor construction, encoding and inference."""

    def build_predictors(self, universe: FeatureUniverse, n_hosts: int,
                         seed: int) -> PredictorSet:
        """
        Draw the fixed input-to-hidden weights of HVPP, HMHP and HLCP.

        Weights come from Uniform(-pi, pi) with seeds ``seed``, ``seed + 1``
        and ``seed + 2``; they never change afterwards.

        Args:
            universe: Segment sizes of the inputs
            n_hosts: HMHP output amplitude
            seed: Base seed

        Returns:
            PredictorSet with the three specs
        """
        def draw(name: str, width: int, offset: int, amplitude: float) -> PredictorSpec:
            rng = np.random.default_rng(seed + offset)
            weights = rng.uniform(-math.pi, math.pi, size=(width, GENES_PER_PREDICTOR))
            return PredictorSpec(name=name, input_width=width, fixed_weights=weights,
                                 seed=seed + offset, amplitude=amplitude)

        return PredictorSet(
            hvpp=draw("HVPP", universe.hvpp_width, 0, 1.0),
            hmhp=draw("HMHP", universe.hmhp_width, 1, float(n_hosts)),
            hlcp=draw("HLCP", universe.hlcp_width, 2, 1.0),
        )

    def bind(self, spec: PredictorSpec, genes: Sequence[float],
             activation: Activation = np.sin) -> Predictor:
        return Predictor(spec, genes, self, activation)

    def forward(self, spec: PredictorSpec, genes: Sequence[float], x: np.ndarray,
                activation: Activation = np.sin) -> float:
        """
        Two-layer inference without biases.

        h_j = act(sum_i W[i][j] * x[i]) for the two hidden neurons, then
        output = amplitude * act(w21 * h1 + w22 * h2).

        Args:
            spec: Predictor with fixed weights
            genes: (w21, w22)
            x: Feature vector of length ``spec.input_width``
            activation: Elementwise activation, sine unless testing

        Returns:
            Output in [-amplitude, amplitude] for sine
        """
        x = np.asarray(x, dtype=float)
        if x.shape != (spec.input_width,):
            raise ShapeError(
                f"{spec.name} expects {spec.input_width} features, got shape {x.shape}"
            )
        w21, w22 = genes
        hidden = activation(x @ spec.fixed_weights)
        return float(spec.amplitude * activation(np.float64(w21 * hidden[0] + w22 * hidden[1])))

    def forward_relu(self, spec: PredictorSpec, genes: Sequence[float], x: np.ndarray) -> float:
        """ReLU counterpart of ``forward``, for activation-diversity comparisons."""
        return self.forward(spec, genes, x, activation=relu)

    def encode_hvpp_input(self, sfcr: SfcRequest, vnf: VnfKind,
                          universe: FeatureUniverse) -> np.ndarray:
        """[one-hot(sfcr id) | one-hot(vnf)]"""
        x = np.zeros(universe.hvpp_width)
        x[self._sfcr_position(sfcr.id, universe)] = 1.0
        x[universe.n_sfcrs + universe.vnf_position(vnf)] = 1.0
        return x

    def encode_hmhp_input(self, fg: ForwardingGraph, vnf: VnfKind, instance: int,
                          universe: FeatureUniverse) -> np.ndarray:
        """[one-hot(fg id) | one-hot(vnf) | instance]"""
        if instance < 0:
            raise EncodingError(f"VNF instance number cannot be negative, got {instance}")
        x = np.zeros(universe.hmhp_width)
        x[self._sfcr_position(fg.sfcr_id, universe)] = 1.0
        x[universe.n_sfcrs + universe.vnf_position(vnf)] = 1.0
        x[-1] = float(instance)
        return x

    def encode_hlcp_input(self, peg_id: int, src: NodeId, dst: NodeId,
                          universe: FeatureUniverse) -> np.ndarray:
        """[one-hot(peg id) | one-hot(src) | one-hot(dst)]"""
        x = np.zeros(universe.hlcp_width)
        x[self._sfcr_position(peg_id, universe)] = 1.0
        x[universe.n_sfcrs + universe.node_position(src)] = 1.0
        x[universe.n_sfcrs + universe.n_nodes + universe.node_position(dst)] = 1.0
        return x

    def distinct_orderings(self, orderings: Iterable[Sequence[VnfKind]]) -> int:
        """Number of different VNF sequences among the given chains."""
        return len({tuple(o) for o in orderings})

    def placement_spread(self, hosts: Iterable[NodeId]) -> int:
        """Number of different hosts used by a set of placements."""
        return len({h for h in hosts if h is not None})

    @staticmethod
    def _sfcr_position(sfcr_id: int, universe: FeatureUniverse) -> int:
        if not 0 <= sfcr_id < universe.n_sfcrs:
            raise EncodingError(
                f"Id {sfcr_id} is outside the universe of {universe.n_sfcrs} SFCRs"
            )
        return sfcr_id
