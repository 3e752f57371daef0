# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.nn.tfadmodel`

The four branch anomaly scoring model. For a window pair, every enabled branch encodes the full
window and its context window with one shared encoder and measures the cosine distance of the two
embeddings. The anomaly probability is ``sigmoid(sum_b w_b * d_b + bias)``.

Before encoding, both windows are standardized with the mean and standard deviation of the
context window, then decomposed in trend and residual with the HP filter. Time branches read
a component as is, frequency branches read its interleaved spectrum.
"""

import logging

import numpy as np

from ..errors import ChannelMismatch, InvalidParameter
from ..models.rngseed import RngSeed
from ..models.windowpair import WindowPair
from ..signal.hpfilter import DEFAULT_LAMBDA, hp_trend
from ..signal.spectral import spectral_features
from .branch import Branch
from .ops import cosine_distance, stack
from .tcnconfig import TcnConfig
from .tcnencoder import TcnEncoder
from .tensor import Tensor, no_grad, sigmoid

STD_FLOOR = 1e-8

# probabilities stay inside the open interval (0, 1)
_PROB_LOW = np.nextafter(0.0, 1.0)
_PROB_HIGH = np.nextafter(1.0, 0.0)

logger = logging.getLogger(__name__)


class TfadModel:
    """Encoders of the enabled branches and the combination head

    :param int dims: Dimensions D of the series the model scores
    :param branches: Enabled branches, all four by default
    :param tcn: Encoder shape shared by the branches (``in_channels`` is set to D)
    :param float lam: HP multiplier, 0 disables the decomposition (trend = window, residual = 0)
    :param rng: Seed for the initialization, ``None`` for all zero encoders
    :param overrides: Optional encoder shape per branch
    :param bool zero_head: Start with all head weights at 0 instead of 1
    """

    def __init__(
        self,
        dims: int,
        branches=None,
        tcn: TcnConfig | None = None,
        lam: float = DEFAULT_LAMBDA,
        rng=None,
        overrides: dict | None = None,
        zero_head: bool = False,
    ):
        branches = Branch.members() if branches is None else branches
        parsed = []
        for branch in branches:
            member = Branch.parse(branch)
            if member is None:
                raise InvalidParameter(f"Unknown branch '{branch}'")
            if member not in parsed:
                parsed.append(member)
        if not parsed:
            raise InvalidParameter("At least one branch must be enabled")
        if float(lam) < 0:
            raise InvalidParameter(f"lam must be nonnegative, got {lam}")

        tcn = TcnConfig() if tcn is None else tcn
        overrides = overrides or {}
        self._dims = int(dims)
        self._lam = float(lam)
        self._branches = tuple(b for b in Branch.members() if b in parsed)
        self._encoders: dict[Branch, TcnEncoder] = {}

        seed = None if rng is None else RngSeed(rng)
        for index, branch in enumerate(self._branches):
            config = overrides.get(branch, overrides.get(str(branch), tcn)).with_in_channels(self._dims)
            branch_rng = None if seed is None else seed.generator(index)
            self._encoders[branch] = TcnEncoder(config, branch_rng)

        weight = np.zeros(len(self._branches)) if zero_head else np.ones(len(self._branches))
        self.head_weight = Tensor(weight, requires_grad=True)
        self.head_bias = Tensor(np.zeros(1), requires_grad=True)
        logger.debug("Model %r with %d parameters", self, self.parameter_count())

    @property
    def dims(self) -> int:
        return self._dims

    @property
    def lam(self) -> float:
        return self._lam

    @property
    def branches(self) -> tuple[Branch, ...]:
        return self._branches

    def encoder(self, branch) -> TcnEncoder:
        """Encoder shared by the full and the context window of a branch"""
        return self._encoders[Branch.parse(branch)]

    def parameters(self) -> dict[str, Tensor]:
        """All parameters by name, ``<branch>.<encoder parameter>``, ``head.weight``, ``head.bias``"""
        params = {}
        for branch in self._branches:
            for name, tensor in self._encoders[branch].params.items():
                params[f"{branch}.{name}"] = tensor
        params["head.weight"] = self.head_weight
        params["head.bias"] = self.head_bias
        return params

    def parameter_count(self) -> int:
        return sum(p.data.size for p in self.parameters().values())

    def load_parameters(self, arrays: dict[str, np.ndarray]):
        """Overwrite the parameters with arrays of the same names and shapes"""
        params = self.parameters()
        if set(arrays) != set(params):
            missing = sorted(set(params) ^ set(arrays))
            raise InvalidParameter(f"Parameter names do not match the model: {missing[:5]}")
        for name, tensor in params.items():
            data = np.asarray(arrays[name], dtype=np.float64)
            if data.shape != tensor.shape:
                raise InvalidParameter(f"Parameter {name} has shape {data.shape}, expected {tensor.shape}")
            tensor.data = data.copy()

    def copy(self) -> "TfadModel":
        clone = TfadModel(
            self._dims,
            self._branches,
            lam=self._lam,
            overrides={b: e.config for b, e in self._encoders.items()},
        )
        clone.load_parameters({k: v.data for k, v in self.parameters().items()})
        return clone

    def zero_grad(self):
        for tensor in self.parameters().values():
            tensor.zero_grad()

    # -- preprocessing --

    def prepare_arrays(self, full: np.ndarray, context_len: int, lam: float | None = None) -> dict:
        """Encoder inputs of a batch of full windows

        :param full: Full windows ``(B, D, full_len)``
        :param context_len: Length of the context prefix
        :param lam: HP multiplier, the model one by default
        :return: ``{branch: (full input, context input)}``
        """
        full = np.asarray(full, dtype=np.float64)
        if full.ndim != 3 or full.shape[1] != self._dims:
            raise ChannelMismatch(f"Model expects windows with {self._dims} dimensions, got shape {full.shape}")
        lam = self._lam if lam is None else float(lam)

        context = full[:, :, :context_len]
        mean = context.mean(axis=2, keepdims=True)
        std = np.maximum(context.std(axis=2, keepdims=True), STD_FLOOR)

        components = []
        for window in ((full - mean) / std, (context - mean) / std):
            trend = hp_trend(window, lam) if lam > 0 else window.copy()
            components.append({False: trend, True: window - trend})

        inputs = {}
        for branch in self._branches:
            full_in = components[0][branch.is_residual]
            context_in = components[1][branch.is_residual]
            if branch.is_frequency:
                full_in, context_in = spectral_features(full_in), spectral_features(context_in)
            inputs[branch] = (full_in, context_in)
        return inputs

    def prepare(self, pairs: list[WindowPair], lam: float | None = None) -> dict:
        """Encoder inputs of window pairs that share one geometry"""
        if not pairs:
            raise InvalidParameter("No window pairs to prepare")
        context_len, full_len = pairs[0].context_len, pairs[0].full_len
        for pair in pairs:
            if pair.context_len != context_len or pair.full_len != full_len:
                raise InvalidParameter("All window pairs of a batch must share context_len and full_len")
        return self.prepare_arrays(np.stack([p.full for p in pairs]), context_len, lam)

    # -- forward --

    def branch_distances(self, inputs: dict, index=None) -> Tensor:
        """Cosine distances ``(B, branches)`` between full and context embeddings"""
        distances = []
        for branch in self._branches:
            full_in, context_in = inputs[branch]
            if index is not None:
                full_in, context_in = full_in[index], context_in[index]
            encoder = self._encoders[branch]
            distances.append(cosine_distance(encoder(full_in), encoder(context_in)))
        return stack(distances, axis=1)

    def logits(self, inputs: dict, index=None) -> Tensor:
        return (self.branch_distances(inputs, index) * self.head_weight).sum(axis=1) + self.head_bias

    def predict_inputs(self, inputs: dict, batch_size: int = 256) -> np.ndarray:
        count = next(iter(inputs.values()))[0].shape[0]
        scores = np.empty(count)
        with no_grad():
            for start in range(0, count, batch_size):
                index = np.arange(start, min(start + batch_size, count))
                scores[index] = sigmoid(self.logits(inputs, index).data)
        return np.clip(scores, _PROB_LOW, _PROB_HIGH)

    def predict(self, pairs: list[WindowPair], batch_size: int = 256) -> np.ndarray:
        """Anomaly probabilities of window pairs"""
        return self.predict_inputs(self.prepare(pairs), batch_size)

    def __repr__(self) -> str:
        branches = ", ".join(str(b) for b in self._branches)
        return f"TfadModel(dims={self._dims}, branches=[{branches}], lam={self._lam:g})"


def model_score(model: TfadModel, pair: WindowPair, lam: float | None = None) -> float:
    """Anomaly probability of one window pair, higher is more anomalous

    :param lam: HP multiplier used for the decomposition, the model one by default
    """
    return float(model.predict_inputs(model.prepare([pair], lam))[0])
