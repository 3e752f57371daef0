# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.nn.trainer`

Mini-batch training of :py:class:`~tfad.nn.tfadmodel.TfadModel` on labeled window pairs with
binary cross-entropy and Adam. The encoder inputs are prepared once, the shuffle order of
epoch ``e`` is drawn from ``RngSeed(seed).generator(e)``.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyTrainingSet, InvalidParameter
from ..models.rngseed import RngSeed
from ..models.utils import validate_finite, validate_positive_int
from ..models.windowpair import WindowPair
from .ops import bce_with_logits
from .optim import Adam
from .tensor import no_grad
from .tfadmodel import TfadModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 20
    batch_size: int = 64
    learning_rate: float = 1e-3
    seed: int = 0
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8

    def __post_init__(self):
        validate_positive_int(self.epochs, "epochs")
        validate_positive_int(self.batch_size, "batch_size")
        lr = validate_finite(self.learning_rate, "learning_rate")
        if lr < 0:
            raise InvalidParameter(f"learning_rate must be nonnegative, got {lr}")
        for name in ("beta1", "beta2"):
            value = validate_finite(getattr(self, name), name)
            if not 0.0 <= value < 1.0:
                raise InvalidParameter(f"{name} must be in range [0, 1), got {value}")
        if validate_finite(self.epsilon, "epsilon") <= 0:
            raise InvalidParameter(f"epsilon must be positive, got {self.epsilon}")
        RngSeed(self.seed)


@dataclass
class TrainResult:
    """Trained model, loss before training and mean loss of every epoch"""

    model: TfadModel
    initial_loss: float
    losses: list[float] = field(default_factory=list)

    @property
    def final_loss(self) -> float:
        return self.losses[-1] if self.losses else self.initial_loss


def dataset_loss(model: TfadModel, inputs: dict, labels: np.ndarray, batch_size: int = 256) -> float:
    """Mean cross-entropy over a prepared set, without recording gradients"""
    total = 0.0
    count = labels.shape[0]
    with no_grad():
        for start in range(0, count, batch_size):
            index = np.arange(start, min(start + batch_size, count))
            total += bce_with_logits(model.logits(inputs, index), labels[index]).item() * index.size
    return total / count


def train(model: TfadModel, pairs: list[WindowPair], config: TrainConfig, lam: float | None = None) -> TrainResult:
    """Fit a copy of ``model`` to the labels of ``pairs``

    :param model: Initial model, left untouched
    :param pairs: Training window pairs (originals and augmented), labels 0/1
    :param config: Training hyperparameters and shuffle seed
    :param lam: HP multiplier for the decomposition, the model one by default
    :raises EmptyTrainingSet: When ``pairs`` is empty
    """
    if not pairs:
        raise EmptyTrainingSet("No window pairs to train on")

    trained = model.copy()
    inputs = trained.prepare(pairs, lam)
    labels = np.array([p.label for p in pairs], dtype=np.float64)
    count = labels.shape[0]

    optimizer = Adam(
        list(trained.parameters().values()),
        lr=config.learning_rate,
        beta1=config.beta1,
        beta2=config.beta2,
        epsilon=config.epsilon,
    )
    rng = RngSeed(config.seed)

    result = TrainResult(trained, dataset_loss(trained, inputs, labels))
    logger.debug(
        "Training on %d pairs (%d anomalous), %d parameters, initial loss %.6f",
        count,
        int(labels.sum()),
        trained.parameter_count(),
        result.initial_loss,
    )

    for epoch in range(config.epochs):
        order = rng.generator(epoch).permutation(count)
        epoch_loss = 0.0
        for start in range(0, count, config.batch_size):
            index = order[start : start + config.batch_size]
            optimizer.zero_grad()
            loss = bce_with_logits(trained.logits(inputs, index), labels[index])
            loss.backward()
            optimizer.step()
            epoch_loss += loss.item() * index.size
        result.losses.append(epoch_loss / count)
        logger.debug("Epoch %d/%d: loss %.6f", epoch + 1, config.epochs, result.losses[-1])

    return result
