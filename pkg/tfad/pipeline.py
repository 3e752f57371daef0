# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.pipeline`

Time-frequency anomaly detection pipeline.

The :py:class:`Pipeline` ties the modules together: window splitting, augmentation, training of
the four branch model, threshold selection on validation series, scoring and point labeling.

.. code-block:: python

    from tfad.pipeline import Pipeline
    from tfad.cli.pipelineconfig import PipelineConfig
    from tfad.synth.benchmark import make_benchmark

    bench = make_benchmark(n_series=10, length=2000, rng=7)
    pipeline = Pipeline(PipelineConfig(seed=7))
    pipeline.fit(bench.train, bench.val)
    print(pipeline.evaluate(bench.test))
"""

import logging

from .augment.augmentedset import build_augmented_set
from .cli.pipelineconfig import PipelineConfig
from .detect.scoring import ScoreSeries, score_series, vote_point_labels
from .detect.windows import split_windows
from .errors import CheckpointFormatError, ConfigError, DimensionMismatch, EmptyTrainingSet, InvalidParameter
from .evaluation.evalreport import EvalReport, pooled_report
from .evaluation.threshold import DEFAULT_THRESHOLD, select_threshold
from .models.rngseed import RngSeed
from .models.timeseries import TimeSeries, validate_series
from .nn.checkpoint import load_checkpoint, save_checkpoint
from .nn.tfadmodel import TfadModel
from .nn.trainer import TrainResult, train

logger = logging.getLogger("tfad")

_MODEL_STREAM = 0
_AUGMENT_STREAM = 1


class Pipeline:
    """Detection pipeline

    :param PipelineConfig config: Pipeline parameters, the defaults when omitted
    :param bool debug: When `True` log every stage of the pipeline (decomposition, augmentation,
        training loss, threshold selection, scoring)

    .. important:: :py:meth:`fit` (or :py:meth:`load`) must be called before :py:meth:`detect`
        and :py:meth:`evaluate`
    """

    def __init__(self, config: PipelineConfig | None = None, debug: bool = False):
        self._config = (config or PipelineConfig()).validate()
        self._model: TfadModel | None = None
        self._threshold = DEFAULT_THRESHOLD
        self.debug = debug

    @property
    def debug(self) -> bool:
        """Log the pipeline stages"""
        return self._debug

    @debug.setter
    def debug(self, value: bool):
        self._debug = bool(value)
        if self._debug:
            logger.setLevel(logging.DEBUG)
        elif logger.level == logging.DEBUG:
            logger.setLevel(logging.NOTSET)

    @property
    def config(self) -> PipelineConfig:
        return self._config

    @property
    def model(self) -> TfadModel | None:
        """Trained model, ``None`` before :py:meth:`fit`"""
        return self._model

    @property
    def threshold(self) -> float:
        """Window score threshold used by :py:meth:`detect`"""
        return self._threshold

    @threshold.setter
    def threshold(self, value: float):
        value = float(value)
        if not 0.0 < value < 1.0:
            raise InvalidParameter(f"Threshold must be in range (0, 1), got {value}")
        self._threshold = value

    def _trained_model(self) -> TfadModel:
        if self._model is None:
            raise EmptyTrainingSet("The pipeline has no model, call fit or load first")
        return self._model

    def _check_dims(self, series: list[TimeSeries]) -> int:
        dims = {s.dims for s in series}
        if len(dims) > 1:
            raise DimensionMismatch(f"Series have different dimensions: {sorted(dims)}")
        if self._model is not None and dims and dims != {self._model.dims}:
            raise DimensionMismatch(f"The model scores {self._model.dims} dimensional series, got {dims.pop()}")
        return dims.pop() if dims else 0

    def training_pairs(self, train_series: list[TimeSeries]):
        """Window pairs of the training series, augmented

        Without ``train.supervised`` the original labels are ignored: every original pair is
        normal, only the injected pairs are anomalous.
        """
        spec = self._config.train_window_spec()
        pairs = []
        for series in train_series:
            pairs.extend(split_windows(validate_series(series), spec))
        if not self._config.train.supervised:
            pairs = [p if p.label == 0 else p.relabel(0) for p in pairs]
        return build_augmented_set(pairs, self._config.augment_config(), RngSeed(self._config.seed).derive(_AUGMENT_STREAM))

    def fit(self, train_series: list[TimeSeries], val_series: list[TimeSeries] | None = None) -> TrainResult:
        """Train the model and pick the threshold

        :param train_series: Training series
        :param val_series: Validation series. When some carry labels with anomalies the threshold
            maximizing their point adjusted F1 is selected, otherwise the threshold is 0.5
        :return: Training result, with the loss of every epoch
        :raises EmptyTrainingSet: When no training window can be built
        """
        train_series = list(train_series)
        if not train_series:
            raise EmptyTrainingSet("No training series")
        self._model = None
        dims = self._check_dims(train_series + list(val_series or []))

        pairs = self.training_pairs(train_series)
        logger.debug("Training pairs: %d (%d anomalous)", len(pairs), sum(p.label for p in pairs))

        cfg = self._config
        model = TfadModel(
            dims,
            cfg.branches(),
            cfg.tcn_config(),
            lam=cfg.lam,
            rng=RngSeed(cfg.seed).derive(_MODEL_STREAM),
            overrides=cfg.tcn_overrides(),
        )
        result = train(model, pairs, cfg.train_config())
        self._model = result.model
        self._threshold = self._select_threshold(val_series or [])
        return result

    def _select_threshold(self, val_series: list[TimeSeries]) -> float:
        labeled = [s for s in val_series if s.has_labels and s.labels.any()]
        if not labeled:
            logger.debug("No labeled validation series, threshold %.2f", DEFAULT_THRESHOLD)
            return DEFAULT_THRESHOLD
        spec = self._config.window_spec()
        scores = [self.score(s) for s in labeled]
        threshold, report = select_threshold(scores, labeled, spec)
        logger.debug("Validation F1 %.4f at threshold %.6g", report.f1, threshold)
        return threshold

    def score(self, series: TimeSeries) -> list[tuple[int, float]]:
        """Anomaly score of every full window of the series"""
        model = self._trained_model()
        self._check_dims([series])
        return score_series(model, validate_series(series), self._config.window_spec())

    def detect(self, series: TimeSeries) -> ScoreSeries:
        """Window scores and point labels of a series at the pipeline threshold"""
        scores = self.score(series)
        labels = vote_point_labels(scores, self._threshold, self._config.window_spec(), series.length)
        result = ScoreSeries(series.id, scores, labels, self._threshold)
        logger.debug("%r", result)
        return result

    def evaluate(self, series: list[TimeSeries]) -> EvalReport:
        """Pooled point adjusted metrics of labeled series

        :raises InvalidParameter: When a series has no labels
        """
        predictions, truths = [], []
        for s in series:
            if not s.has_labels:
                raise InvalidParameter(f"Series '{s.id}' has no labels to evaluate against")
            predictions.append(self.detect(s).point_labels)
            truths.append(s.labels)
        report = pooled_report(predictions, truths, self._threshold)
        logger.debug("Evaluation on %d series: %s", len(series), report)
        return report

    # -- persistence --

    def save(self, path):
        """Write the model, the configuration and the threshold to a checkpoint file"""
        save_checkpoint(path, self._trained_model(), {"config": self._config.to_dict(), "threshold": self._threshold})

    @classmethod
    def _from_parts(cls, model: TfadModel, extra: dict, debug: bool) -> "Pipeline":
        try:
            config = PipelineConfig.from_dict(extra["config"])
            threshold = float(extra["threshold"])
        except (KeyError, TypeError, ValueError, ConfigError) as e:
            raise CheckpointFormatError(f"Checkpoint has no valid pipeline settings: {e}") from e
        pipeline = cls(config, debug)
        pipeline._model = model
        pipeline.threshold = threshold
        return pipeline

    @classmethod
    def load(cls, path, debug: bool = False) -> "Pipeline":
        """Rebuild a pipeline saved with :py:meth:`save`

        :raises CheckpointFormatError: When the file is not a pipeline checkpoint
        """
        model, extra = load_checkpoint(path)
        return cls._from_parts(model, extra, debug)

    def __repr__(self) -> str:
        state = "trained" if self._model is not None else "untrained"
        return f"Pipeline({state}, branches={[str(b) for b in self._config.branches()]}, threshold={self._threshold:.6g})"
