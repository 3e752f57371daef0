# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.cli.pipelineconfig`

Pipeline configuration, a tree of dataclasses stored as YAML. See ``docs/configuration.rst``
for the schema. Unknown keys and invalid values raise :py:class:`~tfad.errors.ConfigError`.
"""

from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import yaml

from ..augment.augmentconfig import AugmentConfig
from ..augment.injectionkind import InjectionKind
from ..errors import ConfigError, TfadError
from ..fileio import atomic_write_text
from ..models.rngseed import RngSeed
from ..models.windowspec import WindowSpec
from ..nn.branch import Branch
from ..nn.tcnconfig import TcnConfig
from ..nn.trainer import TrainConfig
from ..signal.hpfilter import DEFAULT_LAMBDA


@dataclass
class DecompositionSection:
    enabled: bool = True
    lam: float = DEFAULT_LAMBDA


@dataclass
class WindowSection:
    context_len: int = 96
    suspect_len: int = 24
    stride: int = 1
    train_stride: int = 4


@dataclass
class TcnSection:
    hidden_channels: int = 32
    num_blocks: int = 4
    kernel_size: int = 3
    embedding_dim: int = 16


@dataclass
class ModelSection:
    branches: list[str] = field(default_factory=lambda: [str(b) for b in Branch.members()])
    tcn: TcnSection = field(default_factory=TcnSection)
    tcn_overrides: dict[str, TcnSection] = field(default_factory=dict)


@dataclass
class TrainSection:
    epochs: int = 20
    batch_size: int = 64
    learning_rate: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    supervised: bool = False


@dataclass
class AugmentSection:
    normal_ratio: float = 0.5
    anomaly_ratio: float = 0.4
    freq_perturb_scale: float = 0.05
    smooth_lambda: float = 100.0
    methods: list[str] = field(default_factory=lambda: [str(m) for m in InjectionKind.members()])
    slow_slope_dims: list[int] | None = None


@dataclass
class PathsSection:
    train: str | None = None
    val: str | None = None
    test: str | None = None
    checkpoint: str = "tfad-checkpoint.json"
    output: str = "out"


def _section(cls, data, name: str):
    if data is None:
        return cls()
    if not isinstance(data, dict):
        raise ConfigError(f"Section '{name}' must be a mapping")
    known = {f.name for f in fields(cls)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"Unknown key(s) in section '{name}': {', '.join(map(str, unknown))}")
    return cls(**data)


@dataclass
class PipelineConfig:
    """Every parameter of the pipeline

    :param seed: Root seed of initialization, augmentation and shuffling
    """

    seed: int = 0
    decomposition: DecompositionSection = field(default_factory=DecompositionSection)
    window: WindowSection = field(default_factory=WindowSection)
    model: ModelSection = field(default_factory=ModelSection)
    train: TrainSection = field(default_factory=TrainSection)
    augment: AugmentSection = field(default_factory=AugmentSection)
    paths: PathsSection = field(default_factory=PathsSection)

    # -- derived objects --

    @property
    def lam(self) -> float:
        """Effective HP multiplier, 0 when the decomposition is disabled"""
        return float(self.decomposition.lam) if self.decomposition.enabled else 0.0

    def window_spec(self) -> WindowSpec:
        return WindowSpec(self.window.context_len, self.window.suspect_len, self.window.stride)

    def train_window_spec(self) -> WindowSpec:
        return self.window_spec().with_stride(self.window.train_stride)

    def branches(self) -> list[Branch]:
        branches = []
        for name in self.model.branches:
            branch = Branch.parse(name)
            if branch is None:
                raise ConfigError(f"Unknown branch '{name}'")
            branches.append(branch)
        return branches

    def tcn_config(self) -> TcnConfig:
        return TcnConfig(**asdict(self.model.tcn))

    def tcn_overrides(self) -> dict[Branch, TcnConfig]:
        overrides = {}
        for name, section in self.model.tcn_overrides.items():
            branch = Branch.parse(name)
            if branch is None:
                raise ConfigError(f"Unknown branch '{name}' in tcn_overrides")
            overrides[branch] = TcnConfig(**asdict(section))
        return overrides

    def train_config(self) -> TrainConfig:
        t = self.train
        return TrainConfig(t.epochs, t.batch_size, t.learning_rate, self.seed, t.beta1, t.beta2, t.epsilon)

    def augment_config(self) -> AugmentConfig:
        a = self.augment
        return AugmentConfig(
            a.normal_ratio,
            a.anomaly_ratio,
            a.freq_perturb_scale,
            a.smooth_lambda,
            tuple(a.methods),
            None if a.slow_slope_dims is None else tuple(a.slow_slope_dims),
        )

    def validate(self) -> "PipelineConfig":
        """Check every section

        :raises ConfigError: On the first invalid value
        """
        try:
            RngSeed(self.seed)
            branches = self.branches()
            if not branches:
                raise ConfigError("At least one branch must be enabled")
            if not self.decomposition.enabled and any(b.is_residual for b in branches):
                raise ConfigError("Residual branches need the decomposition to be enabled")
            if self.decomposition.enabled:
                if not isinstance(self.decomposition.lam, int | float) or not self.decomposition.lam >= 0:
                    raise ConfigError(f"decomposition.lam must be a nonnegative number, got {self.decomposition.lam}")
                if self.window.context_len < 3:
                    raise ConfigError("context_len must be at least 3 when the decomposition is enabled")
            self.train_window_spec()
            self.tcn_config()
            self.tcn_overrides()
            self.train_config()
            self.augment_config()
            if not isinstance(self.train.supervised, bool):
                raise ConfigError("train.supervised must be true or false")
        except ConfigError:
            raise
        except (TfadError, TypeError, ValueError) as e:
            raise ConfigError(str(e)) from e
        return self

    # -- serialization --

    @classmethod
    def from_dict(cls, data: dict | None) -> "PipelineConfig":
        data = {} if data is None else data
        if not isinstance(data, dict):
            raise ConfigError("Configuration must be a mapping")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration key(s): {', '.join(map(str, unknown))}")

        try:
            model_data = dict(data.get("model") or {})
            tcn = _section(TcnSection, model_data.pop("tcn", None), "model.tcn")
            overrides = {
                str(name): _section(TcnSection, value, f"model.tcn_overrides.{name}")
                for name, value in (model_data.pop("tcn_overrides", None) or {}).items()
            }
            model = _section(ModelSection, model_data, "model")
            model.tcn = tcn
            model.tcn_overrides = overrides
            model.branches = list(model.branches)

            config = cls(
                seed=data.get("seed", 0),
                decomposition=_section(DecompositionSection, data.get("decomposition"), "decomposition"),
                window=_section(WindowSection, data.get("window"), "window"),
                model=model,
                train=_section(TrainSection, data.get("train"), "train"),
                augment=_section(AugmentSection, data.get("augment"), "augment"),
                paths=_section(PathsSection, data.get("paths"), "paths"),
            )
        except TypeError as e:
            raise ConfigError(f"Invalid configuration: {e}") from e
        return config.validate()

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def load(cls, path) -> "PipelineConfig":
        """Read a YAML configuration file

        :raises ConfigError: When the file cannot be read or parsed, or holds invalid values
        """
        try:
            data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        except OSError as e:
            raise ConfigError(f"Cannot read configuration {path}: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {path}: {e}") from e
        return cls.from_dict(data)

    def dumps(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, default_flow_style=False)

    def save(self, path):
        atomic_write_text(path, self.dumps())
