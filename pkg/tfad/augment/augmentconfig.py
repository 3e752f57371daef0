# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from dataclasses import dataclass, field

from ..errors import InvalidParameter
from ..models.utils import validate_finite, validate_ratio
from .injectionkind import InjectionKind


def _all_methods() -> tuple[InjectionKind, ...]:
    return tuple(InjectionKind.members())


@dataclass(frozen=True)
class AugmentConfig:
    """Parameters of :py:func:`~tfad.augment.augmentedset.build_augmented_set`

    :param normal_ratio: Extra normal windows, as a fraction of the original windows
    :param anomaly_ratio: Extra anomaly injected windows, as a fraction of the original windows
    :param freq_perturb_scale: Noise level of the frequency domain normal augmentation,
        relative to the spectrum RMS
    :param smooth_lambda: HP multiplier of the smoothing normal augmentation
    :param methods: Enabled injection kinds, names are accepted
    :param slow_slope_dims: Dimensions receiving slow slope injections, ``None`` for all
    """

    normal_ratio: float = 0.5
    anomaly_ratio: float = 0.4
    freq_perturb_scale: float = 0.05
    smooth_lambda: float = 100.0
    methods: tuple[InjectionKind, ...] = field(default_factory=_all_methods)
    slow_slope_dims: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "normal_ratio", validate_ratio(self.normal_ratio, "normal_ratio"))
        object.__setattr__(self, "anomaly_ratio", validate_ratio(self.anomaly_ratio, "anomaly_ratio"))

        scale = validate_finite(self.freq_perturb_scale, "freq_perturb_scale")
        if scale < 0:
            raise InvalidParameter(f"freq_perturb_scale must be nonnegative, got {scale}")
        object.__setattr__(self, "freq_perturb_scale", scale)

        smooth = validate_finite(self.smooth_lambda, "smooth_lambda")
        if smooth < 0:
            raise InvalidParameter(f"smooth_lambda must be nonnegative, got {smooth}")
        object.__setattr__(self, "smooth_lambda", smooth)

        methods = []
        for method in self.methods:
            kind = InjectionKind.parse(method)
            if kind is None:
                raise InvalidParameter(f"Unknown injection method '{method}'")
            if kind not in methods:
                methods.append(kind)
        object.__setattr__(self, "methods", tuple(methods))

        if self.slow_slope_dims is not None:
            dims = tuple(int(d) for d in self.slow_slope_dims)
            if not dims or min(dims) < 0:
                raise InvalidParameter(f"slow_slope_dims must be a nonempty set of dimensions, got {dims}")
            object.__setattr__(self, "slow_slope_dims", tuple(sorted(set(dims))))

    @property
    def time_methods(self) -> tuple[InjectionKind, ...]:
        return tuple(m for m in self.methods if not m.is_frequency)

    @property
    def frequency_methods(self) -> tuple[InjectionKind, ...]:
        return tuple(m for m in self.methods if m.is_frequency)
