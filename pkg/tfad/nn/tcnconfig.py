# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from dataclasses import asdict, dataclass, replace

from ..errors import InvalidParameter
from ..models.utils import validate_positive_int


@dataclass(frozen=True)
class TcnConfig:
    """Shape of a temporal convolutional encoder

    :param in_channels: Input channels
    :param hidden_channels: Channels of every residual block
    :param num_blocks: Number of residual blocks, block ``i`` uses dilation ``2 ** i``
    :param kernel_size: Convolution kernel size, at least 2
    :param embedding_dim: Size of the output embedding
    """

    in_channels: int = 1
    hidden_channels: int = 32
    num_blocks: int = 4
    kernel_size: int = 3
    embedding_dim: int = 16

    def __post_init__(self):
        for name in ("in_channels", "hidden_channels", "num_blocks", "kernel_size", "embedding_dim"):
            validate_positive_int(getattr(self, name), name)
        if self.kernel_size < 2:
            raise InvalidParameter(f"kernel_size must be at least 2, got {self.kernel_size}")

    def dilation(self, block: int) -> int:
        return 2**block

    @property
    def receptive_field(self) -> int:
        """``1 + (kernel_size - 1) * (2 ** num_blocks - 1)``, per convolution of each block"""
        return 1 + (self.kernel_size - 1) * (2**self.num_blocks - 1)

    def with_in_channels(self, in_channels: int) -> "TcnConfig":
        return replace(self, in_channels=in_channels)

    def to_dict(self) -> dict:
        return asdict(self)
