# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.nn.checkpoint`

Portable text checkpoint. The file is a JSON object::

    {
      "format": "tfad-checkpoint",
      "version": 1,
      "model": {"dims": 1, "lam": 10000.0, "branches": [...], "encoders": {branch: TcnConfig}},
      "parameters": {name: {"shape": [...], "data": [hex floats]}},
      "extra": {...}
    }

Parameter values are written with ``float.hex`` so that loading gives back the same bits, and keys
are sorted so that saving the same model twice gives the same bytes.
"""

import json
from pathlib import Path

import numpy as np

from ..errors import CheckpointFormatError, TfadError
from ..fileio import atomic_write_text
from .tcnconfig import TcnConfig
from .tfadmodel import TfadModel

FORMAT = "tfad-checkpoint"
VERSION = 1


def _encode_array(array: np.ndarray) -> dict:
    return {"shape": list(array.shape), "data": [float(v).hex() for v in array.reshape(-1)]}


def _decode_array(record: dict) -> np.ndarray:
    data = np.array([float.fromhex(v) for v in record["data"]], dtype=np.float64)
    return data.reshape(record["shape"])


def checkpoint_dict(model: TfadModel, extra: dict | None = None) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "model": {
            "dims": model.dims,
            "lam": model.lam,
            "branches": [str(b) for b in model.branches],
            "encoders": {str(b): model.encoder(b).config.to_dict() for b in model.branches},
        },
        "parameters": {name: _encode_array(t.data) for name, t in model.parameters().items()},
        "extra": extra or {},
    }


def model_from_dict(record: dict) -> tuple[TfadModel, dict]:
    """Rebuild a model from :py:func:`checkpoint_dict` output

    :return: Model and the ``extra`` mapping
    :raises CheckpointFormatError: When the record is not a supported checkpoint
    """
    if not isinstance(record, dict) or record.get("format") != FORMAT:
        raise CheckpointFormatError("Not a tfad checkpoint")
    if record.get("version") != VERSION:
        raise CheckpointFormatError(f"Unsupported checkpoint version {record.get('version')}")
    try:
        spec = record["model"]
        overrides = {name: TcnConfig(**cfg) for name, cfg in spec["encoders"].items()}
        model = TfadModel(spec["dims"], spec["branches"], lam=spec["lam"], overrides=overrides)
        model.load_parameters({name: _decode_array(r) for name, r in record["parameters"].items()})
    except (KeyError, TypeError, ValueError, TfadError) as e:
        raise CheckpointFormatError(f"Invalid checkpoint: {e}") from e
    return model, record.get("extra", {})


def save_checkpoint(path, model: TfadModel, extra: dict | None = None):
    atomic_write_text(path, json.dumps(checkpoint_dict(model, extra), sort_keys=True, indent=1) + "\n")


def load_checkpoint(path) -> tuple[TfadModel, dict]:
    """Load a model saved by :py:func:`save_checkpoint`

    :return: Model and the ``extra`` mapping
    :raises CheckpointFormatError: When the file is not a valid checkpoint
    """
    try:
        record = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise CheckpointFormatError(f"Cannot read checkpoint {path}: {e}") from e
    return model_from_dict(record)
