"""Self-describing checkpoint container.

Layout: 4-byte little-endian header length, UTF-8 JSON header, then raw
little-endian float-32 tensor payloads.  The header carries the format
version, the model config, and a tensor directory of (name, shape, byte
offset into the payload region).
"""

from __future__ import annotations

import dataclasses
import json
import struct
from pathlib import Path

import numpy as np
import torch

from .model import ModelConfig, MultimodalPolicyNetwork

FORMAT_VERSION = "mpn-v1"


def save_checkpoint(path, model: MultimodalPolicyNetwork, extra: dict | None = None) -> None:
    state = model.state_dict()
    directory = []
    offset = 0
    payloads = []
    for name, tensor in state.items():
        arr = tensor.detach().cpu().numpy().astype("<f4")
        directory.append({"name": name, "shape": list(arr.shape), "offset": offset})
        payloads.append(arr.tobytes())
        offset += arr.nbytes
    header = {
        "version": FORMAT_VERSION,
        "config": dataclasses.asdict(model.config),
        "tensors": directory,
    }
    if extra:
        header["extra"] = extra
    blob = json.dumps(header, sort_keys=True).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(struct.pack("<I", len(blob)))
        fh.write(blob)
        for p in payloads:
            fh.write(p)


def load_checkpoint(path) -> tuple[MultimodalPolicyNetwork, dict]:
    """Rebuild the network from a container; returns (model, header)."""
    data = Path(path).read_bytes()
    (hlen,) = struct.unpack_from("<I", data, 0)
    header = json.loads(data[4 : 4 + hlen].decode("utf-8"))
    if header.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported checkpoint version {header.get('version')!r}")
    cfg_doc = dict(header["config"])
    for key in ("ngram_sizes", "block_channels"):
        cfg_doc[key] = tuple(cfg_doc[key])
    config = ModelConfig(**cfg_doc)
    model = MultimodalPolicyNetwork(config)
    payload = data[4 + hlen :]
    state = {}
    for entry in header["tensors"]:
        shape = tuple(entry["shape"])
        count = int(np.prod(shape)) if shape else 1
        arr = np.frombuffer(payload, dtype="<f4", count=count, offset=entry["offset"])
        state[entry["name"]] = torch.from_numpy(arr.reshape(shape).copy())
    model.load_state_dict(state)
    model.eval()
    return model, header
