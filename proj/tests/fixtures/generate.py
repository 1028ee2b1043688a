# Copyright 2026 The muc-cpinf Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the stock channel fixtures used by the CLI tests."""

import json
import numpy as np


def mat(m):
    m = np.asarray(m, dtype=complex)
    return {"rows": m.shape[0], "cols": m.shape[1],
            "entries": [[float(z.real), float(z.imag)] for z in m.flatten()]}


def channel(kraus):
    kraus = [np.asarray(k, dtype=complex) for k in kraus]
    b, a = kraus[0].shape
    return {"dom": a, "cod": b, "ancilla": len(kraus),
            "body": mat(np.vstack(kraus))}


def write(name, doc):
    with open(name, "w") as f:
        json.dump(doc, f)
        f.write("\n")


def main():
    rng = np.random.default_rng(20261018)
    i2 = np.eye(2)
    x = np.array([[0, 1], [1, 0]])
    y = np.array([[0, -1j], [1j, 0]])
    z = np.diag([1, -1])
    g = 0.3
    stock = {
        "id1": [np.eye(1)],
        "id2": [i2],
        "id3": [np.eye(3)],
        "discard2": [np.eye(2)[[i]] for i in range(2)],
        "discard3": [np.eye(3)[[i]] for i in range(3)],
        "bitflip": [np.sqrt(0.8) * i2, np.sqrt(0.2) * x],
        "dephase": [np.sqrt(0.6) * i2, np.sqrt(0.4) * z],
        "depolarize": [np.sqrt(0.7) * i2] + [np.sqrt(0.1) * p for p in (x, y, z)],
        "amp_damp": [np.diag([1, np.sqrt(1 - g)]),
                     np.array([[0, np.sqrt(g)], [0, 0]])],
        "hadamard": [np.array([[1, 1], [1, -1]]) / np.sqrt(2)],
        "prepare0": [np.array([[1], [0]])],
        "measure3": [np.outer(np.eye(3)[i], np.eye(3)[i]) for i in range(3)],
        "embed23": [np.eye(3)[:, :2]],
    }
    for i in range(7):
        a, b, u = rng.integers(1, 4, size=3)
        stock[f"random{i}"] = [
            rng.normal(size=(b, a)) + 1j * rng.normal(size=(b, a))
            for _ in range(u)]
    for name, kraus in stock.items():
        write(f"{name}.json", channel(kraus))
    write("rho2.json", mat([[0.75, 0.25j], [-0.25j, 0.25]]))
    write("fmat_ok.json", {
        "src": {"X": "omega", "A": "fin", "B": "all"},
        "tgt": {"X": 3, "A": "all", "B": "all"},
        "entries": [[0, 1, 1.0, 0.0], [5, 2, 0.0, -2.0]]})
    write("fmat_bad.json", {
        "src": {"X": "omega", "A": "all", "B": "all"},
        "tgt": {"X": 3, "A": "all", "B": "all"},
        "entries": [[0, 1, 1.0, 0.0]]})


if __name__ == "__main__":
    main()
