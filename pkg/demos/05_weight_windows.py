"""Scale-resolved conditioning: equal-count weight windows.

A weighted layer (say Bluetooth signal strength between participants,
where stronger signal means closer proximity) can be sliced into
non-overlapping weight windows with equal edge counts, each window an
unweighted network describing one spatial scale. Rotating each window
through the conditioning role shows at which scale the layer actually
matters for the other two.

Here the synthetic proximity layer is built so that only its strongest
edges carry the structure coupling 'face' and 'calls': the triad indices
light up in window 0 and fade for weaker windows.

CLI equivalent:
    netriad rssi-sweep --input demo.edges --window-layer prox \
        --a face --b calls -k 4 --realizations 300 --seed 41
"""

import numpy as np

from netriad import (MultiplexDataset, NodeUniverse, binarize_layer,
                     triad_indices, weight_windows, window_spec)
from netriad._sampling import uniform_edge_set

rng = np.random.default_rng(5)
universe = NodeUniverse(120)


def er(p):
    return uniform_edge_set(universe, rng.binomial(universe.pair_count, p),
                            rng)


face, calls = er(0.05), er(0.05)
core = er(0.04)  # structure shared by face, calls and close proximity
face, calls = face | core, calls | core

# proximity weights: the core pairs get the strongest signal, plus three
# bands of unrelated background edges at decreasing strength
k_windows = 4
band_size = len(core)
prox_weights = {}
for pair in core.pairs:
    prox_weights[pair] = float(90 + 10 * rng.random())
background = er(0.5)  # pool to draw the weaker bands from
pool = [p for p in sorted((background - core).pairs)]
rng.shuffle(pool)
for band in range(1, k_windows):
    strength = 90 - 25 * band
    for pair in pool[(band - 1) * band_size: band * band_size]:
        prox_weights[pair] = float(strength + 10 * rng.random())

names = tuple(f"v{k}" for k in range(universe.n_nodes))
ds = MultiplexDataset(
    node_names=names,
    layers={
        "face": {p: 1.0 for p in sorted(face.pairs)},
        "calls": {p: 1.0 for p in sorted(calls.pairs)},
        "prox": prox_weights,
    })

windows = weight_windows(ds, "prox", k=k_windows)
spec = window_spec(ds, "prox", k=k_windows)
print(f"{k_windows} equal-count windows over weights "
      f"[{spec.boundaries[0]:.1f}, {spec.boundaries[-1]:.1f}]:")
a, b = binarize_layer(ds, "face"), binarize_layer(ds, "calls")
for w, window in enumerate(windows):
    weights = [ds.layers["prox"][p] for p in window.pairs]
    rep = triad_indices(a, b, window, n_realizations=300, seed=41 + w)
    print(f"  window {w}: {len(window):3d} edges, weights "
          f"[{min(weights):5.1f}, {max(weights):5.1f}]  "
          f"m_bar+s_bar = {rep.m_bar + rep.s_bar:+.3f}  "
          f"(m {rep.m_bar:+.3f}, s {rep.s_bar:+.3f})")
print()
print("Only the strongest-signal window plays a role in the face-calls")
print("relation; weaker windows are indistinguishable from noise.")
