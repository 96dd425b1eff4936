"""Multiplex edge lists: parsing, pairwise baselines, triad rotation.

Real multiplex datasets arrive as whitespace-separated edge lists
("layer node_i node_j [weight]"). This demo builds a synthetic
three-layer multiplex with planted structure, writes it to disk in that
format, parses it back, and then runs the two stages of a study:

 1. pairwise-null: is each pair of layers more similar than randomized
    layers of the same size? (If not, conditioning is moot.)
 2. triad rotation: for each layer in the conditioning role, compute the
    normalized mediation/suppression indices.

For a real dataset (for example a connectome multiplex or a social
multiplex), skip the synthesis step and point parse_multiplex at the
downloaded file.

CLI equivalents:
    netriad pairwise-null --input planted.edges --realizations 200 --seed 31
    netriad triad --input planted.edges --layers mono poly elec \
        --realizations 500 --seed 32
"""

import io
import itertools

import numpy as np

from netriad import (EdgeSet, MultiplexDataset, NodeUniverse, binarize_layer,
                     pairwise_null, parse_multiplex, serialize_multiplex,
                     triad_indices)
from netriad._sampling import uniform_edge_set

# --- synthesize a multiplex with a shared core and an xor coupling -------
rng = np.random.default_rng(99)
universe = NodeUniverse(120)


def er(p):
    return uniform_edge_set(universe, rng.binomial(universe.pair_count, p),
                            rng)


mono, poly, elec = er(0.05), er(0.05), er(0.05)
core = er(0.05)
mono, poly, elec = mono | core, poly | core, elec | core
xor_region = (mono ^ elec).to_indices()
poly = poly | EdgeSet.from_indices(universe,
                                   xor_region[rng.random(len(xor_region)) < 0.7])

names = tuple(f"v{k}" for k in range(universe.n_nodes))
dataset = MultiplexDataset(
    node_names=names,
    layers={name: {pair: 1.0 for pair in sorted(layer.pairs)}
            for name, layer in (("mono", mono), ("poly", poly),
                                ("elec", elec))})
text = serialize_multiplex(dataset)
print(f"serialized {sum(len(v) for v in dataset.layers.values())} records; "
      f"first lines:")
print("\n".join("  " + line for line in text.splitlines()[:3]))
print()

ds = parse_multiplex(io.StringIO(text))

# --- stage 1: are the layers related at all? ------------------------------
print("pairwise overlap vs randomized baseline (uniform resampling):")
for k, (la, lb) in enumerate(itertools.combinations(ds.layer_names, 2)):
    s = pairwise_null(binarize_layer(ds, la), binarize_layer(ds, lb),
                      n=200, seed=31 + k)
    gap = (s.observed_nj - s.null_mean) / s.null_std
    print(f"  {la:>4} vs {lb:<4}: observed {s.observed_nj:.4f}, "
          f"null {s.null_mean:.4f} +- {s.null_std:.4f}  ({gap:+.0f} sigma)")
print()

# --- stage 2: rotate the conditioning role --------------------------------
print("triad indices per conditioning role (500 rewirings each):")
layers = {name: binarize_layer(ds, name) for name in ds.layer_names}
rotation = [("elec", "mono", "poly"), ("mono", "poly", "elec"),
            ("poly", "elec", "mono")]
for k, (c, a, b) in enumerate(rotation):
    rep = triad_indices(layers[a], layers[b], layers[c],
                        n_realizations=500, seed=32 + k)
    print(f"  C={c:<5} delta0={rep.delta0:+.4f}  m_bar={rep.m_bar:+.3f} "
          f"s_bar={rep.s_bar:+.3f}  sigma_S={rep.sigma_s:5.1f} "
          f"sigma_M={rep.sigma_m:5.1f}")
print()
print("The xor-coupled layer ('elec') stands out in s_bar: it suppresses")
print("the mono-poly relation. The shared core shows up as mediation in")
print("every rotation.")
