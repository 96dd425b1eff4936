"""Pure generative models and the net difference.

Three mechanisms wire a triplet of networks on a shared node set:

- uncorrelated: the conditioning layer C is independent of A and B,
- mediated:     every edge of C also sits in A and B (C underpins them),
- suppression:  B picks up pairs lying in exactly one of A and C.

The net difference delta = NJ_p(A,B|C) - NJ(A,B) separates the three:
independent C gives delta ~ 0, a mediator gives delta < 0, a suppressor
gives delta > 0. This script reproduces those signatures at N=50, p=0.5
(q=1) with 1000 realizations each, and compares the ensemble means with
the exact per-pair probability oracle.

CLI equivalent:
    netriad simulate --model mediated -N 50 -p 0.5 --realizations 1000 \
        --seed 7 --format csv --output mediated.csv
"""

import numpy as np

from netriad import (GenParams, delta, generate, histogram, nj, nj_partial,
                     pair_expectation, summarize)

REALIZATIONS = 1000
SEED = 7


def run_model(model, **kwargs):
    params = GenParams(n_nodes=50, p=0.5, q=1.0, model=model, **kwargs)
    njs, njps, deltas = [], [], []
    for r in range(REALIZATIONS):
        t = generate(params, np.random.SeedSequence(SEED, spawn_key=(r,)))
        njs.append(nj(t.a, t.b))
        njps.append(nj_partial(t.a, t.b, t.c))
        deltas.append(delta(t.a, t.b, t.c))
    return params, njs, njps, deltas


def ascii_histogram(values, bins=9, width=40):
    h = histogram(values, bins=bins)
    peak = max(h.counts) or 1
    lines = []
    for k, count in enumerate(h.counts):
        bar = "#" * int(round(width * count / peak))
        lines.append(f"  [{h.bin_edges[k]:+.3f}, {h.bin_edges[k + 1]:+.3f})"
                     f" {bar} {count}")
    return "\n".join(lines)


for model in ("uncorrelated", "mediated", "suppression"):
    params, njs, njps, deltas = run_model(model)
    oracle = pair_expectation(params)
    s_nj, s_njp, s_d = summarize(njs), summarize(njps), summarize(deltas)
    print(f"=== {model} (N=50, p=0.5, q=1, {REALIZATIONS} realizations) ===")
    print(f"  NJ    mean {s_nj.mean:.4f}  (oracle {oracle.exp_nj:.4f})")
    print(f"  NJ_p  mean {s_njp.mean:.4f}  (oracle {oracle.exp_nj_partial:.4f})")
    print(f"  delta mean {s_d.mean:+.4f}  (oracle {oracle.exp_delta:+.4f}),"
          f" std {s_d.std:.4f}")
    print("  P(delta):")
    print(ascii_histogram(deltas))
    print()

print("The three histograms live on disjoint delta ranges: the sign of a")
print("single measurement already hints at the role the third layer plays.")
