"""Disentangling hidden mechanisms with selective rewiring.

Selective rewiring relocates only the B-edges implicated in one
mechanism: edges in the symmetric difference of A and C (suppression
removal, mode S) or edges in both A and C (mediation removal, mode M).
Comparing the rewired net differences against the same treatment of a
fully randomized B separates genuine structure from finite-size residue,
and the normalized indices (m_bar, s_bar) place the triplet on a
mediation/suppression plane.

Two contrasting cases:
 1. an independent triplet, where both indices vanish and significance
    stays low (everything is finite-size residue), and
 2. a mediated triplet, where suppression removal leaves delta untouched
    but mediation removal shifts it dramatically.

CLI equivalent:
    netriad triad --model mediated -N 300 -p 0.1 --realizations 500 \
        --seed 21 --c-only --format json
"""

from netriad import GenParams, generate, histogram, summarize, triad_indices

REALIZATIONS = 300


def describe(title, rep):
    print(f"=== {title} ===")
    print(f"  delta0 = {rep.delta0:+.4f}")
    for name, ens in (("delta_S ", rep.delta_s), ("delta_M ", rep.delta_m),
                      ("delta_RS", rep.delta_rs), ("delta_RM", rep.delta_rm)):
        s = summarize(ens)
        print(f"  {name} mean {s.mean:+.4f}  std {s.std:.4f}")
    print(f"  m_bar = {rep.m_bar:+.4f}   s_bar = {rep.s_bar:+.4f}")
    print(f"  sigma_S = {rep.sigma_s:.2f}  sigma_M = {rep.sigma_m:.2f}"
          f"  (skipped {rep.skipped})")
    print()


t = generate(GenParams(n_nodes=300, p=0.3, model="uncorrelated"), 900)
rep = triad_indices(t.a, t.b, t.c, n_realizations=REALIZATIONS, seed=901)
describe("independent triplet (N=300, p=0.3)", rep)
print("Selective and baseline ensembles overlap: the residual mediation &")
print("suppression is what pure chance produces at this size.")
overlap = histogram(list(rep.delta_s) + list(rep.delta_rs), bins=12)
print(f"  pooled delta_S/delta_RS range: "
      f"[{overlap.bin_edges[0]:+.4f}, {overlap.bin_edges[-1]:+.4f}]")
print()

t = generate(GenParams(n_nodes=300, p=0.1, model="mediated"), 902)
rep = triad_indices(t.a, t.b, t.c, n_realizations=REALIZATIONS, seed=903)
describe("mediated triplet (N=300, p=0.1)", rep)
print("Here mediation removal (mode M) pushes delta far above delta0 while")
print("suppression removal barely moves it: the conditioning layer is a")
print("mediator, quantified by m_bar with significance sigma_S.")
