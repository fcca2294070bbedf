# The deceptive chain: a cheap plant for watching the deme strip work (and stall).
import numpy as np

from demewalk.evolution import Budget, DemeConfig, Engine, run
from demewalk.genome import MutationParams
from demewalk.plant.chain import ChainLandscape, genes, grid_oracle, local_search, superior_count
from demewalk.scoring import ChainTask

land = ChainLandscape()
for n in (1, 2, 3):
    o = grid_oracle(n, land)
    rng = np.random.default_rng(n)
    finals = np.array([local_search(n, rng, 100 * n, land) for _ in range(200)])
    wide = np.mean(np.abs(finals + 1) < 0.75)
    print(f"{n} genes: grid optimum {o['argmax']}  local search ends wide {wide:.2f}")

# multi-deme run: watch max-deme-ever and what the frontier deme carries
task = ChainTask()
eng = Engine(task, DemeConfig(rho=0.95), MutationParams(), 0)


def show(pop, rec):
    if rec["generation"] % 500 == 0:
        top = max(i.deme for i in pop.individuals)
        lead = [i for i in pop.individuals if i.deme == top]
        g = np.array([genes(i.genotype, top + 2) for i in lead])
        print(rec["generation"], rec["occupancy"][:8], "frontier genes (median |g|):",
              " ".join(f"{v:.1e}" for v in np.median(np.abs(g), axis=0)))


res = run(eng, Budget(generations=4000), on_generation=show)
best = max(res.state.individuals, key=lambda i: (i.deme, i.last_score))
print("reached deme", res.state.max_deme_ever, "superior genes", superior_count(best.genotype, best.deme + 1))

# The next exposed gene is tiny: while unexposed it drifts under w*10^r with
# E[r] = -0.1, so its magnitude shrinks and selection cannot see it any more.
