# A short multi-deme biped run, then a replay of the best individual.
import os
import tempfile

import numpy as np

from demewalk.cli import main, replay_records
from demewalk.config import load_config
from demewalk.genome import load_genotype
from demewalk.scoring import trial_seeds

here = os.path.dirname(os.path.abspath(__file__))
config = os.path.join(here, "..", "configs", "reference.json")
out = tempfile.mkdtemp(prefix="demewalk-")

# ten generations; each one scores every individual on five jittered trials
main(["evolve", "--config", config, "--generations", "10", "--out", out])
with open(os.path.join(out, "generations.csv")) as fh:
    lines = fh.read().splitlines()
print(lines[0])
print("\n".join(l for l in lines[1:] if l.startswith("9,")))

bests = sorted(f for f in os.listdir(out) if f.startswith("best_deme_"))
g, meta = load_genotype(os.path.join(out, bests[-1]))
deme = meta["deme"]
task = load_config(config).build_task()
rows, m = replay_records(task, g, deme, trial_seeds(meta["seed"], 5)[0])
q = np.array([r["q"] for r in rows])
print(f"deme {deme}: {len(rows)} ticks, fell={m.fell}, score={task.score(m):.3f} (logged {meta['scores'][0]:.3f})")
print("hip x travel (m):", q[-1, 0] - q[0, 0])
