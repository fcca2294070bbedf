# The controller schedule and the suggested walk it deviates from.
import numpy as np

from demewalk.neural import build_schedule, blend
from demewalk.scoring import timeline_for
from demewalk.trajectory import sample, suggested_com

sched = build_schedule()
print("slices", sched.slice_count, "networks", sched.net_count)
for s, (net, mode) in enumerate(sched.slice_map):
    print(f"slice {s:2d}  t={s * 0.1:.1f}s  net {net:2d}  {mode}")

# cross-fade around the 0.5 s boundary
for t in (0.47, 0.48, 0.49, 0.50, 0.51, 0.52):
    (a, wa), (b, wb) = blend(sched, t)
    print(f"t={t:.2f}  slice {a} x {wa:.2f}  +  slice {b} x {wb:.2f}")

# what each deme is asked to do
for k in (0, 1, 5, 14, 15, 18):
    tl = timeline_for(k)
    print(f"deme {k:2d}: controlled {tl.controlled:.1f}s inhibited {tl.inhibited:.1f}s balance {tl.balance:.1f}s")

joints, com = sample(340, 0.01)
print("COM at 3.4 s:", com[-1], " coast speed:", suggested_com(2.0)[1])
print("hip swing range:", np.ptp(joints[:, 0]))
