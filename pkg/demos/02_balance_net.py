# Standing still: servo gains alone let the biped fold; the balance net holds it.
import os

import numpy as np

from demewalk.config import load_config
from demewalk.neural import Network

here = os.path.dirname(os.path.abspath(__file__))
cfg = load_config(os.path.join(here, "..", "configs", "reference.json"))
bt = cfg.balance_task()
net, digest = cfg.load_balance_net()
print("weights sha256", digest[:16])

zero = Network.zeros(net.spec, net.gamma)
print("zero net upright (s):   ", bt.validate(zero, 99))
print("trained net upright (s):", bt.validate(net, 99))

# one trial in detail: pitch errors accumulated over the hold
m = bt.trial(net, 5)
print("t_alive", m.t_alive, "E_orient", round(m.E_orient, 4), "E_support", round(m.E_support, 4))
