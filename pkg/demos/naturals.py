"""Eventually periodic subsets of (N, +), progressions, and a bounded refutation."""

from semisize import EventuallyPeriodicSet, ep_classify, factorial_example_window, find_ap, pws_window_falsify
from semisize.natsets import ep_window_scan

# 1 mod 3: bounded gaps, no long runs
E = EventuallyPeriodicSet(3, 0, {1})
print(ep_classify(E), ep_window_scan(E)["window"])

# residues 2, 3 mod 5 from 20 on, nothing before
E = EventuallyPeriodicSet(5, 20, {2, 3})
a, d = find_ap(E, 6)
print("seven terms:", [a + k * d for k in range(7)])

# a finite set is small in every sense
print(ep_classify(EventuallyPeriodicSet(4, 10, set(), {2, 3})))

# blocks n!, n!+n, ..., n!+n^2: arbitrarily long structured stretches, yet the
# gaps between blocks grow too fast for piecewise syndeticity
print(factorial_example_window(130).elements())
W = factorial_example_window(100_000)
print("refuted at N=1e5, k=10, m=100:", pws_window_falsify(W, 10, 100))
