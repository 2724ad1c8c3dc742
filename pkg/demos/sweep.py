"""Run theorem sweeps programmatically and read the report."""

from semisize.verify import SweepSpec, render_text, run_sweep

spec = SweepSpec(orders=(1, 2, 3), theorems=("uli", "crt", "eq", "rps", "cpfs", "mesh_involution"))
records = run_sweep(spec)
print(render_text(records))

# random semigroups above the exhaustive bound, same seed, same bytes
spec = SweepSpec(orders=(5,), random_samples=3, random_instances=50, seed=7, theorems=("sup", "dual"))
print(render_text(run_sweep(spec)))
