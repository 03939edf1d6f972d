"""Does the satellite backhaul earn its keep as the outage area grows?

Sweeps the disaster radius for three infrastructure variants (satellite at
500 km, satellite at 1500 km, no satellite) with the stratospheric platform
at 10 km, then prints coverage side by side. The satellite column should
pull ahead once the radius reaches a couple dozen kilometers.
"""

from pdcsim import ScenarioConfig, Setup, run_sweep

N_REAL = 2000
RADII = [1000.0, 5000.0, 10_000.0, 20_000.0]

variants = {
    "sat @ 500 km": {"h_s_m": 500_000.0},
    "sat @ 1500 km": {"h_s_m": 1_500_000.0},
    "no satellite": {"satellite_enabled": False},
}

columns = {}
for name, kw in variants.items():
    base = ScenarioConfig(setup=Setup.LARGE, h_h_m=10_000.0,
                          n_realizations=N_REAL, master_seed=1, **kw)
    columns[name] = run_sweep(base, {"r_d_m": RADII})

print(f"{'r_d [km]':>9s}" + "".join(f"  {name:>14s}" for name in variants))
for i, r_d in enumerate(RADII):
    cells = "".join(f"  {columns[name][i].estimate.p_hat:14.3f}"
                    for name in variants)
    print(f"{r_d / 1000:9.1f}{cells}")

print("\npath mix at the largest radius (satellite @ 500 km):")
shares = columns["sat @ 500 km"][-1].estimate.path_shares
for label, share in sorted(shares.items(), key=lambda kv: -kv[1]):
    if share > 0:
        print(f"  {label:14s} {share:6.1%}")
