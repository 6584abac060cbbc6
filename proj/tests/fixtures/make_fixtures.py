"""Regenerates the bundled synthetic fixture CSVs. Deterministic."""
import numpy as np

rng = np.random.default_rng(20240517)

# quarterly "inflation" series 1998Q1..2023Q4 (104 quarters): persistent AR(1)
# around 2 with a late-sample surge
n = 104
y = np.empty(n)
y[0] = 2.0
for t in range(1, n):
    surge = 4.0 if 96 <= t <= 101 else 0.0
    y[t] = 0.45 + 0.78 * y[t-1] + surge * 0.35 + rng.normal(0, 0.45)

def qlabel(i):  # i = quarters since 1998Q1
    return f"{1998 + i // 4}Q{i % 4 + 1}"

with open("realizations.csv", "w") as f:
    f.write("period,value\n")
    for i, v in enumerate(y):
        f.write(f"{qlabel(i)},{repr(round(float(v), 6))}\n")

# two forecast panels, origins 2014Q1..2023Q4 (indices 64..103), horizons 0..12
origins = range(64, 104)
horizons = range(13)

def write_panel(name, maker):
    with open(name, "w") as f:
        f.write("origin,horizon,value\n")
        for o in origins:
            for h in horizons:
                t = o + h
                f.write(f"{qlabel(o)},{h},{repr(round(float(maker(o, h, t)), 6))}\n")

# modelA: close to truth where the target is observed, anchored to 2 beyond
write_panel("modelA.csv",
            lambda o, h, t: (y[t] + rng.normal(0, 0.25 + 0.05 * h)) if t < n
            else 2.0 + rng.normal(0, 0.3))
# modelB: sticky no-change forecaster with drift toward 2
write_panel("modelB.csv",
            lambda o, h, t: y[o-1] + (2.0 - y[o-1]) * min(1.0, 0.06 * h)
            + rng.normal(0, 0.1))

# survey fixture: May/Aug/Nov records for 2004..2023 plus a few off-map months
with open("survey.csv", "w") as f:
    f.write("pub_year,pub_month,target_year,value\n")
    for year in range(2004, 2024):
        i_q4 = (year - 1998) * 4 + 3
        truth = y[i_q4] if i_q4 < n else 2.0
        f.write(f"{year},8,{year},{repr(round(float(truth + rng.normal(0, 0.4)), 6))}\n")
        f.write(f"{year},5,{year},{repr(round(float(truth + rng.normal(0, 0.6)), 6))}\n")
        f.write(f"{year-1},11,{year},{repr(round(float(truth + rng.normal(0, 0.9)), 6))}\n")
        f.write(f"{year},2,{year},{repr(round(float(truth + rng.normal(0, 0.7)), 6))}\n")
