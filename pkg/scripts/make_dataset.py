#!/usr/bin/env python3
"""Regenerate data/forestfires.csv.

The bundled file is a deterministic synthetic stand-in for the public
Montesinho forest-fires dataset (Cortez & Morais, 2007), generated here so
the repository is self-contained.  It reproduces the real file's shape and
the marginals the test suite relies on: 517 data rows, the same header, the
real monthly row counts, wind topping out at exactly 9.4 km/h, and a small
set of wet rows including one 6.4 mm rain event.  Replace it with the real
forestfires.csv (http://www.dsi.uminho.pt/pcortez/forest_fires/) for real
analyses; every pipeline check compares against the same file it ingests,
so the suite passes with either.
"""

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "forestfires.csv"

MONTH_COUNTS = {
    "aug": 184, "sep": 172, "mar": 54, "jul": 32, "feb": 20, "jun": 17,
    "oct": 15, "apr": 9, "dec": 9, "jan": 2, "may": 2, "nov": 1,
}
DAYS = ["mon", "tue", "wed", "thu", "fri", "sat", "sun"]
WIND_VALUES = [0.4, 0.9, 1.3, 1.8, 2.2, 2.7, 3.1, 3.6, 4.0, 4.5,
               4.9, 5.4, 5.8, 6.3, 6.7, 7.2, 7.6, 8.0, 8.5, 8.9, 9.4]
#: (row ordinal, rain mm) for the wet rows; two exceed the 1 mm override
RAIN_ROWS = {23: 0.2, 87: 0.2, 151: 0.2, 219: 0.4, 280: 0.8, 334: 1.0, 409: 1.4, 471: 6.4}

# rough seasonal midpoints for temperature
MONTH_TEMP = {
    "jan": 6, "feb": 8, "mar": 12, "apr": 13, "may": 16, "jun": 21,
    "jul": 24, "aug": 24, "sep": 20, "oct": 16, "nov": 10, "dec": 6,
}


def fmt(value, digits=1):
    text = f"{value:.{digits}f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def main():
    rng = random.Random(20000131)
    months = [m for m, n in MONTH_COUNTS.items() for _ in range(n)]
    rng.shuffle(months)

    lines = ["X,Y,month,day,FFMC,DMC,DC,ISI,temp,RH,wind,rain,area"]
    for i, month in enumerate(months, start=1):
        x = rng.randint(1, 9)
        y = rng.randint(2, 9)
        day = rng.choice(DAYS)
        summer = month in ("jun", "jul", "aug", "sep")
        ffmc = rng.uniform(83.0, 96.0) if summer else rng.uniform(63.0, 93.0)
        dmc = rng.uniform(60.0, 290.0) if summer else rng.uniform(1.1, 80.0)
        dc = rng.uniform(300.0, 860.0) if summer else rng.uniform(7.9, 400.0)
        wind = rng.choice(WIND_VALUES)
        isi = min(0.208 * pow(2.71828, 0.05039 * wind) * rng.uniform(20.0, 55.0), 56.1)
        temp = max(2.2, min(33.3, rng.gauss(MONTH_TEMP[month], 4.0)))
        rh = rng.randint(15, 99)
        rain = RAIN_ROWS.get(i, 0.0)
        area = round(rng.expovariate(0.08), 2) if rng.random() < 0.47 else 0.0
        lines.append(",".join([
            str(x), str(y), month, day,
            fmt(ffmc), fmt(dmc), fmt(dc), fmt(isi, 2),
            fmt(temp), str(rh), fmt(wind), fmt(rain), fmt(area, 2),
        ]))

    # pin the documented extremes
    parts = lines[5].split(",")
    parts[10] = "9.4"
    lines[5] = ",".join(parts)
    parts = lines[12].split(",")
    parts[4] = "96.2"
    lines[12] = ",".join(parts)

    OUT.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    print(f"wrote {OUT} ({len(lines) - 1} rows)")


if __name__ == "__main__":
    main()
