"""Compute the fire-weather index chain and one day of code updates.

Run from the repository root: python3 demos/02_fire_weather_indices.py
"""

from fireweather.indices import (
    WeatherInputs,
    compute_chain,
    daily_update,
    ffmc_from_fmc,
    fmc_from_ffmc,
)

# Moisture content and its exact inverse.
ffmc = 85.0
fmc = fmc_from_ffmc(ffmc)
print(f"FFMC {ffmc} corresponds to a fuel moisture content of {fmc:.4f}%")
print(f"inverting recovers FFMC {ffmc_from_fmc(fmc):.6f}")

# From the three moisture codes plus wind to the full index record.
rec = compute_chain(ffmc=95.0, dmc=47.0, dc=321.0, wind=10.0)
print(
    f"\nFFMC=95 DMC=47 DC=321 wind=10 km/h -> "
    f"ISI={rec.isi:.2f} BUI={rec.bui:.2f} FWI={rec.fwi:.2f}"
)

# One day of weather rolls all three codes forward.
weather = WeatherInputs(temp=17.0, rh=42.0, wind=25.0, rain_24h=0.0)
ffmc2, dmc2, dc2 = daily_update(85.0, 6.0, 15.0, weather, "jul")
print(f"\nafter a dry July day: FFMC {ffmc2:.2f}, DMC {dmc2:.2f}, DC {dc2:.2f}")
