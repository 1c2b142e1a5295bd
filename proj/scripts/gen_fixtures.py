#!/usr/bin/env python3
"""Generates the committed test fixtures.

Outputs (all under tests/fixtures/):
  api/     -- recorded archive responses for a paginated PSR fetch
  afds/    -- 60 synthetic raw AFD products for filter conformance
  corpus/  -- 200-sample evaluation corpus plus a predictions file

Deterministic: re-running reproduces every file byte for byte.
"""

import json
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"


def fnv1a(data: str) -> int:
    h = 1469598103934665603
    for b in data.encode():
        h ^= b
        h = (h * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h


def fixture_file_name(path: str) -> str:
    sanitized = "".join(c if (c.isalnum() or c == "_") else "_" for c in path)
    sanitized = sanitized[:80]
    return f"{sanitized}.{fnv1a(path):016x}.body"


def write_response(directory: pathlib.Path, path: str, body: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / fixture_file_name(path)).write_text(body)


# --- api/ ------------------------------------------------------------------

AFD_HEADER = """\
000
FXUS65 KPSR {ddhhmm}
AFDPSR

Area Forecast Discussion
National Weather Service Phoenix AZ
{clock} {ampm} MST {wday} Jan {day} 2025

"""

AFD_BODIES = [
    ".SYNOPSIS...\nHigh pressure will remain in control across the region "
    "with dry weather and light winds expected through midweek. The ridge "
    "holds over Arizona while a weak trough brushes the Pacific Northwest.\n\n"
    "&&\n\n.DISCUSSION...\nTemperatures run a few degrees above normal each "
    "afternoon under the ridge.\n\n$$\n",
    ".SYNOPSIS...\nA trough digs into the Great Basin tonight bringing gusty "
    "winds to the lower deserts. High pressure rebuilds over the Southwest "
    "by Tuesday with a warming and drying trend into midweek.\n\n$$\n",
    ".SYNOPSIS...\nLow pressure over the eastern Pacific keeps a cooler "
    "airmass in place. The ridge stays suppressed to the south while the "
    "trough axis crosses Arizona Tuesday with breezy conditions.\n\n$$\n",
]

PSR_PRODUCTS = [
    # (id, weekday name, day, clock, am/pm, body index)
    ("202501061134-KPSR-AFDPSR", "Mon", 6, "434", "AM", 0),
    ("202501062330-KPSR-AFDPSR", "Mon", 6, "430", "PM", 1),
    ("202501071129-KPSR-AFDPSR", "Tue", 7, "429", "AM", 2),
    ("202501072331-KPSR-AFDPSR", "Tue", 7, "431", "PM", 0),
    ("202501081132-KPSR-AFDPSR", "Wed", 8, "432", "AM", 1),
]


def gen_api() -> None:
    api = FIXTURES / "api"
    base = "/list.json?pil=AFDPSR&sdate=2025-01-06&edate=2025-01-08&page="
    page1 = {
        "products": [{"id": pid} for pid, *_ in PSR_PRODUCTS[:3]],
        "next_page": 2,
    }
    page2 = {"products": [{"id": pid} for pid, *_ in PSR_PRODUCTS[3:]]}
    write_response(api, base + "1", json.dumps(page1))
    write_response(api, base + "2", json.dumps(page2))
    for pid, wday, day, clock, ampm, body in PSR_PRODUCTS:
        hour = int(clock[:-2]) % 12 + (12 if ampm == "PM" else 0)
        text = AFD_HEADER.format(
            ddhhmm=f"{day:02d}{hour + 7:02d}{clock[-2:]}",
            clock=clock,
            ampm=ampm,
            wday=wday,
            day=day,
        ) + AFD_BODIES[body]
        write_response(api, f"/product/{pid}.txt", text)


# --- afds/ -----------------------------------------------------------------

INCLUDE_SENTENCES = [
    "High pressure will remain in control across the forecast area with dry and quiet weather expected through the middle of the week",
    "A trough digs into the {region} bringing gusty winds and a reinforcing shot of cooler air behind the front",
    "The ridge builds back over the {region} with a steady warming trend and mostly clear skies each afternoon",
    "Low pressure deepens over the {region} spreading widespread rain and isolated thunderstorms across the area tonight",
    "A cold front crosses the region {weekday_in} with falling temperatures and a gusty northwest wind developing behind it",
    "The upper low lingers near the {region} keeping unsettled weather and scattered showers in the forecast",
    "Ridging aloft strengthens over the {region} which will bring warmer afternoons and light winds through the period",
]

NOISE_SENTENCES = [
    "Winds stay light and variable overnight with patchy fog possible in sheltered valleys toward daybreak",
    "Overnight lows settle into the middle 30s with frost possible in the usual cold spots",
    "Skies remain mostly clear tonight with good radiational cooling expected",
    "Humidity values recover to around 40 percent overnight",
]

MODEL_SENTENCES = [
    "The ECMWF remains the deeper solution with the incoming trough while ensembles cluster closer to the ridge axis",
    "The NAM is a fast outlier with the low track so the blend leans toward the slower camp",
    "The HRRR keeps convection east of the area while the RAP hints at a stray shower near the ridge",
]

SYNOPTIC_SENTENCES = [
    "A shortwave trough pivots through the flow late tonight with little sensible weather",
    "A weak surface trough sharpens near the coast ahead of the next ridge",
    "The sfc high noses in from the north behind the departing low pressure system",
]

LEADTIME_SENTENCES = [
    "In the long term the ridge rebuilds with a warming trend into next weekend",
    "By Day 3 the pattern amplifies with a deeper trough digging into the basin",
]

FAR_WEEKDAY = [
    "High pressure returns {weekday_far} with a drying and warming trend to end the week",
    "The next trough arrives {weekday_far} bringing another round of mountain snow",
]

REGIONS = ["Great Basin", "Pacific Northwest", "Four Corners", "Desert Southwest",
           "Central Plains", "Gulf Coast", "Ohio Valley"]
WEEKDAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
# 2025-01-06 is a Monday; headers below are all issued Mon-Wed Jan 6-8.
HEADERS = [
    ("330 PM MST Mon Jan 6 2025", 0),
    ("434 AM MST Tue Jan 7 2025", 1),
    ("415 PM CST Tue Jan 7 2025", 1),
    ("400 AM EST Wed Jan 8 2025", 2),
]


def gen_afds() -> None:
    rng = random.Random(20250106)
    out = FIXTURES / "afds"
    out.mkdir(parents=True, exist_ok=True)
    for i in range(60):
        header, issue_wd = HEADERS[i % len(HEADERS)]
        near = WEEKDAYS[(issue_wd + rng.choice([1, 2])) % 7]
        far = WEEKDAYS[(issue_wd + rng.choice([3, 4, 5])) % 7]
        fill = lambda s: s.format(region=rng.choice(REGIONS),
                                  weekday_in=near, weekday_far=far)
        sentences = [fill(rng.choice(INCLUDE_SENTENCES)) for _ in range(rng.randint(2, 4))]
        sentences += [rng.choice(NOISE_SENTENCES) for _ in range(rng.randint(0, 2))]
        if rng.random() < 0.5:
            sentences.append(fill(rng.choice(MODEL_SENTENCES)))
        if rng.random() < 0.5:
            sentences.append(fill(rng.choice(SYNOPTIC_SENTENCES)))
        if rng.random() < 0.15:
            sentences.append(fill(rng.choice(LEADTIME_SENTENCES)))
        if rng.random() < 0.4:
            sentences.append(fill(rng.choice(FAR_WEEKDAY)))
        rng.shuffle(sentences)
        body = ". ".join(sentences) + "."
        text = (
            "000\nFXUS65 KXXX 070000\nAFDXXX\n\n"
            "Area Forecast Discussion\nNational Weather Service\n"
            f"{header}\n\n.SYNOPSIS...\n{body}\n\n$$\n"
        )
        (out / f"afd_{i:03d}.txt").write_text(text)


# --- corpus/ ---------------------------------------------------------------

STATIONS = [
    ("BOU", "denver-co", "Colorado", "the Rockies"),
    ("PSR", "phoenix-az", "Arizona", "the Desert Southwest"),
    ("TOP", "topeka-ks", "Kansas", "the Central Plains"),
    ("MFL", "miami-fl", "Florida", "the Southeast"),
    ("BOX", "boston-ma", "Maine", "New England"),
    ("SEW", "seattle-wa", "Washington", "the Pacific Northwest"),
    ("LOT", "chicago-il", "Illinois", "the Midwest"),
    ("HGX", "houston-tx", "Texas", "the Gulf Coast"),
    ("OKX", "new-york-city-ny", "New York", "the East Coast"),
    ("CAE", "columbia-sc", "South Carolina", "the Southeast"),
]

REF_TEMPLATES = [
    ("H", "High pressure will build over {near} through the period with dry "
          "weather and light winds expected for most locations each day."),
    ("H", "A ridge strengthens across {wide} bringing a warming trend and "
          "quiet conditions that should persist into the middle of the week."),
    ("L", "A trough will dig into {wide} tonight with gusty winds and a "
          "reinforcing shot of cooler air arriving behind the front."),
    ("L", "Low pressure deepens over {near} spreading widespread rain and a "
          "few embedded thunderstorms across the area through tomorrow."),
]

PRED_MATCH = {
    "H": "A ridge of high pressure holds over {wide} keeping the forecast "
         "dry with light winds and a slow warming trend through midweek.",
    "L": "A trough crosses {wide} with rain chances increasing and breezy "
         "northwest winds developing behind the cold front tonight.",
}

PRED_MISS = {
    "H": "A trough swings through {wide} with clouds increasing and a period "
         "of light rain possible before drier air returns late.",
    "L": "High pressure builds across {wide} with clearing skies and light "
         "winds expected as the airmass dries out through tomorrow.",
}

CYCLE_HOURS = [0, 6, 12, 18]


def gen_corpus() -> None:
    rng = random.Random(9001)
    out = FIXTURES / "corpus"
    out.mkdir(parents=True, exist_ok=True)
    samples, predictions = [], []
    n = 0
    day = 5
    while n < 200:
        day += 1
        for cycle in CYCLE_HOURS:
            for office, node, near, wide in STATIONS:
                if n >= 200:
                    break
                phase, ref = REF_TEMPLATES[rng.randrange(len(REF_TEMPLATES))]
                matched = rng.random() < 0.7
                pred = (PRED_MATCH if matched else PRED_MISS)[phase]
                forecast_id = f"2025-01-{day:02d}T{cycle:02d}Z"
                sample_id = f"{office}-{forecast_id}"
                minute = rng.randrange(0, 60)
                issue = f"2025-01-{day:02d}T{cycle:02d}:{minute:02d}:00Z"
                samples.append({
                    "sample_id": sample_id,
                    "station": office,
                    "issue_time": issue,
                    "forecast_id": forecast_id,
                    "reference_text": ref.format(near=near, wide=wide),
                })
                predictions.append({
                    "sample_id": sample_id,
                    "predicted_text": pred.format(near=near, wide=wide),
                })
                n += 1
            if n >= 200:
                break

    with open(out / "samples.jsonl", "w") as f:
        for s in samples:
            f.write(json.dumps(s) + "\n")
    with open(out / "predictions.jsonl", "w") as f:
        for p in predictions:
            f.write(json.dumps(p) + "\n")


if __name__ == "__main__":
    gen_api()
    gen_afds()
    gen_corpus()
    print("fixtures written under", FIXTURES)
