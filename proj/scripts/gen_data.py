#!/usr/bin/env python3
"""Regenerates data/hierarchy.txt and data/stations.txt.

The hierarchy has three scales: large regions (including the stop
nodes), the 50 states at medium scale, and station cities plus a few
sub-state regions at small scale. Aliases must stay globally unique
after case folding; collisions between city names are resolved by
qualifying the rarer one with its state.
"""

import sys

# id -> (canonical, aliases, stop)
LARGE = {
    # Non-stop regions.
    "rockies": ("The Rockies", ["Rockies", "The Rockies", "Rocky Mountains"], 0),
    "southwest-us": ("Southwest US", ["Southwest", "Desert Southwest",
                                      "southwestern United States", "southwestern US"], 0),
    "southeast-us": ("Southeast US", ["Southeast", "southeastern United States",
                                      "southeastern US"], 0),
    "northeast-us": ("Northeast US", ["Northeast", "northeastern United States",
                                      "northeastern US"], 0),
    "new-england": ("New England", ["New England"], 0),
    "mid-atlantic": ("Mid-Atlantic", ["Mid-Atlantic", "Mid Atlantic"], 0),
    "pacific-northwest": ("Pacific Northwest", ["Pacific Northwest", "Northwest",
                                                "northwestern United States"], 0),
    "west-coast": ("West Coast", ["West Coast"], 0),
    "east-coast": ("East Coast", ["East Coast", "Eastern Seaboard"], 0),
    "gulf-coast": ("Gulf Coast", ["Gulf Coast", "Gulf States"], 0),
    "great-basin": ("Great Basin", ["Great Basin"], 0),
    "four-corners": ("Four Corners", ["Four Corners"], 0),
    "tennessee-valley": ("Tennessee Valley", ["Tennessee Valley"], 0),
    "mississippi-valley": ("Mississippi Valley", ["Mississippi Valley"], 0),
    "high-plains": ("High Plains", ["High Plains"], 0),
    "northern-plains": ("Northern Plains", ["Northern Plains"], 0),
    "southern-plains": ("Southern Plains", ["Southern Plains"], 0),
    "deep-south": ("Deep South", ["Deep South"], 0),
    "intermountain-west": ("Intermountain West", ["Intermountain West"], 0),
    # Stop nodes; aliases reproduce the published stop list verbatim.
    "canada": ("Canada", ["Canada"], 1),
    "eastern-canada": ("Eastern Canada", ["Eastern Canada"], 1),
    "central-canada": ("Central Canada", ["Central Canada"], 1),
    "western-canada": ("Western Canada", ["Western Canada"], 1),
    "conus": ("CONUS", ["CONUS"], 1),
    "eastern-us": ("Eastern US", ["Eastern CONUS", "Eastern U.S.",
                                  "Eastern United States", "Eastern U", "Eastern US"], 1),
    "western-us": ("Western US", ["Western CONUS", "Western U.S.",
                                  "Western United States", "Western U", "Western US"], 1),
    "central-us": ("Central US", ["Central CONUS", "Central U.S.",
                                  "Central United States", "Central U", "Central US"], 1),
    "central-plains": ("Central Plains", ["Central Plains"], 1),
    "ohio-valley": ("Ohio Valley", ["Ohio Valley"], 1),
    "great-lakes": ("Great Lakes", ["Great Lakes"], 1),
    "midwest": ("Midwest", ["Midwest"], 1),
    "the-plains": ("The Plains", ["The Plains"], 1),
}

# All region roots sit under CONUS (or Canada) so the graph is connected;
# CONUS is a stop node so it never acts as a common relative.
LARGE_PARENTS = {rid: "conus" for rid in LARGE}
LARGE_PARENTS["canada"] = ""
LARGE_PARENTS["conus"] = ""
LARGE_PARENTS["eastern-canada"] = "canada"
LARGE_PARENTS["central-canada"] = "canada"
LARGE_PARENTS["western-canada"] = "canada"

# state id -> (name, [region parents])
STATES = {
    "alabama": ("Alabama", ["deep-south", "southeast-us", "gulf-coast"]),
    "alaska": ("Alaska", []),
    "arizona": ("Arizona", ["southwest-us", "four-corners"]),
    "arkansas": ("Arkansas", ["mississippi-valley", "deep-south"]),
    "california": ("California", ["west-coast"]),
    "colorado": ("Colorado", ["rockies", "four-corners", "high-plains"]),
    "connecticut": ("Connecticut", ["new-england", "northeast-us"]),
    "delaware": ("Delaware", ["mid-atlantic", "east-coast"]),
    "florida": ("Florida", ["southeast-us", "gulf-coast"]),
    "georgia": ("Georgia", ["southeast-us", "deep-south"]),
    "hawaii": ("Hawaii", []),
    "idaho": ("Idaho", ["rockies", "pacific-northwest", "intermountain-west"]),
    "illinois": ("Illinois", ["midwest", "great-lakes", "mississippi-valley"]),
    "indiana": ("Indiana", ["midwest", "ohio-valley", "great-lakes"]),
    "iowa": ("Iowa", ["midwest", "mississippi-valley"]),
    "kansas": ("Kansas", ["central-plains", "high-plains"]),
    "kentucky": ("Kentucky", ["ohio-valley", "tennessee-valley"]),
    "louisiana": ("Louisiana", ["gulf-coast", "deep-south", "mississippi-valley"]),
    "maine": ("Maine", ["new-england", "northeast-us"]),
    "maryland": ("Maryland", ["mid-atlantic", "east-coast"]),
    "massachusetts": ("Massachusetts", ["new-england", "northeast-us"]),
    "michigan": ("Michigan", ["great-lakes", "midwest"]),
    "minnesota": ("Minnesota", ["midwest", "northern-plains"]),
    "mississippi": ("Mississippi", ["deep-south", "gulf-coast", "mississippi-valley"]),
    "missouri": ("Missouri", ["midwest", "mississippi-valley", "central-plains"]),
    "montana": ("Montana", ["rockies", "northern-plains"]),
    "nebraska": ("Nebraska", ["central-plains", "high-plains"]),
    "nevada": ("Nevada", ["great-basin", "intermountain-west"]),
    "new-hampshire": ("New Hampshire", ["new-england", "northeast-us"]),
    "new-jersey": ("New Jersey", ["mid-atlantic", "east-coast", "northeast-us"]),
    "new-mexico": ("New Mexico", ["southwest-us", "four-corners", "rockies"]),
    "new-york": ("New York", ["northeast-us", "mid-atlantic", "east-coast"]),
    "north-carolina": ("North Carolina", ["southeast-us", "east-coast", "mid-atlantic"]),
    "north-dakota": ("North Dakota", ["northern-plains", "midwest"]),
    "ohio": ("Ohio", ["ohio-valley", "great-lakes", "midwest"]),
    "oklahoma": ("Oklahoma", ["southern-plains", "high-plains"]),
    "oregon": ("Oregon", ["pacific-northwest", "west-coast"]),
    "pennsylvania": ("Pennsylvania", ["mid-atlantic", "northeast-us"]),
    "rhode-island": ("Rhode Island", ["new-england", "northeast-us"]),
    "south-carolina": ("South Carolina", ["southeast-us", "east-coast"]),
    "south-dakota": ("South Dakota", ["northern-plains", "high-plains", "midwest"]),
    "tennessee": ("Tennessee", ["tennessee-valley", "deep-south"]),
    "texas": ("Texas", ["southern-plains", "gulf-coast", "southwest-us"]),
    "utah": ("Utah", ["great-basin", "rockies", "four-corners", "intermountain-west"]),
    "vermont": ("Vermont", ["new-england", "northeast-us"]),
    "virginia": ("Virginia", ["mid-atlantic", "east-coast", "southeast-us"]),
    "washington": ("Washington", ["pacific-northwest", "west-coast"]),
    "west-virginia": ("West Virginia", ["mid-atlantic", "ohio-valley"]),
    "wisconsin": ("Wisconsin", ["midwest", "great-lakes"]),
    "wyoming": ("Wyoming", ["rockies", "high-plains", "intermountain-west"]),
    "puerto-rico": ("Puerto Rico", []),
}

# office -> (city, state-id, extra city aliases)
# City aliases must stay unique; qualified forms resolve the collisions
# between Charleston/Jackson/Wilmington pairs.
STATIONS = [
    ("CAR", "Caribou", "maine", []),
    ("GYX", "Gray", "maine", ["Portland Maine"]),
    ("BOX", "Boston", "massachusetts", []),
    ("BTV", "Burlington", "vermont", []),
    ("ALY", "Albany", "new-york", []),
    ("BGM", "Binghamton", "new-york", []),
    ("BUF", "Buffalo", "new-york", []),
    ("OKX", "New York City", "new-york", ["NYC"]),
    ("PHI", "Philadelphia", "pennsylvania", ["Mount Holly"]),
    ("PBZ", "Pittsburgh", "pennsylvania", []),
    ("CTP", "State College", "pennsylvania", []),
    ("LWX", "Washington DC", "maryland", ["Sterling"]),
    ("RNK", "Blacksburg", "virginia", []),
    ("AKQ", "Wakefield", "virginia", []),
    ("MHX", "Morehead City", "north-carolina", []),
    ("RAH", "Raleigh", "north-carolina", []),
    ("ILM", "Wilmington", "north-carolina", []),
    ("GSP", "Greenville", "south-carolina", ["Greer"]),
    ("CAE", "Columbia", "south-carolina", []),
    ("CHS", "Charleston", "south-carolina", []),
    ("ILN", "Wilmington Ohio", "ohio", []),
    ("CLE", "Cleveland", "ohio", []),
    ("RLX", "Charleston West Virginia", "west-virginia", []),
    ("FFC", "Atlanta", "georgia", ["Peachtree City"]),
    ("JAX", "Jacksonville", "florida", []),
    ("KEY", "Key West", "florida", []),
    ("MLB", "Melbourne", "florida", []),
    ("MFL", "Miami", "florida", []),
    ("TBW", "Tampa", "florida", ["Tampa Bay"]),
    ("TAE", "Tallahassee", "florida", []),
    ("BMX", "Birmingham", "alabama", []),
    ("HUN", "Huntsville", "alabama", []),
    ("MOB", "Mobile", "alabama", []),
    ("JAN", "Jackson", "mississippi", []),
    ("MEG", "Memphis", "tennessee", []),
    ("OHX", "Nashville", "tennessee", []),
    ("MRX", "Morristown", "tennessee", ["Knoxville"]),
    ("LZK", "Little Rock", "arkansas", []),
    ("SHV", "Shreveport", "louisiana", []),
    ("LCH", "Lake Charles", "louisiana", []),
    ("LIX", "New Orleans", "louisiana", []),
    ("BRO", "Brownsville", "texas", []),
    ("CRP", "Corpus Christi", "texas", []),
    ("EWX", "San Antonio", "texas", ["Austin"]),
    ("HGX", "Houston", "texas", []),
    ("FWD", "Fort Worth", "texas", ["Dallas"]),
    ("SJT", "San Angelo", "texas", []),
    ("LUB", "Lubbock", "texas", []),
    ("AMA", "Amarillo", "texas", []),
    ("MAF", "Midland", "texas", []),
    ("EPZ", "El Paso", "texas", []),
    ("ABQ", "Albuquerque", "new-mexico", []),
    ("OUN", "Norman", "oklahoma", ["Oklahoma City"]),
    ("TSA", "Tulsa", "oklahoma", []),
    ("DTX", "Detroit", "michigan", []),
    ("GRR", "Grand Rapids", "michigan", []),
    ("APX", "Gaylord", "michigan", []),
    ("MQT", "Marquette", "michigan", []),
    ("IWX", "Northern Indiana", "indiana", []),
    ("IND", "Indianapolis", "indiana", []),
    ("LMK", "Louisville", "kentucky", []),
    ("JKL", "Jackson Kentucky", "kentucky", []),
    ("PAH", "Paducah", "kentucky", []),
    ("ILX", "Lincoln", "illinois", []),
    ("LOT", "Chicago", "illinois", []),
    ("DVN", "Davenport", "iowa", ["Quad Cities"]),
    ("DMX", "Des Moines", "iowa", []),
    ("ARX", "La Crosse", "wisconsin", []),
    ("GRB", "Green Bay", "wisconsin", []),
    ("MKX", "Milwaukee", "wisconsin", []),
    ("DLH", "Duluth", "minnesota", []),
    ("MPX", "Minneapolis", "minnesota", ["Twin Cities"]),
    ("FGF", "Grand Forks", "north-dakota", []),
    ("BIS", "Bismarck", "north-dakota", []),
    ("ABR", "Aberdeen", "south-dakota", []),
    ("FSD", "Sioux Falls", "south-dakota", []),
    ("UNR", "Rapid City", "south-dakota", []),
    ("LBF", "North Platte", "nebraska", []),
    ("GID", "Hastings", "nebraska", []),
    ("OAX", "Omaha", "nebraska", []),
    ("TOP", "Topeka", "kansas", []),
    ("ICT", "Wichita", "kansas", []),
    ("DDC", "Dodge City", "kansas", []),
    ("GLD", "Goodland", "kansas", []),
    ("EAX", "Kansas City", "missouri", ["Pleasant Hill"]),
    ("SGF", "Springfield", "missouri", []),
    ("LSX", "St. Louis", "missouri", ["Saint Louis"]),
    ("CYS", "Cheyenne", "wyoming", []),
    ("RIW", "Riverton", "wyoming", []),
    ("BOU", "Denver", "colorado", ["Boulder"]),
    ("GJT", "Grand Junction", "colorado", []),
    ("PUB", "Pueblo", "colorado", []),
    ("BYZ", "Billings", "montana", []),
    ("TFX", "Great Falls", "montana", []),
    ("MSO", "Missoula", "montana", []),
    ("GGW", "Glasgow", "montana", []),
    ("PIH", "Pocatello", "idaho", []),
    ("BOI", "Boise", "idaho", []),
    ("SLC", "Salt Lake City", "utah", []),
    ("FGZ", "Flagstaff", "arizona", []),
    ("PSR", "Phoenix", "arizona", []),
    ("TWC", "Tucson", "arizona", []),
    ("VEF", "Las Vegas", "nevada", []),
    ("LKN", "Elko", "nevada", []),
    ("REV", "Reno", "nevada", []),
    ("EKA", "Eureka", "california", []),
    ("STO", "Sacramento", "california", []),
    ("MTR", "San Francisco", "california", ["Monterey"]),
    ("HNX", "Hanford", "california", ["Fresno"]),
    ("LOX", "Los Angeles", "california", ["Oxnard"]),
    ("SGX", "San Diego", "california", []),
    ("SEW", "Seattle", "washington", []),
    ("OTX", "Spokane", "washington", []),
    ("PDT", "Pendleton", "oregon", []),
    ("PQR", "Portland", "oregon", []),
    ("MFR", "Medford", "oregon", []),
    ("SJU", "San Juan", "puerto-rico", []),
]

# small sub-state regions: id -> (name, [parents], aliases)
SUBREGIONS = {
    "front-range": ("Front Range", ["colorado"], ["Front Range"]),
    "central-valley": ("Central Valley", ["california"], ["Central Valley"]),
    "sierra-nevada": ("Sierra Nevada", ["california", "nevada"],
                      ["Sierra Nevada", "the Sierra"]),
    "cascades": ("Cascades", ["washington", "oregon"],
                 ["Cascades", "Cascade Range"]),
    "adirondacks": ("Adirondacks", ["new-york"], ["Adirondacks"]),
    "ozarks": ("Ozarks", ["missouri", "arkansas"], ["Ozarks"]),
    "black-hills": ("Black Hills", ["south-dakota"], ["Black Hills"]),
    "texas-panhandle": ("Texas Panhandle", ["texas"], ["Texas Panhandle"]),
}


def city_node_id(city, state):
    slug = "".join(c if c.isalnum() else "-" for c in city.lower())
    while "--" in slug:
        slug = slug.replace("--", "-")
    abbrev = {
        "maine": "me", "massachusetts": "ma", "vermont": "vt", "new-york": "ny",
        "pennsylvania": "pa", "maryland": "md", "virginia": "va",
        "north-carolina": "nc", "south-carolina": "sc", "ohio": "oh",
        "west-virginia": "wv", "georgia": "ga", "florida": "fl",
        "alabama": "al", "mississippi": "ms", "tennessee": "tn",
        "arkansas": "ar", "louisiana": "la", "texas": "tx", "new-mexico": "nm",
        "oklahoma": "ok", "michigan": "mi", "indiana": "in", "kentucky": "ky",
        "illinois": "il", "iowa": "ia", "wisconsin": "wi", "minnesota": "mn",
        "north-dakota": "nd", "south-dakota": "sd", "nebraska": "ne",
        "kansas": "ks", "missouri": "mo", "wyoming": "wy", "colorado": "co",
        "montana": "mt", "idaho": "id", "utah": "ut", "arizona": "az",
        "nevada": "nv", "california": "ca", "washington": "wa", "oregon": "or",
        "connecticut": "ct", "delaware": "de", "new-hampshire": "nh",
        "new-jersey": "nj", "rhode-island": "ri", "puerto-rico": "pr",
    }[state]
    return f"{slug.strip('-')}-{abbrev}"


def main():
    assert len(STATIONS) == 117, f"expected 117 stations, have {len(STATIONS)}"

    lines = ["# Spatial hierarchy: id|scale|canonical_name|parents|aliases|stop",
             "# Large-scale regions (stop nodes flagged 1)"]
    for rid, (name, aliases, stop) in LARGE.items():
        parents = LARGE_PARENTS.get(rid, "")
        lines.append(f"{rid}|L|{name}|{parents}|{','.join(aliases)}|{stop}")

    lines.append("# States (medium)")
    for sid, (name, parents) in STATES.items():
        lines.append(f"{sid}|M|{name}|{','.join(parents)}|{name}|0")

    lines.append("# Sub-state regions (small)")
    for rid, (name, parents, aliases) in SUBREGIONS.items():
        lines.append(f"{rid}|S|{name}|{','.join(parents)}|{','.join(aliases)}|0")

    lines.append("# Station cities (small)")
    station_lines = ["# office|city|state|hierarchy node"]
    seen_alias = set()
    for office, city, state, extra in STATIONS:
        node = city_node_id(city, state)
        aliases = [city] + extra
        for a in aliases:
            key = " ".join(a.lower().split())
            assert key not in seen_alias, f"alias collision: {a}"
            seen_alias.add(key)
        lines.append(f"{node}|S|{city}|{state}|{','.join(aliases)}|0")
        station_lines.append(f"{office}|{city}|{state}|{node}")

    with open("data/hierarchy.txt", "w") as f:
        f.write("\n".join(lines) + "\n")
    with open("data/stations.txt", "w") as f:
        f.write("\n".join(station_lines) + "\n")
    print(f"wrote {len(lines)} hierarchy lines, {len(STATIONS)} stations")


if __name__ == "__main__":
    sys.exit(main())
