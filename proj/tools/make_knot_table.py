#!/usr/bin/env python3
"""Regenerate data/knots10.csv and data/known.csv from the KnotInfo tables.

Usage: make_knot_table.py [--outdir data]

Requires the `database_knotinfo` package (pip install database_knotinfo).
"""
import argparse
import csv
import json
import os

import database_knotinfo

# Knots reached by band moves in certs.json that have fewer than ten
# crossings or are not prime.
KNOWN_TARGETS = [
    "3_1", "5_2", "6_1", "6_2", "7_4", "8_6", "8_7", "8_8", "8_9", "8_10",
    "8_11", "8_14", "8_16", "8_20", "9_3", "9_5", "9_6", "9_8", "9_9",
    "9_21", "9_22", "9_25", "9_26", "9_27", "9_29", "9_31", "9_32", "9_35",
    "9_41", "9_44", "9_45", "11n_83",
]
# K # -K is always slice.
COMPOSITES = ["3_1#-3_1", "5_2#-5_2"]


def pd_to_text(pd):
    return ",".join("X[%s]" % ",".join(str(x) for x in t) for t in pd)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="data")
    args = ap.parse_args()

    csv.field_size_limit(10**9)
    path = os.path.join(os.path.dirname(database_knotinfo.__file__),
                        "csv_data", "knotinfo_data_complete.csv")
    with open(path, newline="") as f:
        rows = {r["name"]: r for r in csv.DictReader(f, delimiter="|")}

    with open(os.path.join(args.outdir, "knots10.csv"), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["name", "pd_code", "signature", "arf", "determinant",
                    "slice", "alternating"])
        for i in range(1, 166):
            r = rows["10_%d" % i]
            w.writerow([r["name"], pd_to_text(json.loads(r["pd_notation"])),
                        r["signature"], r["arf_invariant"], r["determinant"],
                        "Y" if r["smooth_four_genus"] == "0" else "N",
                        r["alternating"]])

    with open(os.path.join(args.outdir, "known.csv"), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["name", "gamma4"])
        for name in KNOWN_TARGETS:
            w.writerow([name, rows[name]["smooth_4d_crosscap_number"]])
        for name in COMPOSITES:
            w.writerow([name, 1])


if __name__ == "__main__":
    main()
