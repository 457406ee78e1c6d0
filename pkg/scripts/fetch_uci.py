#!/usr/bin/env python3
"""Download the five UCI benchmark datasets and normalize them to CSV.

Requires network access to archive.ics.uci.edu. Each dataset is written
to data/<name>.csv as a headerless numeric CSV with the class label in
the LAST column, which is what configs/benchmark.ini expects:

    ionosphere    351 x 34, 2 classes
    sonar         208 x 60, 2 classes
    dermatology   366 x 34, 6 classes ('?' marks missing age values)
    spectf         44 features, 2 classes (train and test parts merged)
    musk          476 x 166, 2 classes (molecule name columns dropped)

Usage: python3 scripts/fetch_uci.py [--out data/]
"""

from __future__ import annotations

import argparse
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

STATIC = "https://archive.ics.uci.edu/static/public"
LEGACY = "https://archive.ics.uci.edu/ml/machine-learning-databases"


def fetch(url: str) -> bytes:
    print(f"  fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read()


def fetch_zip_member(zip_url: str, member: str) -> str:
    blob = fetch(zip_url)
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        names = zf.namelist()
        matches = [n for n in names if n.endswith(member)]
        if not matches:
            raise FileNotFoundError(f"{member} not found in {zip_url}; has {names}")
        return zf.read(matches[0]).decode("utf-8", errors="replace")


def fetch_text(zip_url: str, member: str, legacy_url: str | None) -> str:
    try:
        return fetch_zip_member(zip_url, member)
    except Exception as exc:  # fall back to the legacy flat files
        if legacy_url is None:
            raise
        print(f"  static archive failed ({exc}); trying legacy URL")
        return fetch(legacy_url).decode("utf-8", errors="replace")


def clean_rows(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            rows.append([cell.strip() for cell in line.split(",")])
    return rows


def write_csv(rows: list[list[str]], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        for row in rows:
            fh.write(",".join(row) + "\n")
    print(f"  wrote {path} ({len(rows)} rows x {len(rows[0])} columns)")


def get_ionosphere(out: Path) -> None:
    text = fetch_text(f"{STATIC}/52/ionosphere.zip", "ionosphere.data",
                      f"{LEGACY}/ionosphere/ionosphere.data")
    rows = clean_rows(text)
    assert len(rows) == 351 and len(rows[0]) == 35, "unexpected ionosphere shape"
    write_csv(rows, out / "ionosphere.csv")


def get_sonar(out: Path) -> None:
    text = fetch_text(
        f"{STATIC}/151/connectionist+bench+sonar+mines+vs+rocks.zip",
        "sonar.all-data",
        f"{LEGACY}/undocumented/connectionist-bench/sonar/sonar.all-data")
    rows = clean_rows(text)
    assert len(rows) == 208 and len(rows[0]) == 61, "unexpected sonar shape"
    write_csv(rows, out / "sonar.csv")


def get_dermatology(out: Path) -> None:
    text = fetch_text(f"{STATIC}/33/dermatology.zip", "dermatology.data",
                      f"{LEGACY}/dermatology/dermatology.data")
    rows = clean_rows(text)
    assert len(rows) == 366 and len(rows[0]) == 35, "unexpected dermatology shape"
    write_csv(rows, out / "dermatology.csv")


def get_spectf(out: Path) -> None:
    rows = []
    for part in ("SPECTF.train", "SPECTF.test"):
        text = fetch_text(f"{STATIC}/96/spectf+heart.zip", part,
                          f"{LEGACY}/spect/{part}")
        rows.extend(clean_rows(text))
    # label is the first column in the originals; move it to the last
    rows = [row[1:] + [row[0]] for row in rows]
    assert len(rows[0]) == 45, "unexpected spectf width"
    write_csv(rows, out / "spectf.csv")


def get_musk(out: Path) -> None:
    text = fetch_text(f"{STATIC}/74/musk+version+1.zip", "clean1.data", None)
    rows = clean_rows(text)
    # drop molecule and conformation name columns; strip a trailing '.'
    # some distributions carry on the class value
    rows = [row[2:-1] + [row[-1].rstrip(".")] for row in rows]
    assert len(rows) == 476 and len(rows[0]) == 167, "unexpected musk shape"
    write_csv(rows, out / "musk.csv")


FETCHERS = {
    "ionosphere": get_ionosphere,
    "sonar": get_sonar,
    "dermatology": get_dermatology,
    "spectf": get_spectf,
    "musk": get_musk,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data", help="output directory")
    parser.add_argument("--dataset", action="append", choices=sorted(FETCHERS),
                        help="fetch only this dataset (repeatable)")
    args = parser.parse_args(argv)
    out = Path(args.out)
    names = args.dataset or sorted(FETCHERS)
    failures = []
    for name in names:
        print(f"{name}:")
        try:
            FETCHERS[name](out)
        except Exception as exc:
            print(f"  FAILED: {exc}", file=sys.stderr)
            failures.append(name)
    if failures:
        print(f"failed: {', '.join(failures)}", file=sys.stderr)
        return 1
    print("all datasets ready")
    return 0


if __name__ == "__main__":
    sys.exit(main())
