#!/usr/bin/env python3
"""Fetch the real-world benchmark graphs used by the pinned-count tests.

Downloads into data/ (or $GRAPHMINE_DATA). The acceptance tests skip the
pinned-count checks when these files are absent, so run this once on a
machine with network access:

    python3 scripts/fetch_datasets.py

Sources:
  roadnet-TX, ca-GrQc   SNAP  https://snap.stanford.edu/data/
  brady                 LASAGNE mirror bundled with the CAGE release,
                        https://github.com/DavideR95/CAGE (datasets/)

Brady is distributed in the CAGE repository; save it as a plain
whitespace edge list at data/brady.txt (one "u v" pair per line).
"""

import gzip
import os
import shutil
import sys
import urllib.request
from pathlib import Path

DATA = Path(os.environ.get("GRAPHMINE_DATA",
                           Path(__file__).resolve().parent.parent / "data"))

SNAP = {
    "roadnet-TX.txt.gz": "https://snap.stanford.edu/data/roadNet-TX.txt.gz",
    "ca-GrQc.txt.gz": "https://snap.stanford.edu/data/ca-GrQc.txt.gz",
}

BRADY_CANDIDATES = [
    "https://raw.githubusercontent.com/DavideR95/CAGE/main/datasets/brady.txt",
    "https://raw.githubusercontent.com/DavideR95/CAGE/master/datasets/brady.txt",
]


def fetch(url: str, dest: Path) -> bool:
    if dest.exists():
        print(f"{dest} already present")
        return True
    print(f"fetching {url} -> {dest}")
    try:
        with urllib.request.urlopen(url, timeout=120) as resp, \
                open(dest, "wb") as out:
            shutil.copyfileobj(resp, out)
        return True
    except Exception as exc:  # noqa: BLE001 - report and continue
        print(f"  failed: {exc}")
        dest.unlink(missing_ok=True)
        return False


def main() -> int:
    DATA.mkdir(parents=True, exist_ok=True)
    ok = True
    for name, url in SNAP.items():
        ok &= fetch(url, DATA / name)
    brady = DATA / "brady.txt"
    if not brady.exists():
        got = any(fetch(u, brady) for u in BRADY_CANDIDATES)
        if not got:
            print("Brady could not be fetched automatically; download it "
                  "from the CAGE repository and save as data/brady.txt")
            ok = False
    # sanity: gunzip-readability
    for name in SNAP:
        path = DATA / name
        if path.exists():
            with gzip.open(path, "rt") as fh:
                fh.readline()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
