#!/usr/bin/env python3
"""Dump every built-in category to JSON files, one per entry, in both the
modular form and the downgraded fusion-ring form (with the derived
character table).  Handy for exercising the CLI on files."""

import argparse
from pathlib import Path

from fusioncat import catalog_get, catalog_names, save_category


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, help="output directory")
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for name in catalog_names():
        data = catalog_get(name)
        save_category(data, args.outdir / f"{name}.json")
        save_category(data, args.outdir / f"{name}_ring.json", kind="fusion_ring")
        print(f"wrote {name}.json and {name}_ring.json")


if __name__ == "__main__":
    main()
