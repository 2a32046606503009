#!/usr/bin/env python3
"""Regenerate the frozen witness fixtures under src/vertextypes/fixtures/.

Small orders are settled exhaustively; orders 10 and 11 of the
very-typical family fall back to template search plus seeded hill
climbing.  Deterministic given the seed.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from vertextypes.classify import VertexType, count_type
from vertextypes.construct import GENERATOR_VERSION
from vertextypes.graph6 import emit_graph6
from vertextypes.verify import (
    find_separating_pair,
    search_pantypical_witness,
    search_type_witness,
)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "src" / "vertextypes" / "fixtures"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    docs = []
    for n in range(5, 12):
        g = search_type_witness(n, VertexType.VERY_TYPICAL, seed=args.seed)
        docs.append(
            {
                "objective": "VT-max",
                "order": n,
                "graph6": emit_graph6(g).decode(),
                "achieved": count_type(g, VertexType.VERY_TYPICAL),
                "generator_version": GENERATOR_VERSION,
            }
        )
    _write("vt_max", docs)

    docs = []
    for n in range(5, 9):
        g = search_type_witness(n, VertexType.TYPICAL, seed=args.seed)
        docs.append(
            {
                "objective": "T-max",
                "order": n,
                "graph6": emit_graph6(g).decode(),
                "achieved": count_type(g, VertexType.TYPICAL),
                "generator_version": GENERATOR_VERSION,
            }
        )
    _write("t_max", docs)

    g = search_pantypical_witness()
    _write(
        "pantypical",
        [
            {
                "objective": "pantypical-min-size",
                "order": 9,
                "graph6": emit_graph6(g).decode(),
                "achieved": g.edge_count(),
                "generator_version": GENERATOR_VERSION,
            }
        ],
    )

    a, b, ta, tb = find_separating_pair((4, 4, 4, 3, 3, 2))
    _write(
        "figure1",
        [
            {
                "objective": "figure1-pair",
                "order": 6,
                "graph6": [emit_graph6(a).decode(), emit_graph6(b).decode()],
                "achieved": [ta[6], tb[6]],
                "generator_version": GENERATOR_VERSION,
            }
        ],
    )


def _write(name: str, docs) -> None:
    path = FIXTURE_DIR / f"{name}.json"
    path.write_text(json.dumps(docs, indent=2) + "\n")
    print(f"wrote {path} ({len(docs)} fixture(s))")


if __name__ == "__main__":
    main()
