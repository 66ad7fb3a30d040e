#!/usr/bin/env python3
"""Generate a demonstration hardness instance, route its witness, validate
it, and drop instance/witness JSON plus a sample recognizer SVG into an
output directory."""

import argparse
import json
from pathlib import Path

from outerfan.circular import render_svg
from outerfan.graph import complete_two_hop_graph
from outerfan.recognizer import recognize
from outerfan.reduction import (
    ThreePartitionInstance,
    count_vertical_crossings_per_path,
    generate_instance,
    route_witness,
    save_instance,
    save_witness,
    validate_witness,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--output", default="out", help="output directory")
    args = parser.parse_args()
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)

    tp = ThreePartitionInstance(3, (7, 7, 7, 8, 8, 8, 8, 9, 10), 24)
    inst = generate_instance(tp)
    witness = route_witness(inst, [(0, 1, 8), (2, 3, 7), (4, 5, 6)])
    report = validate_witness(inst, witness)
    save_instance(inst, out / "instance.json")
    save_witness(witness, out / "witness.json")

    g = complete_two_hop_graph(8)
    outcome = recognize(g)
    (out / "two_hop_8.svg").write_text(render_svg(g, outcome.embeddings[0]))

    summary = {
        "instance": {
            "n": inst.graph.n,
            "edges": inst.graph.m,
            "K": inst.params["K"],
            "path_edges": inst.params["path_edges"],
        },
        "witness_valid": report.ok,
        "vertical_crossings_per_path": count_vertical_crossings_per_path(inst, witness),
        "two_hop_8": outcome.verdict.value,
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=1, sort_keys=True))
    print(json.dumps(summary, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
