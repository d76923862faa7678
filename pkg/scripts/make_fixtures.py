#!/usr/bin/env python3
"""Write the bundled fixture JSON files consumed by the CLI.

Run from the repository root: python3 scripts/make_fixtures.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from logskel import fixtures as fx  # noqa: E402
from logskel.polyhedra import fan_p2, fan_p1xp1, product_fan  # noqa: E402


def dump(name, doc):
    path = os.path.join(os.path.dirname(__file__), "..", "fixtures", name)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")
    print("wrote", os.path.relpath(path))


def main():
    dump("p2_fan.json", fan_p2().to_json_dict())
    dump("p1xp1_fan.json", fan_p1xp1().to_json_dict())
    dump("p2xp2_fan.json", product_fan(fan_p2(), fan_p2()).to_json_dict())

    pair = fx.strict_inclusion_pair()
    dump("strict_inclusion_pair.json", pair.to_json_dict())
    dump("strict_inclusion_form.json", fx.strict_inclusion_form().to_json_dict())
    dump("strict_inclusion_points.json", {
        "schema": "1",
        "points": [pt.to_json_dict() for _, pt in sorted(fx.STRICT_INCLUSION_DIVISORIAL.items())],
    })

    dump("dwork_pair.json", fx.dwork_pair().to_json_dict())
    dump("a2_pair.json", fx.a2_pair().to_json_dict())
    dump("a2_form_z1_plus_z2.json",
         fx.a2_form([((1, 0), 0, 1), ((0, 1), 0, 1)]).to_json_dict())
    dump("a2_form_z1.json", fx.a2_form([((1, 0), 0, 1)]).to_json_dict())

    dump("tate_sweep.json", {
        "schema": "1",
        "n": 2,
        "alphas": [list(a) for a in fx.tate_alpha_sweep(2, 3)],
    })

    dump("closure_points_a2.json", {
        "schema": "1",
        "points": [
            {"kato_point": ["B1", "B2"], "weights": ["2", "inf"], "mode": "trivial"},
            {"kato_point": ["B1", "B2"], "weights": ["inf", "inf"], "mode": "trivial"},
        ],
    })


if __name__ == "__main__":
    main()
