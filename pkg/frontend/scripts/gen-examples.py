"""Regenerate src/examples.ts from the engine corpus (run from repo root):

    python3 frontend/scripts/gen-examples.py
"""
# kept as the single regeneration entry point; the logic lives inline so
# the frontend stays buildable without the python package installed
import json
import sys

sys.path.insert(0, "src")
from chipfire import corpus  # noqa: E402

PLAY = {
    "diamond": (1, "Figure-1 game: two triangles glued along an edge"),
    "simplex2": (1, "single triangle, winnable start"),
    "staco": (1, "boundary in the cone yet unwinnable"),
    "tetrahedron": (1, "hollow tetrahedron, an unwinnable family member"),
    "projective_plane": (1, "projective plane: degree zero yet unwinnable"),
    "triangle": (0, "triangle graph divisors"),
    "path3": (0, "path tree divisors"),
    "two_triangles": (0, "disconnected graph, vector degree"),
    "annulus": (1, "triangulated annulus"),
}


def main():
    entries = []
    for name in corpus.names():
        if name not in PLAY:
            continue
        dim, blurb = PLAY[name]
        entries.append(
            {"name": name, "dim": dim, "blurb": blurb,
             "document": corpus.document_as_json(name)}
        )
    doc = dict(corpus.document_as_json("simplex2"))
    doc["chain"] = {"dim": 1, "coeffs": [1, -1, -1]}
    entries.append(
        {"name": "simplex2_unwinnable", "dim": 1,
         "blurb": "single triangle, provably unwinnable (negative degree)",
         "document": doc}
    )
    entries.sort(key=lambda e: e["name"])
    lines = [
        "// Bundled example gallery (generated from the engine's corpus by",
        "// scripts/gen-examples.py; do not edit by hand).",
        'import type { ComplexDocument } from "./protocol.js";',
        "",
        "export interface GalleryEntry {",
        "  name: string;",
        "  dim: number;",
        "  blurb: string;",
        "  document: ComplexDocument;",
        "}",
        "",
        "export const GALLERY: GalleryEntry[] = " + json.dumps(entries, indent=2) + ";",
        "",
    ]
    open("frontend/src/examples.ts", "w").write("\n".join(lines))
    print(f"wrote {len(entries)} gallery entries")


if __name__ == "__main__":
    main()
