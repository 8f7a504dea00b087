// Bundled example gallery (generated from the engine's corpus by
// scripts/gen-examples.py; do not edit by hand).
import type { ComplexDocument } from "./protocol.js";

export interface GalleryEntry {
  name: string;
  dim: number;
  blurb: string;
  document: ComplexDocument;
}

export const GALLERY: GalleryEntry[] = [
  {
    "name": "annulus",
    "dim": 1,
    "blurb": "triangulated annulus",
    "document": {
      "facets": [
        [
          1,
          2,
          5
        ],
        [
          1,
          3,
          4
        ],
        [
          1,
          4,
          5
        ],
        [
          2,
          3,
          6
        ],
        [
          2,
          5,
          6
        ],
        [
          3,
          4,
          6
        ]
      ],
      "layout": {
        "1": [
          2.6,
          -1.6
        ],
        "2": [
          0.0,
          3.0
        ],
        "3": [
          -2.6,
          -1.6
        ],
        "4": [
          0.0,
          -1.1
        ],
        "5": [
          1.0,
          0.6
        ],
        "6": [
          -1.0,
          0.6
        ]
      }
    }
  },
  {
    "name": "diamond",
    "dim": 1,
    "blurb": "Figure-1 game: two triangles glued along an edge",
    "document": {
      "facets": [
        [
          1,
          2,
          3
        ],
        [
          2,
          3,
          4
        ]
      ],
      "chain": {
        "dim": 1,
        "coeffs": [
          -1,
          2,
          -3,
          2,
          -1
        ]
      },
      "layout": {
        "1": [
          0.0,
          -1.8
        ],
        "2": [
          -1.0,
          0.0
        ],
        "3": [
          1.0,
          0.0
        ],
        "4": [
          0.0,
          1.8
        ]
      }
    }
  },
  {
    "name": "path3",
    "dim": 0,
    "blurb": "path tree divisors",
    "document": {
      "facets": [
        [
          1,
          2
        ],
        [
          2,
          3
        ]
      ],
      "layout": {
        "1": [
          -1.5,
          0.0
        ],
        "2": [
          0.0,
          0.0
        ],
        "3": [
          1.5,
          0.0
        ]
      }
    }
  },
  {
    "name": "projective_plane",
    "dim": 1,
    "blurb": "projective plane: degree zero yet unwinnable",
    "document": {
      "facets": [
        [
          1,
          2,
          3
        ],
        [
          1,
          2,
          6
        ],
        [
          1,
          3,
          4
        ],
        [
          1,
          4,
          5
        ],
        [
          1,
          5,
          6
        ],
        [
          2,
          3,
          5
        ],
        [
          2,
          4,
          5
        ],
        [
          2,
          4,
          6
        ],
        [
          3,
          4,
          6
        ],
        [
          3,
          5,
          6
        ]
      ],
      "chain": {
        "dim": 1,
        "coeffs": [
          1,
          -1,
          0,
          0,
          0,
          1,
          0,
          0,
          0,
          0,
          0,
          0,
          0,
          0,
          0
        ]
      }
    }
  },
  {
    "name": "simplex2",
    "dim": 1,
    "blurb": "single triangle, winnable start",
    "document": {
      "facets": [
        [
          1,
          2,
          3
        ]
      ],
      "chain": {
        "dim": 1,
        "coeffs": [
          -1,
          1,
          -1
        ]
      },
      "layout": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          -1.0,
          1.8
        ],
        "3": [
          1.0,
          1.8
        ]
      }
    }
  },
  {
    "name": "simplex2_unwinnable",
    "dim": 1,
    "blurb": "single triangle, provably unwinnable (negative degree)",
    "document": {
      "facets": [
        [
          1,
          2,
          3
        ]
      ],
      "chain": {
        "dim": 1,
        "coeffs": [
          1,
          -1,
          -1
        ]
      },
      "layout": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          -1.0,
          1.8
        ],
        "3": [
          1.0,
          1.8
        ]
      }
    }
  },
  {
    "name": "staco",
    "dim": 1,
    "blurb": "boundary in the cone yet unwinnable",
    "document": {
      "facets": [
        [
          1,
          2,
          3
        ],
        [
          1,
          2,
          4
        ],
        [
          3,
          4
        ]
      ],
      "chain": {
        "dim": 1,
        "coeffs": [
          0,
          0,
          0,
          1,
          -1,
          1
        ]
      },
      "layout": {
        "1": [
          0.0,
          -1.0
        ],
        "2": [
          0.0,
          0.6
        ],
        "3": [
          -1.6,
          1.4
        ],
        "4": [
          1.6,
          1.4
        ]
      }
    }
  },
  {
    "name": "tetrahedron",
    "dim": 1,
    "blurb": "hollow tetrahedron, an unwinnable family member",
    "document": {
      "facets": [
        [
          1,
          2,
          3
        ],
        [
          1,
          2,
          4
        ],
        [
          1,
          3,
          4
        ],
        [
          2,
          3,
          4
        ]
      ],
      "chain": {
        "dim": 1,
        "coeffs": [
          1,
          -1,
          1,
          0,
          0,
          0
        ]
      }
    }
  },
  {
    "name": "triangle",
    "dim": 0,
    "blurb": "triangle graph divisors",
    "document": {
      "facets": [
        [
          1,
          2
        ],
        [
          1,
          3
        ],
        [
          2,
          3
        ]
      ],
      "layout": {
        "1": [
          0.0,
          -1.0
        ],
        "2": [
          -1.0,
          0.8
        ],
        "3": [
          1.0,
          0.8
        ]
      }
    }
  },
  {
    "name": "two_triangles",
    "dim": 0,
    "blurb": "disconnected graph, vector degree",
    "document": {
      "facets": [
        [
          1,
          2
        ],
        [
          1,
          3
        ],
        [
          2,
          3
        ],
        [
          4,
          5
        ],
        [
          4,
          6
        ],
        [
          5,
          6
        ]
      ],
      "layout": {
        "1": [
          -2.4,
          -0.8
        ],
        "2": [
          -1.2,
          -0.8
        ],
        "3": [
          -1.8,
          0.6
        ],
        "4": [
          1.2,
          -0.8
        ],
        "5": [
          2.4,
          -0.8
        ],
        "6": [
          1.8,
          0.6
        ]
      }
    }
  }
];
