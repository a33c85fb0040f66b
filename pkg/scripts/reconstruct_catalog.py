"""Search the switching classes on small underlying graphs for quoted spectral radii.

For every candidate underlying graph the script lists each class (up to
automorphism, switching and converse) with its spectral radius and the
classes of its chordless cycles, marking the classes whose radius matches
the target to 1e-3.  The output is what the hard-coded sporadic catalog
entries were chosen from.

    python3 scripts/reconstruct_catalog.py [name ...]
"""

from __future__ import annotations

import itertools
import sys

from mixspec.core import MixedGraph, SimpleGraph, serialize_graph
from mixspec.cycles import classify_cycle, cycle_weight, enumerate_cycles, is_chordless
from mixspec.nmatrix import eigenvalues, spectral_radius
from mixspec.switching import switching_isomorphic, switching_key


def domino_edges():
    # a0 a1 a2 / b0 b1 b2 as 0 1 2 / 3 4 5
    return [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]


def c_edges(n, offset=0):
    return [(offset + i, offset + (i + 1) % n) for i in range(n)]


# name -> (n, underlying edges, target radius or None)
CANDIDATES = {
    "K112": (4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)], None),
    "K4": (4, list(itertools.combinations(range(4), 2)), None),
    "Z": (4, [(0, 1), (1, 2), (0, 2), (0, 3)], 2.0615),
    "C4+pendant": (5, c_edges(4) + [(0, 4)], 1.902),
    "C4+2pendants-adjacent": (6, c_edges(4) + [(0, 4), (1, 5)], None),
    "C4+2pendants-opposite": (6, c_edges(4) + [(0, 4), (2, 5)], None),
    "C4+P2": (6, c_edges(4) + [(0, 4), (4, 5)], 1.970),
    "domino": (6, domino_edges(), None),
    "C4+opposite-path": (6, c_edges(4) + [(0, 4), (4, 5), (5, 2)], 2.199),
    "K23": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], 1.73205),
    "K23+pendant": (6, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5)], 1.932),
    "domino+pendant": (7, domino_edges() + [(0, 6)], 1.902),
    "domino+u(a0,a2)": (7, domino_edges() + [(0, 6), (2, 6)], 1.73205),
    "domino+u(a0,b2)": (7, domino_edges() + [(0, 6), (5, 6)], 1.73205),
    "C4|C6": (8, c_edges(6) + [(0, 6), (6, 7), (7, 1)], 1.956),
    "C6+pendant": (7, c_edges(6) + [(0, 6)], 1.932),
    "C6+2pendants-d3": (8, c_edges(6) + [(0, 6), (3, 7)], 1.932),
    "ladder3": (8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 4), (1, 5), (2, 6), (3, 7)], 1.902),
}

# extensions of domino+pendant (pendant 6 at a0) by a vertex 7 with one neighbour
for w in range(7):
    CANDIDATES[f"domino+pendant+v@{w}"] = (8, domino_edges() + [(0, 6), (w, 7)], None)
for w in range(7):
    CANDIDATES[f"domino+u(a0,b2)+v@{w}"] = (8, domino_edges() + [(0, 6), (5, 6), (w, 7)], 1.932)
for w in range(7):
    CANDIDATES[f"domino+u(a0,a2)+v@{w}"] = (8, domino_edges() + [(0, 6), (2, 6), (w, 7)], 1.932)


def classes(n, edges):
    """Representatives of the switching classes on a labelled graph, up to automorphism."""
    seen = {}
    reps = []
    for gains in itertools.product((0, 1, 5), repeat=len(edges)):
        M = MixedGraph(n, tuple((u, v, g) for (u, v), g in zip(edges, gains)))
        key = switching_key(M)
        if key in seen:
            continue
        seen[key] = True
        if any(switching_isomorphic(M, R) for R in reps):
            continue
        reps.append(M)
    return reps


def describe(M):
    G = M.underlying()
    parts = []
    for c in enumerate_cycles(G):
        if is_chordless(G, c):
            parts.append(f"{c.length}:{classify_cycle(cycle_weight(M, c)).value}")
    return " ".join(parts)


def main(names):
    for name in names or CANDIDATES:
        n, edges, target = CANDIDATES[name]
        print(f"== {name} (target {target})")
        for M in classes(n, edges):
            rho = spectral_radius(eigenvalues(M))
            mark = " <== match" if target is not None and abs(rho - target) < 1e-3 else ""
            print(f"  rho={rho:.4f} cycles[{describe(M)}] graph: {serialize_graph(M).strip().replace(chr(10), '; ')}{mark}")


if __name__ == "__main__":
    main(sys.argv[1:])
