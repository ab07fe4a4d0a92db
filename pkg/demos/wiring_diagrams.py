"""Double wiring diagrams: a family of optimal positivity criteria.

Overlay two arrangements of n pseudolines (thin and bold), each pair of
like-colored lines crossing exactly once.  Every chamber of the overlay
reads off a minor: rows from the thin lines below it, columns from the
bold ones.  The n^2 chamber minors of any such diagram are positive iff
the matrix is totally positive, so each diagram is its own criterion.

Local moves connect the diagrams: each move swaps out a single chamber
minor y for a new one z, and the five chambers around the move satisfy the
exchange identity a*c + b*d = y*z.  For n = 3 the move graph has 34
vertices: 34 essentially different optimal criteria.
"""

import random
from fractions import Fraction

from totpos import (DoubleWiringDiagram, Matrix, bounded_chambers,
                    chamber_minors, enumerate_move_graph, local_moves,
                    minimal_diagram, minor, unbounded_chambers)

d = DoubleWiringDiagram.from_text("2~ 1 2 1~ 2~ 1")
print("diagram word:", d)
print("chamber minors:", " ".join(str(s) for s in chamber_minors(d)))
print("bounded chambers:", " ".join(str(s) for s in bounded_chambers(d)))
print("unbounded (same for every diagram):",
      " ".join(str(s) for s in unbounded_chambers(d)))

print("\nThe lexicographically minimal diagram recovers the initial minors:")
d0 = minimal_diagram(3)
print("word:", d0, "->", " ".join(str(s) for s in chamber_minors(d0)))

print("\nOne local move from the minimal diagram and its exchange identity,")
print("evaluated on a random matrix:")
rng = random.Random(1)
x = Matrix([[Fraction(rng.randint(1, 9)) for _ in range(3)]
            for _ in range(3)])
move = local_moves(d0)[0]
val = lambda s: minor(x, s) if s is not None else Fraction(1)
print(f"  kind {move.kind}: exchanges y = {move.y} for z = {move.z}")
print(f"  a*c + b*d = {val(move.a) * val(move.c) + val(move.b) * val(move.d)}"
      f" = y*z = {val(move.y) * val(move.z)}")

print("\nThe move graph for n = 3:")
graph = enumerate_move_graph(3)
print(f"  {graph.vertex_count} vertices (criteria), "
      f"{graph.edge_count} edges (moves)")
print("  bounded quadruples of the first five vertices:")
for key in graph.keys[:5]:
    dd = DoubleWiringDiagram(graph.representatives[key], 3)
    print("   ", " ".join(str(s) for s in bounded_chambers(dd)))
