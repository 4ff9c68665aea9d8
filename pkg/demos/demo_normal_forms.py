"""Canonical forms in the path algebra of a small graph.

The graph here is a single loop ``c`` at a vertex ``v`` with one exit edge
``f`` into a sink ``w``.  Its algebra is spanned by reduced monomials: a real
path times a reversed ghost path.  The script walks through the defining
relations and shows how arbitrary words collapse to canonical form.

Run:  python demos/demo_normal_forms.py
"""

from leavitt import Graph, LeavittAlgebra, QQ, format_element, parse_element

g = Graph.build(["v", "w"], [("c", "v", "v"), ("f", "v", "w")])
alg = LeavittAlgebra(g, QQ)

print("graph: loop c at v, exit f: v -> w")
print()

samples = [
    "c*.c",            # ghost against real: contracts to the range vertex
    "f*.f",
    "c.c* + f.f*",     # the two returning pairs sum to the vertex
    "f*.c",            # distinct edges annihilate
    "c.c.c*",          # partial cancellation inside a longer word
    "(c + f).(c + f)*",
]

for text in samples:
    el = parse_element(alg, text)
    print(f"  {text:22s} ->  {format_element(el)}")

print()
print("The reduction is confluent: any multiplication order gives the same")
print("answer.  For instance, associating a product differently:")

x = parse_element(alg, "c + 2*f")
y = parse_element(alg, "c* - v")
z = parse_element(alg, "f.f*")
left = (x * y) * z
right = x * (y * z)
print(f"  (x y) z = {format_element(left)}")
print(f"  x (y z) = {format_element(right)}")
assert left == right
