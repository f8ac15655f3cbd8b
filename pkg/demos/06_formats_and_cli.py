"""graph6, edge lists, DOT and the command line."""

import io
import json

from domrec import construct_upper, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from domrec.cli import main
from domrec.graph import k4_minus_e, to_dot

H = k4_minus_e()
code = to_graph6(H)
print("K4-e as graph6:", code, "round trip:", parse_graph6(code) == H)
print(to_edge_list(H), end="")
print("edge list round trip:", parse_edge_list(to_edge_list(H)) == H)
print(to_dot(construct_upper(H).graph).splitlines()[1])

for argv in (["param", "--input", "C5", "--variant", "gamma-pr"],
             ["sets", "--input", "P3", "--variant", "gamma-t"],
             ["construct", "--target", "id", "--h", "K2"]):
    out = io.StringIO()
    status = main(argv, out)
    print("$ domrec", " ".join(argv), f"(exit {status})")
    print(out.getvalue(), end="")

out = io.StringIO()
main(["verify", "--h", "C4", "--variant", "gamma-c"], out)
rep = json.loads(out.getvalue())
print("verify C4 gamma-c:", rep["isomorphic"], "value", rep["value"], "sets", rep["sets"])
