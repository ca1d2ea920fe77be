#!/usr/bin/env python3
"""End-to-end checks for the graphlie CLI: exit codes, output formats,
determinism, and the documented subcommand behavior."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1] if len(sys.argv) > 1 else os.environ.get("GRAPHLIE_CLI", "graphlie")

LAMBDA_S = {
    "vertices": ["x1", "x2", "x3"],
    "plain_edges": [],
    "directed_edges": [["x1", "x2"], ["x3", "x2"]],
}
F4_CONE = {
    "vertices": ["v", "v1", "v2"],
    "plain_edges": [["v", "v1"]],
    "directed_edges": [["v1", "v2"], ["v", "v2"]],
}
C4 = {
    "vertices": ["x1", "x2", "x3", "x4"],
    "plain_edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x1", "x4"]],
    "directed_edges": [],
}
ERA_PATH = {
    "vertices": ["x", "y", "z"],
    "plain_edges": [["x", "y"], ["y", "z"]],
    "labels": {"x": 1, "y": 0, "z": 0},
}
DOT = {"vertices": ["v"], "plain_edges": [], "directed_edges": []}

failures = []


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {name} {detail if not cond else ''}")
    if not cond:
        failures.append(name)


def run(args, graph=None):
    argv = [CLI] + args
    tmp = None
    if graph is not None:
        tmp = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        json.dump(graph, tmp)
        tmp.close()
        argv = [CLI] + [a if a != "GRAPH" else tmp.name for a in args]
    proc = subprocess.run(argv, capture_output=True, text=True)
    if tmp:
        os.unlink(tmp.name)
    return proc


def main():
    # graph-check: text output with witnesses
    p = run(["graph-check", "GRAPH"], LAMBDA_S)
    check("graph-check exit", p.returncode == 0)
    check("graph-check special", "special: yes" in p.stdout)
    check("graph-check droms", "mixed-droms: no" in p.stdout and "Lambda_s" in p.stdout)

    p = run(["graph-check", "GRAPH"], C4)
    check("graph-check c4", "induced C4" in p.stdout)

    p = run(["graph-check", "GRAPH"], DOT)
    check("graph-check dot", p.returncode == 0 and "special: yes" in p.stdout
          and "mixed-droms: yes" in p.stdout)

    # series: the Poincare series of the directed edge
    edge = {"vertices": ["u", "v"], "plain_edges": [], "directed_edges": [["u", "v"]]}
    p = run(["series", "GRAPH", "--what", "poincare", "--order", "4"], edge)
    check("series poincare", "1 + 2*z + 1*z^2 + 0*z^3" in p.stdout)

    p = run(["series", "GRAPH", "--what", "dims", "--order", "4"], {
        "vertices": ["a", "b"], "plain_edges": [["a", "b"]], "directed_edges": []})
    check("series dims plane", "2, 2, 0, 2" in p.stdout)

    p = run(["series", "GRAPH", "--what", "dims", "--order", "4"], {
        "vertices": ["a", "b"], "plain_edges": [], "directed_edges": []})
    check("series dims free", "2, 3, 2, 6" in p.stdout)

    # labelled graphs use the monomial-count path
    p = run(["series", "GRAPH", "--what", "poincare", "--order", "4"], ERA_PATH)
    check("series era", p.returncode == 0 and "agree: yes" in p.stdout)

    # non-special mixed graphs are rejected with the documented code
    triangle = {"vertices": ["a", "b", "c"], "plain_edges": [],
                "directed_edges": [["a", "b"], ["b", "c"], ["c", "a"]]}
    p = run(["series", "GRAPH"], triangle)
    check("series not-special exit", p.returncode == 2, f"got {p.returncode}")
    check("series not-special msg", "NotSpecial" in p.stderr)

    # subalgebra: the lambda_s witness
    p = run(["subalgebra", "GRAPH", "--generators", "1,0,1;0,1,0"], LAMBDA_S)
    check("subalgebra defect", "defect degree 3" in p.stdout)

    p = run(["subalgebra", "GRAPH", "--generators", "1,0,0;0,1,0;0,0,1"], DOT)
    check("subalgebra bad rows", p.returncode == 2)

    # the F4 witness {v1 + T v, v2} needs --field f4; rows follow the
    # lexicographic vertex order (v, v1, v2)
    p = run(["subalgebra", "GRAPH", "--generators", "T,1,0;0,0,1", "--field", "f4"], F4_CONE)
    check("subalgebra f4", "defect degree 3" in p.stdout, p.stdout)
    p = run(["subalgebra", "GRAPH", "--generators", "T,1,0;0,0,1"], F4_CONE)
    check("subalgebra f2 rejects T", p.returncode == 2)

    # classify: json shape and field sensitivity
    p = run(["classify", "GRAPH", "--format", "json"], F4_CONE)
    doc = json.loads(p.stdout)
    check("classify json", doc["bk_f2"] is True and doc["bk_contains_f4"] is False)

    p = run(["classify", "GRAPH", "--verify", "--format", "json"], LAMBDA_S)
    doc = json.loads(p.stdout)
    check("classify verify", doc["verify"]["agree"] is True
          and doc["verify"]["witness"]["defect_degree"] == 3)
    check("classify no timings by default", "elapsed_ms" not in doc["verify"])

    p = run(["classify", "GRAPH", "--verify", "--timings", "--format", "json"], LAMBDA_S)
    doc = json.loads(p.stdout)
    check("classify timings flag", "elapsed_ms" in doc["verify"])

    # bruteforce is deterministic: identical runs give identical bytes
    a = run(["bruteforce", "GRAPH", "--format", "json"], LAMBDA_S)
    b = run(["bruteforce", "GRAPH", "--format", "json"], LAMBDA_S)
    check("bruteforce deterministic", a.stdout == b.stdout and a.returncode == 0)
    j = json.loads(a.stdout)
    check("bruteforce witness", j["witness"]["defect_degree"] == 3
          and j["subspaces_checked"] == 16)

    c = run(["bruteforce", "GRAPH", "--format", "json", "--jobs", "4"], LAMBDA_S)
    check("bruteforce parallel matches", json.loads(c.stdout)["witness"] == j["witness"])

    # usage and parse errors
    p = run(["series", "GRAPH", "--what", "nonsense"], DOT)
    check("bad what", p.returncode == 1)
    p = run(["classify", "GRAPH", "--depth", "1"], DOT)
    check("depth below 2", p.returncode == 1)
    p = run(["nope"])
    check("unknown subcommand", p.returncode == 1)
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
        tmp.write("{ not json")
    p = run(["graph-check", tmp.name])
    os.unlink(tmp.name)
    check("parse error", p.returncode == 2)
    p = run(["graph-check", "/nonexistent/file.json"])
    check("missing file", p.returncode == 2)

    # budget guard maps to exit 3
    p = run(["series", "GRAPH", "--what", "dims", "--budget", "10"], LAMBDA_S)
    check("budget exit", p.returncode == 3, f"got {p.returncode}")

    # examples-run
    p = run(["examples-run"])
    check("examples-run", p.returncode == 0 and "all examples pass" in p.stdout)

    print(f"\n{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
