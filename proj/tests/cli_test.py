"""Golden exit codes and deterministic JSON output of the command-line tool."""
import json
import os
import subprocess
import sys
import tempfile

BIN, FIX = sys.argv[1], sys.argv[2]


def f(name):
    return os.path.join(FIX, name)


GOLDEN = [
    (["check", "algebra", f("fix_z.json")], 0),
    (["check", "algebra", f("fix_u.json")], 0),
    (["check", "algebra", f("fix_d.json")], 0),
    (["check", "algebra", f("fix_l.json")], 0),
    (["check", "algebra", f("fix_r22.json")], 0),
    (["check", "algebra", f("fix_u_bumped.json")], 1),
    (["check", "algebra", f("bad_index.json")], 2),
    (["check", "algebra", f("bad_rational.json")], 2),
    (["check", "algebra", f("bad_duplicate.json")], 2),
    (["check", "algebra", f("bad_unknown_tensor.json")], 2),
    (["check", "algebra", f("bad_syntax.json")], 2),
    (["check", "algebra", f("fix_x.json")], 2),
    (["check", "algebra", f("does_not_exist.json")], 2),
    (["check", "rep", f("fix_u.json"), f("fix_u_adjoint.json")], 0),
    (["check", "rep", f("fix_u.json"), f("bad_rep_dims.json")], 2),
    (["check", "xmod", f("fix_x.json")], 0),
    (["check", "xmod", f("fix_x_ff.json")], 0),
    (["check", "xmod-rep", f("fix_x.json"), f("fix_x_adjoint.json")], 0),
    (["check", "hom", f("fix_u.json"), f("fix_u.json"), f("fix_u_identity_hom.json")], 0),
    (["check", "derivation", f("fix_u.json"), f("fix_u_id_derivation.json")], 1),
    (["cohomology", f("fix_z.json"), f("trivial_1_1.json")], 0),
    (["cohomology", f("fix_u.json"), f("fix_u_adjoint.json")], 0),
    (["cohomology", f("fix_u_bumped.json")], 1),
    (["cocycle", "check", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_u_cocycle.json")], 0),
    (["cocycle", "check", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_u_noncocycle.json")], 1),
    (["cocycle", "check", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_z_cochain_zero.json")], 0),
    (["cocycle", "reduce", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_u_cocycle_shifted.json")], 0),
    (["cocycle", "check", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_x_cocycle.json")], 2),
    (["deform", "check", f("fix_u.json"), f("fix_u_cocycle.json")], 0),
    (["deform", "check", f("fix_u.json"), f("fix_u_noncocycle.json")], 1),
    (["nijenhuis", "check", f("fix_u.json"), f("fix_u_id.json")], 0),
    (["nijenhuis", "check", f("fix_d.json"), f("fix_d_id_2id.json")], 1),
    (["nijenhuis", "apply", f("fix_u.json"), f("fix_u_id.json")], 0),
    (["nijenhuis", "apply", f("fix_d.json"), f("fix_d_id_2id.json")], 1),
    (["ext", "build", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_u_cocycle.json")], 0),
    (["ext", "build", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_u_noncocycle.json")], 1),
    (["ext", "extract", f("fix_u_ext_a.json")], 0),
    (["ext", "equiv", f("fix_u_ext_a.json"), f("fix_u_ext_b.json")], 0),
    (["ext", "equiv", f("fix_z_ext_a.json"), f("fix_z_ext_b.json")], 1),
    (["ext", "extract", f("fix_u.json")], 2),
    (["endalg", "build", f("complex_q.json")], 0),
    (["xmod", "cohomology", f("fix_x.json")], 0),
    (["xmod", "cocycle", "check", f("fix_x.json"), f("fix_x_adjoint.json"), f("fix_x_cocycle.json")], 0),
    (["xmod", "cocycle", "reduce", f("fix_x.json"), f("fix_x_adjoint.json"), f("fix_x_cocycle.json")], 0),
    (["xmod", "deform", "check", f("fix_x.json"), f("fix_x_cocycle.json")], 0),
    (["xmod", "nijenhuis", "check", f("fix_x.json"), f("fix_x_id.json")], 0),
    (["xmod", "nijenhuis", "apply", f("fix_x.json"), f("fix_x_id.json")], 0),
    (["xmod", "ext", "extract", f("fix_x_ext.json")], 0),
    (["xmod", "ext", "equiv", f("fix_x_ext.json"), f("fix_x_ext.json")], 0),
    (["xmod", "semidirect", f("fix_x.json"), f("fix_x_adjoint.json")], 0),
    (["xmod", "to-strict", f("fix_x.json")], 0),
    (["xmod", "from-strict", f("fix_u.json")], 0),
    (["xmod", "from-strict", f("fix_l.json")], 1),
    (["random", "algebra", "--seed", "5"], 0),
    (["random", "xmod", "--seed", "5"], 0),
    (["no-such-verb"], 2),
    (["check", "algebra"], 2),
    (["check", "algebra", f("fix_u.json"), "--format", "xml"], 2),
]

failures = []


def run(args, fmt="json"):
    return subprocess.run([BIN, "--format", fmt] + args, capture_output=True)


for args, code in GOLDEN:
    name = " ".join(os.path.basename(a) for a in args)
    for fmt in ("human", "json"):
        p = run(args, fmt)
        if p.returncode != code:
            failures.append(f"{name} [{fmt}]: exit {p.returncode}, expected {code}: {p.stderr.decode()}")
            continue
        if code == 2:
            if p.stdout:
                failures.append(f"{name} [{fmt}]: output on stdout for an input error")
            if not p.stderr:
                failures.append(f"{name} [{fmt}]: no message on stderr")
            continue
        if fmt == "json":
            doc = json.loads(p.stdout)
            passing = doc["verdict"] in ("pass", "cocycle", "generates", "equivalent")
            if passing != (code == 0):
                failures.append(f"{name}: verdict {doc['verdict']} with exit {code}")
            if doc["verdict"] in ("pass", "fail") and "violations" in doc:
                if (doc["verdict"] == "pass") != (doc["violation_count"] == 0):
                    failures.append(f"{name}: verdict and violations disagree")
            again = run(args, fmt)
            if again.stdout != p.stdout:
                failures.append(f"{name}: JSON output differs between two runs")

# A bumped constant is reported with condition and basis tuple.
doc = json.loads(run(["check", "algebra", f("fix_u_bumped.json")]).stdout)
v = doc["violations"][0]
if not v["condition_id"] or v["basis_tuple"] is None:
    failures.append("bumped FIX-U: violation lacks condition or tuple")

# Numbers reported by cohomology.
doc = json.loads(run(["cohomology", f("fix_z.json"), f("trivial_1_1.json")]).stdout)
if doc["numbers"] != {"dimZ2": 5, "dimB2": 0, "dimH2": 5}:
    failures.append(f"FIX-Z trivial cohomology: {doc['numbers']}")

# ext build output is a valid extension file whose cocycle is the input.
with tempfile.TemporaryDirectory() as tmp:
    doc = json.loads(run(["ext", "build", f("fix_u.json"), f("fix_u_adjoint.json"), f("fix_u_cocycle.json")]).stdout)
    path = os.path.join(tmp, "ext.json")
    with open(path, "w") as out:
        json.dump(doc["result"], out)
    back = json.loads(run(["ext", "extract", path]).stdout)
    with open(f("fix_u_cocycle.json")) as src:
        if back["cocycle"] != json.load(src):
            failures.append("ext build/extract does not return the input cocycle")

    # A file written by the tool parses back to the same bytes.
    doc = json.loads(run(["random", "algebra", "--seed", "11"]).stdout)
    path = os.path.join(tmp, "alg.json")
    with open(path, "w") as out:
        json.dump(doc["result"], out)
    p = run(["xmod", "from-strict", path])
    if p.returncode not in (0, 1):
        failures.append("random algebra output does not parse")

for line in failures:
    print("FAIL", line)
print(f"{len(GOLDEN)} golden commands, {len(failures)} failures")
sys.exit(1 if failures else 0)
