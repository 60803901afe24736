"""Command-line front end: generate family members, export graphs, run the
verification matrix, emit machine-readable JSON reports.

Exit codes: 0 all checks pass, 1 any check fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from tetrasym import extragrp, families, graphalg
from tetrasym.cosetgraph import (edge_list_text, sphere, to_dot, to_json_obj,
                                 validate_corefree, validate_sabidussi)
from tetrasym.extragrp import MINUS, PLUS, SIGNS, EVec, extension_group
from tetrasym.families import FamilySpec, build_family
from tetrasym.permgrp import PermGroup

SCHEMA_VERSION = 1

CHECK_NAMES = (
    "counts", "stabiliser", "girth", "bipartite", "local-group",
    "sabidussi", "corefree", "cover", "blocks", "spheres", "double-coset",
    "aut", "bound-equality", "arc-transitive", "group-order",
    "primitive", "word-identities",
)

_AUT_CAP = 100
_CHAIN_CAP = 4000  # vertex-count cap for stabiliser-chain based checks


def _check(name, source, expected, actual, t0, family=None):
    row = {
        "name": name,
        "expected": expected,
        "actual": actual,
        "source": source,
        "pass": bool(expected is None or expected == actual),
        "millis": int((time.perf_counter() - t0) * 1000),
    }
    if family is not None:
        row["family"] = family
    return row


def _skip(name, reason):
    return {"name": name, "skipped": True, "reason": reason}


# ---------------------------------------------------------------------------
# per-family checks (cmd_verify)
# ---------------------------------------------------------------------------

def _gamma_param(build):
    return build.spec.get("t"), build.spec.get("sign")


def family_checks(build: families.FamilyBuild, names=None) -> list:
    """Run the requested named checks against one family member."""
    fam = build.spec.family
    exp = build.expected
    rows = []
    wanted = list(names) if names else None

    def want(name):
        return wanted is None or name in wanted

    def note_skip(name, reason):
        if wanted is not None and name in wanted:
            rows.append(_skip(name, reason))

    if want("counts"):
        t0 = time.perf_counter()
        rows.append(_check("counts", "paper", exp.vertex_count, build.graph.n, t0))
    if want("girth"):
        t0 = time.perf_counter()
        rows.append(_check("girth", "paper" if exp.girth is not None else "derived",
                           exp.girth, graphalg.girth(build.graph), t0))
    if want("bipartite"):
        t0 = time.perf_counter()
        rows.append(_check("bipartite",
                           "paper" if exp.bipartite is not None else "derived",
                           exp.bipartite, graphalg.is_bipartite(build.graph), t0))

    chain_ok = build.action is not None and build.graph.n <= _CHAIN_CAP
    if want("stabiliser"):
        if chain_ok:
            t0 = time.perf_counter()
            group = PermGroup(build.action.gen_perms)
            via_index = group.order() // build.graph.n
            via_chain = group.point_stabiliser(0).order()
            actual = via_index if via_index == via_chain else (via_index, via_chain)
            rows.append(_check("stabiliser", "paper", exp.stabiliser_order, actual, t0))
        else:
            note_skip("stabiliser", "no action or above stabiliser-chain cap")
    if want("group-order"):
        if chain_ok and exp.group_order is not None:
            t0 = time.perf_counter()
            rows.append(_check("group-order", "paper", exp.group_order,
                               PermGroup(build.action.gen_perms).order(), t0))
        else:
            note_skip("group-order", "no action or above stabiliser-chain cap")
    if want("local-group"):
        if chain_ok:
            t0 = time.perf_counter()
            lg = graphalg.local_group(build.action, 0)
            actual = (lg.order(), lg.is_transitive())
            expected = (8, True) if exp.locally_d4 else None
            src = "paper" if fam == "gamma" or (fam == "crs" and
                                                build.spec.get("r") == 2 * build.spec.get("s")) else "derived"
            rows.append(_check("local-group", src, expected, actual, t0))
        else:
            note_skip("local-group", "no action or above stabiliser-chain cap")
    if want("arc-transitive"):
        if build.action is not None:
            t0 = time.perf_counter()
            rows.append(_check("arc-transitive", "paper", True,
                               graphalg.verify_arc_transitive(build.graph, build.action), t0))
        else:
            note_skip("arc-transitive", "built without an action")

    if want("sabidussi"):
        if build.coset is not None:
            t0 = time.perf_counter()
            rep = validate_sabidussi(build.coset.iface, build.coset.a_elt)
            rows.append(_check("sabidussi", "paper", (True, True, 4),
                               (rep.connected, rep.symmetric, rep.valency), t0))
        else:
            note_skip("sabidussi", "not built as a coset graph")
    if want("corefree"):
        if build.coset is not None:
            t0 = time.perf_counter()
            rows.append(_check("corefree", "paper", True,
                               validate_corefree(build.coset), t0))
        else:
            note_skip("corefree", "not built as a coset graph")

    if want("aut"):
        if exp.aut_order is not None and build.graph.n <= _AUT_CAP:
            t0 = time.perf_counter()
            rows.append(_check("aut", "paper", exp.aut_order,
                               graphalg.automorphism_group_order(build.graph), t0))
        else:
            note_skip("aut", "no expected order or above the %d-vertex cap" % _AUT_CAP)

    if fam == "gamma":
        t, sign = _gamma_param(build)
        if want("bound-equality"):
            t0 = time.perf_counter()
            gv = exp.stabiliser_order
            rhs = 2 * gv * ((gv // 2).bit_length() - 1)
            rows.append(_check("bound-equality", "paper", build.graph.n, rhs, t0))
        if want("cover"):
            t0 = time.perf_counter()
            zperm = build.coset.perm_of(build.group.z)
            _, rep = graphalg.quotient_by_subgroup_orbits(build.graph, build.action,
                                                          [zperm])
            base = families.praeger_xu_coset(2 * t, t)
            iso = graphalg.isomorphic(rep.quotient, base.graph) is not None
            rows.append(_check("cover", "paper", (2, True, True),
                               (rep.fibre_size, rep.is_local_bijection, iso), t0))
        if want("double-coset"):
            if t <= 4:
                t0 = time.perf_counter()
                H = build.group.subgroup_h()
                rows.append(_check("double-coset", "paper", False,
                                   extragrp.double_coset_contains(H, build.group.a,
                                                                  build.group.z), t0))
            else:
                note_skip("double-coset", "checked for t <= 4")
        if want("blocks"):
            if t >= 4:
                t0 = time.perf_counter()
                words = families.central_block_words(build.group)
                block = {build.coset.vertex_of(w) for w in words}
                ok_block = graphalg.is_block(build.action, block)
                inter = None
                for u in build.graph.adj[0]:
                    s3 = sphere(build.graph, u, 3)
                    inter = s3 if inter is None else inter & s3
                ok_char = block == (inter | {0})
                rows.append(_check("blocks", "paper", (True, True),
                                   (ok_block, ok_char), t0))
            else:
                note_skip("blocks", "block facts proved for t >= 4")
        if want("spheres"):
            if t >= 3 or sign == MINUS:
                t0 = time.perf_counter()
                s2 = sphere(build.graph, 0, 2)
                w2 = families.second_sphere_words(build.group)
                v2 = {build.coset.vertex_of(w) for w in w2}
                got = [len(s2), len(w2), v2 == s2]
                expect = [12, 12, True]
                if (t, sign) in ((3, MINUS), (4, PLUS), (4, MINUS),
                                 (5, PLUS), (5, MINUS)):
                    w3 = families.third_sphere_words(build.group)
                    v3 = {build.coset.vertex_of(w) for w in w3}
                    got += [len(w3), len(v3)]
                    expect += [36, 36]
                rows.append(_check("spheres", "paper", tuple(expect), tuple(got), t0))
            else:
                note_skip("spheres", "transversal facts hold for t >= 3 or minus sign")

    if fam == "delta":
        m = build.spec.get("m")
        perms = families.delta_permutations(m)
        if want("primitive"):
            t0 = time.perf_counter()
            natural = PermGroup(perms["xs"] + [perms["h"], perms["a"]])
            rows.append(_check("primitive", "paper", True, natural.is_primitive(), t0))
        if want("word-identities"):
            t0 = time.perf_counter()
            xs, h, a, g = perms["xs"], perms["h"], perms["a"], perms["g"]
            ok = g == a * h
            ok &= all(xs[i - 1].conjugate(h) == xs[2 * m - i - 1]
                      for i in range(1, 2 * m))
            ok &= all(xs[i - 1].conjugate(g) == xs[i] for i in range(1, 2 * m - 1))
            from tetrasym.permgrp import Permutation
            ok &= xs[2 * m - 2].conjugate(g) == Permutation.from_cycles(
                4 * m, [(0, 4 * m - 2)])
            rows.append(_check("word-identities", "paper", True, ok, t0))

    if wanted is not None:
        for name in wanted:
            if name not in CHECK_NAMES:
                rows.append(_skip(name, "unknown check"))
            elif not any(r["name"] == name for r in rows):
                rows.append(_skip(name, "not applicable to family %s" % fam))
    return rows


def verification_report(spec: FamilySpec, checks=None, allow_large=False) -> dict:
    build = build_family(spec, allow_large=allow_large)
    rows = family_checks(build, checks)
    live = [r for r in rows if not r.get("skipped")]
    return {
        "schema": SCHEMA_VERSION,
        "spec": {"family": spec.family, "params": dict(spec.params)},
        "checks": rows,
        "overall": all(r["pass"] for r in live),
    }


# ---------------------------------------------------------------------------
# engine-level checks (criteria 1 and 14)
# ---------------------------------------------------------------------------

def relation_suite(t: int, sign: str) -> bool:
    """Every defining relation of the extension group, via the engine."""
    grp = extension_group(t, sign)
    two_t = 2 * t
    xs = [grp.x(i) for i in range(two_t)]
    z, a, b = grp.z, grp.a, grp.b

    def comm(p, q):
        return p.inverse() * q.inverse() * p * q

    ok = all((x * x).is_identity() for x in xs)
    ok &= (z * z).is_identity()
    ok &= all(comm(x, z).is_identity() for x in xs)
    for i in range(two_t):
        for j in range(two_t):
            c = comm(xs[i], xs[j])
            ok &= (c == z) if abs(i - j) == t else c.is_identity()
    ok &= all(xs[i].conjugate(a) == xs[(i + 1) % two_t] for i in range(two_t))
    ok &= all(xs[i].conjugate(b) == xs[(t - 1 - i) % two_t] for i in range(two_t))
    ok &= (b * b).is_identity()
    ok &= ((a * b) ** 2).is_identity()
    ok &= a.conjugate(b) == a.inverse()
    a_2t = a ** two_t
    ok &= (a_2t == z) if sign == MINUS else a_2t.is_identity()
    ok &= a.order() == (4 * t if sign == MINUS else 2 * t)
    return ok


def assoc_sample_failures(t: int, sign: str, samples: int, seed: int = 12345) -> int:
    grp = extension_group(t, sign)
    codes = [g.code for g in grp.elements()]
    rng = random.Random(seed)
    mul = grp.mul_code
    bad = 0
    for _ in range(samples):
        p, q, r = rng.choice(codes), rng.choice(codes), rng.choice(codes)
        if mul(mul(p, q), r) != mul(p, mul(q, r)):
            bad += 1
    return bad


def evec_exhaustive_failures(t: int) -> int:
    vecs = [EVec(t, v, zz) for v in range(1 << (2 * t)) for zz in (0, 1)]
    bad = 0
    for u in vecs:
        for w in vecs:
            uw = u * w
            for y in vecs:
                if (uw * y) != (u * (w * y)):
                    bad += 1
    return bad


# ---------------------------------------------------------------------------
# the acceptance matrix (cmd_matrix)
# ---------------------------------------------------------------------------

class _BuildCache:
    def __init__(self, allow_large=False):
        self.allow_large = allow_large
        self._cache: dict = {}

    def get(self, text: str) -> families.FamilyBuild:
        if text not in self._cache:
            self._cache[text] = build_family(FamilySpec.parse(text),
                                             allow_large=self.allow_large)
        return self._cache[text]

    def prebuild(self, specs, threads: int):
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                list(pool.map(self.get, specs))
        else:
            for s in specs:
                self.get(s)


def _criterion(cid, name, rows):
    return {"id": cid, "name": name, "checks": rows,
            "pass": all(r["pass"] for r in rows if not r.get("skipped"))}


def matrix_report(allow_large=False, threads: int = 1, families_filter=None,
                  max_t: int = 6) -> dict:
    cache = _BuildCache(allow_large)
    gamma_ts = range(2, max_t + 1)

    specs = []
    if _fam_on("crs", families_filter):
        specs += ["crs:r=%d,s=%d" % (r, s)
                  for r in range(3, 9) for s in range(1, r)]
    if _fam_on("gamma", families_filter):
        specs += ["gamma:sign=%s,t=%d" % (sign, t)
                  for t in gamma_ts for sign in SIGNS]
    if _fam_on("delta", families_filter):
        specs += ["delta:m=2"]
    if _fam_on("wreath", families_filter):
        specs += ["wreath:r=4"]
    cache.prebuild(specs, threads)

    criteria = []

    def running(cid, name):
        print("criterion %2d  %s" % (cid, name), file=sys.stderr, flush=True)

    if families_filter is None:
        running(1, "extraspecial engine soundness")
        rows = []
        t0 = time.perf_counter()
        rows.append(_check("evec-assoc-exhaustive-t2", "derived", 0,
                           evec_exhaustive_failures(2), t0))
        for sign in SIGNS:
            t0 = time.perf_counter()
            rows.append(_check("gelt-assoc-sampled-t2-%s" % sign, "derived", 0,
                               assoc_sample_failures(2, sign, 500_000), t0))
        for t in (2, 3, 4):
            for sign in SIGNS:
                t0 = time.perf_counter()
                rows.append(_check("relations-t%d-%s" % (t, sign), "paper", True,
                                   relation_suite(t, sign), t0))
                t0 = time.perf_counter()
                count = sum(1 for _ in extension_group(t, sign).elements())
                rows.append(_check("enumeration-t%d-%s" % (t, sign), "paper",
                                   t * 2 ** (2 * t + 3), count, t0))
        criteria.append(_criterion(1, "extraspecial engine soundness", rows))

    running(2, "vertex counts")
    rows = []
    for text in specs:
        b = cache.get(text)
        t0 = time.perf_counter()
        rows.append(_check("counts", "paper", b.expected.vertex_count,
                           b.graph.n, t0, family=text))
    if rows:
        criteria.append(_criterion(2, "vertex counts", rows))

    if _fam_on("gamma", families_filter) or _fam_on("delta", families_filter):
        running(3, "stabiliser orders")
        rows = []
        for text in specs:
            b = cache.get(text)
            if b.spec.family == "gamma" and b.spec.get("t") > 5:
                continue
            if b.spec.family not in ("gamma", "delta"):
                continue
            for row in family_checks(b, ["stabiliser"]):
                row["family"] = text
                rows.append(row)
        criteria.append(_criterion(3, "stabiliser orders", rows))

    if _fam_on("gamma", families_filter):
        running(4, "bound equality")
        rows = []
        for t in gamma_ts:
            for sign in SIGNS:
                b = cache.get("gamma:sign=%s,t=%d" % (sign, t))
                for row in family_checks(b, ["bound-equality"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
        criteria.append(_criterion(4, "bound equality", rows))

    running(5, "girth schedule")
    rows = []
    for text in specs:
        b = cache.get(text)
        if b.spec.family == "crs" and b.spec.get("r") == 3:
            continue  # 6- and 12-vertex members contain triangles; not asserted
        if b.spec.family in ("crs", "gamma"):
            for row in family_checks(b, ["girth"]):
                row["family"] = text
                rows.append(row)
    if rows:
        criteria.append(_criterion(5, "girth schedule", rows))

    if _fam_on("gamma", families_filter):
        running(6, "sphere transversals")
        rows = []
        for t in range(2, min(max_t, 5) + 1):
            for sign in SIGNS:
                if t == 2 and sign == PLUS:
                    continue
                b = cache.get("gamma:sign=%s,t=%d" % (sign, t))
                for row in family_checks(b, ["spheres"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
        criteria.append(_criterion(6, "sphere transversals", rows))

        running(7, "double coset exclusion")
        rows = []
        for t in (2, 3, 4):
            if t > max_t:
                continue
            for sign in SIGNS:
                b = cache.get("gamma:sign=%s,t=%d" % (sign, t))
                for row in family_checks(b, ["double-coset"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
        criteria.append(_criterion(7, "double coset exclusion", rows))

        running(8, "central covers")
        rows = []
        for t in range(2, min(max_t, 5) + 1):
            for sign in SIGNS:
                b = cache.get("gamma:sign=%s,t=%d" % (sign, t))
                for row in family_checks(b, ["cover"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
        criteria.append(_criterion(8, "central covers", rows))

        running(9, "locally dihedral vertex actions")
        rows = []
        for t in (2, 3, 4):
            if t > max_t:
                continue
            for sign in SIGNS:
                b = cache.get("gamma:sign=%s,t=%d" % (sign, t))
                for row in family_checks(b, ["local-group"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
            if _fam_on("crs", families_filter):
                b = cache.get("crs:r=%d,s=%d" % (2 * t, t))
                for row in family_checks(b, ["local-group"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
        criteria.append(_criterion(9, "locally dihedral vertex actions", rows))

        running(10, "blocks of imprimitivity")
        rows = []
        for t in (4, 5):
            if t > max_t:
                continue
            for sign in SIGNS:
                b = cache.get("gamma:sign=%s,t=%d" % (sign, t))
                for row in family_checks(b, ["blocks"]):
                    row["family"] = str(b.spec)
                    rows.append(row)
        criteria.append(_criterion(10, "blocks of imprimitivity", rows))

    if _fam_on("gamma", families_filter) or _fam_on("wreath", families_filter):
        running(11, "automorphism group orders")
        rows = []
        targets = []
        if _fam_on("wreath", families_filter):
            targets.append("wreath:r=4")
        if _fam_on("gamma", families_filter):
            targets += ["gamma:sign=%s,t=%d" % (sign, t)
                        for t in (2, 3) if t <= max_t for sign in SIGNS]
        for text in targets:
            b = cache.get(text)
            for row in family_checks(b, ["aut"]):
                row["family"] = text
                rows.append(row)
        criteria.append(_criterion(11, "automorphism group orders", rows))

    if _fam_on("gamma", families_filter) and _fam_on("crs", families_filter):
        running(12, "isomorphism facts")
        rows = []
        t0 = time.perf_counter()
        iso = graphalg.isomorphic(cache.get("gamma:sign=plus,t=2").graph,
                                  cache.get("crs:r=4,s=3").graph)
        rows.append(_check("gamma2plus-iso-crs(4,3)", "paper", True,
                           iso is not None, t0))
        for t in (2, 3, 4):
            if t > max_t:
                continue
            t0 = time.perf_counter()
            iso = graphalg.isomorphic(cache.get("gamma:sign=plus,t=%d" % t).graph,
                                      cache.get("gamma:sign=minus,t=%d" % t).graph)
            rows.append(_check("gamma%d-plus-vs-minus" % t, "paper", False,
                               iso is not None, t0))
        for r in range(4, 9):
            for s in range(2, r - 1):
                t0 = time.perf_counter()
                direct = families.praeger_xu_direct(r, s)
                iso = graphalg.isomorphic(direct, cache.get(
                    "crs:r=%d,s=%d" % (r, s)).graph)
                rows.append(_check("crs(%d,%d)-direct-vs-coset" % (r, s), "paper",
                                   True, iso is not None, t0))
        criteria.append(_criterion(12, "isomorphism facts", rows))

    if _fam_on("delta", families_filter):
        running(13, "symmetric-group family suite")
        b = cache.get("delta:m=2")
        rows = []
        t0 = time.perf_counter()
        rows.append(_check("connected-tetravalent", "paper", (2520, True),
                           (b.graph.n, b.graph.is_regular(4)), t0))
        for row in family_checks(b, ["bipartite", "arc-transitive", "group-order",
                                     "stabiliser", "primitive", "word-identities",
                                     "sabidussi", "corefree"]):
            row["family"] = "delta:m=2"
            rows.append(row)
        criteria.append(_criterion(13, "symmetric-group family suite", rows))

    if families_filter is None:
        running(14, "group non-isomorphism witness")
        rows = []
        for t in (2, 3):
            t0 = time.perf_counter()
            cp = extension_group(t, PLUS).element_order_census()
            cm = extension_group(t, MINUS).element_order_census()
            rows.append(_check("census-differs-t%d" % t, "derived", True,
                               cp != cm, t0))
        criteria.append(_criterion(14, "group non-isomorphism witness", rows))

    return {
        "schema": SCHEMA_VERSION,
        "criteria": criteria,
        "overall": all(c["pass"] for c in criteria),
    }


def _fam_on(name, families_filter):
    return families_filter is None or name in families_filter


# ---------------------------------------------------------------------------
# argparse wiring
# ---------------------------------------------------------------------------

def _write_out(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    spec = FamilySpec.parse(args.spec)
    build = build_family(spec, allow_large=args.allow_large)
    if args.format == "edges":
        text = edge_list_text(build.graph)
    elif args.format == "dot":
        text = to_dot(build.graph)
    else:
        text = json.dumps(to_json_obj(build.graph), sort_keys=True) + "\n"
    _write_out(text, args.out)
    return 0


def cmd_verify(args) -> int:
    spec = FamilySpec.parse(args.spec)
    checks = args.checks.split(",") if args.checks else None
    report = verification_report(spec, checks, allow_large=args.allow_large)
    _write_out(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if report["overall"] else 1


def cmd_matrix(args) -> int:
    if args.max_t < 2:
        raise ValueError("--max-t must be at least 2")
    if args.max_t > 6 and not args.allow_large:
        raise ValueError("--max-t beyond 6 needs --allow-large")
    fams = args.families.split(",") if args.families else None
    report = matrix_report(allow_large=args.allow_large, threads=args.threads,
                           families_filter=fams, max_t=args.max_t)
    for crit in report["criteria"]:
        print("criterion %2d  %-38s %s" % (crit["id"], crit["name"],
                                           "PASS" if crit["pass"] else "FAIL"),
              file=sys.stderr)
    _write_out(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if report["overall"] else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="tetrasym",
        description="Build and verify four families of tetravalent "
                    "arc-transitive graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    spec_help = ("family spec, e.g. 'wreath:r=5', 'crs:r=6,s=3', "
                 "'gamma:t=4,sign=minus', 'delta:m=2'")

    p = sub.add_parser("generate", help="export one family member as a graph file")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    p.add_argument("--out", default=None)
    p.add_argument("--allow-large", action="store_true",
                   help="unlock delta m=3 and gamma t>6")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("verify", help="run checks for one family member")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--checks", default=None,
                   help="comma list from: %s" % ",".join(CHECK_NAMES))
    p.add_argument("--out", default=None)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("matrix", help="run the full verification matrix")
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=1,
                   help="parallel builds across family members")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--families", default=None,
                   help="comma list restricting to these families")
    p.add_argument("--max-t", type=int, default=6,
                   help="largest parameter for the extension-group family")
    p.set_defaults(fn=cmd_matrix)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
