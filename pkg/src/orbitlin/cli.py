"""Command-line front end.  Every command writes JSON lines (one record per line).

Exit status: 0 on success, 2 on usage or input-file errors, 1 on domain
errors (the error class name is printed to stderr).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import approx, automata, eqspace
from .demos import expand_witness, manual_witness, triangle_free_configuration
from .errors import OrbitlinError
from .fields import parse_field
from .formats import dumps, read_json, structure_from_data, vector_as_data, vector_from_data, world_from_data
from .orbits import OrbitDescriptor, ambient_orbits, default_index, ordered_types
from .vectors import decompose, expand, is_balanced
from .world import PRESETS, preset


class UsageError(Exception):
    pass


def _duo_data(c, duo, coeffs):
    return {"coef": coeffs.fmt(c), "plus": list(duo.plus), "minus": list(duo.minus)}


# ------------------------------------------------------------------ verbs
def cmd_decompose(args, emit):
    doc = read_json(args.file)
    world, names = world_from_data(doc, args.world)
    v = vector_from_data(world, doc["vector"], names, args.field)
    t0 = time.perf_counter()
    dec = decompose(world, v)
    elapsed = time.perf_counter() - t0
    for c, duo in dec:
        emit({"cog": _duo_data(c, duo, v.coeffs)})
    total = expand(dec, v.coeffs, v.orbit)
    emit({
        "cogs": len(dec),
        "fresh_atoms": dec.fresh_atoms,
        "expansion_equals_input": total == v,
        "input": vector_as_data(v),
        "seconds": round(elapsed, 4) if args.timing else None,
    })


def _generators(world, doc, names, field):
    return [vector_from_data(world, g, names, field) for g in doc["generators"]]


def _support(doc, names):
    return [names.get(a, a) for a in doc.get("support", ())]


def cmd_member(args, emit):
    doc = read_json(args.file)
    world, names = world_from_data(doc, args.world)
    S = _support(doc, names)
    W = eqspace.subspace_from_generators(world, _generators(world, doc, names, args.field), S, args.field)
    probe = vector_from_data(world, doc["probe"], names, args.field)
    ok, cert = eqspace.member(world, probe, W)
    emit({"subspace": W.as_data()})
    emit({"member": ok, "certificate": None if ok else cert.as_data(args.field),
          "certificate_verified": None if ok else eqspace.check_certificate(W, cert)})


def cmd_solve(args, emit):
    doc = read_json(args.file)
    world, names = world_from_data(doc, args.world)
    S = _support(doc, names)
    fams = [
        eqspace.ColumnFamily(tuple(names.get(a, a) for a in fam["index"]), vector_from_data(world, fam["column"], names, args.field))
        for fam in doc["columns"]
    ]
    b = vector_from_data(world, doc["b"], names, args.field)
    ok, cert = eqspace.solve(world, fams, b, S)
    emit({"solvable": ok, "certificate": None if ok else cert.as_data(args.field)})


def cmd_chain(args, emit):
    world = preset(args.world)
    types = ordered_types(world, args.d)
    t = next(t for t in types if all(code[0] != 0 for code in t.pairs))
    orbit = OrbitDescriptor(frozenset(), default_index(args.d), t)
    chain = eqspace.build_chain(world, orbit, args.field)
    for k, step in enumerate(chain.steps, 1):
        emit({"step": k, "subset": [str(j) for j in step.subset], "dimension": chain.subspaces[k].total_dim})
    emit({"length": chain.length, "strict": chain.is_strict(),
          "upper_bound_for_orbit": eqspace.length_upper_bound(world, orbit),
          "upper_bound_for_power": eqspace.length_upper_bound(world, args.d)})


def cmd_orbits(args, emit):
    world = preset(args.world)
    count = len(ambient_orbits(world, args.d, args.support))
    emit({"world": args.world, "d": args.d, "orbits": count})


def _named_structure(name):
    if name.startswith("pure"):
        return approx.pure_set(int(name[4:]))
    if name.startswith("path"):
        return approx.path(int(name[4:]))
    if name.startswith("w"):
        return approx.SymplecticSpace(int(name[1:]), 2).graph()
    raise UsageError(f"unknown structure {name!r}; use pureN, pathN or wN")


def cmd_approx(args, emit):
    B = _named_structure(args.structure)
    G = approx.aut_group(B)
    emit({
        "structure": args.structure,
        "d": args.d,
        "automorphisms": G.order,
        "endo_dim": approx.endo_dim(B, args.d, args.field, G),
        "orbit_count_2d": approx.orbit_count(B, 2 * args.d, G),
    })


def cmd_symplectic(args, emit):
    if args.action == "counts":
        emit({"d": args.d, "q": args.q,
              "vector_orbit_count": approx.vector_orbit_count(args.d, args.q),
              "symplectic_orbit_count": approx.symplectic_orbit_count(args.d, args.q)})
        return
    if args.file is None:
        raise UsageError("symplectic embed needs a graph file")
    G = structure_from_data(read_json(args.file))
    emb = approx.embed_graph(G, args.n)
    emit({"n": len(next(iter(emb.values()))) // 2 if emb else args.n,
          "embedding": {str(k): list(v) for k, v in emb.items()}})


def _load_automaton(selector, world, field):
    if selector in ("first-adjacent-all", "first"):
        return automata.first_letter_automaton(world, field)
    if selector in ("first-adjacent-second", "second"):
        return automata.second_letter_automaton(world, field)
    return automata.WeightedAutomaton.from_data(world, read_json(selector), field)


def cmd_wofa(args, emit):
    if args.action == "rank-growth":
        world = preset("rado-bit")
        emit({"k": args.k, "ranks": automata.right_derivative_rank(world, args.k)})
        return
    world = preset(args.world)
    if args.action == "run":
        aut = _load_automaton(args.automata[0], world, args.field)
        word = [tuple(x) if isinstance(x, list) else (x,) for x in json.loads(args.word)]
        for letter in word:
            for a in letter:
                if a not in world:
                    world.register(a)
        emit({"word": [list(x) for x in word], "value": args.field.fmt(aut.run(word))})
        return
    if len(args.automata) != 2:
        raise UsageError("wofa equiv needs two automata")
    a1, a2 = (_load_automaton(s, world, args.field) for s in args.automata)
    r = automata.equivalent(a1, a2)
    emit({"equivalent": r.equivalent, "witness": None if r.witness is None else [list(x) for x in r.witness],
          "generators": r.generators, "bound": r.bound,
          "difference": None if r.difference is None else args.field.fmt(r.difference)})


def selftest_extended(emit):
    conf = triangle_free_configuration()
    v = conf.vector
    t0 = time.perf_counter()
    dec = decompose(conf.world, v)
    elapsed = time.perf_counter() - t0
    ok_dec = expand(dec, v.coeffs, v.orbit) == v and len(dec.fresh_atoms) <= 12
    terms, extra = manual_witness(conf)
    ok_manual = expand_witness(terms, v.orbit) == v and all(d.is_valid(conf.world) for _, d in terms)
    emit({"check": "balanced", "ok": is_balanced(v)[0]})
    emit({"check": "decompose", "ok": ok_dec, "cogs": len(dec), "fresh_atoms": len(dec.fresh_atoms)})
    emit({"check": "manual-witness", "ok": ok_manual, "cogs": len(terms)})
    return is_balanced(v)[0] and ok_dec and ok_manual and elapsed < 1.0


def selftest_quick(emit, seed):
    ok = selftest_extended(emit)
    world = preset("order")
    good = len(ambient_orbits(world, 2)) == 3 and len(ambient_orbits(preset("rado-bit"), 2)) == 3
    emit({"check": "orbit-counts", "ok": good})
    w = preset("ordered-rado")
    f, g = automata.first_letter_automaton(w), automata.second_letter_automaton(w)
    r = automata.equivalent(f, g)
    emit({"check": "automata", "ok": (not r.equivalent) and len(r.witness) == 3})
    rng = random.Random(seed)
    a = automata.random_automaton(w, rng)
    same = automata.equivalent(a, a.scaled(2, "1/2")).equivalent
    emit({"check": "scaled-automaton", "ok": same})
    return ok and good and (not r.equivalent) and same


def cmd_selftest(args, emit):
    ok = selftest_extended(emit) if args.suite == "extended-example" else selftest_quick(emit, args.seed)
    emit({"suite": args.suite, "ok": ok})
    return 0 if ok else 1


# ------------------------------------------------------------------ parsing
def _field(text):
    try:
        return parse_field(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--world", default=None, help=f"preset world: {', '.join(PRESETS)}")
    common.add_argument("--field", type=_field, default=parse_field("q"), help="q or p:<prime>")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings in reports")

    p = argparse.ArgumentParser(prog="orbitlin", description="Linear algebra over orbit-finite sets.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("decompose", parents=[common], help="write a balanced vector as a sum of cogs")
    s.add_argument("file")
    s = sub.add_parser("member", parents=[common], help="decide membership in an equivariant subspace")
    s.add_argument("file")
    s = sub.add_parser("solve", parents=[common], help="decide solvability of an orbit-finite system")
    s.add_argument("file")
    s = sub.add_parser("chain", parents=[common], help="build a strict chain of subspaces")
    s.add_argument("--d", type=int, required=True)
    s = sub.add_parser("orbits", parents=[common], help="count orbits of d-tuples")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--support", type=int, nargs="*", default=[])
    s = sub.add_parser("approx", parents=[common], help="endomorphism dimension versus orbit count")
    s.add_argument("action", choices=["endo-dim"])
    s.add_argument("--structure", default="pure2", help="pureN, pathN or wN")
    s.add_argument("--d", type=int, default=1)
    s = sub.add_parser("symplectic", parents=[common], help="symplectic graphs over GF(2)")
    s.add_argument("action", choices=["embed", "counts"])
    s.add_argument("file", nargs="?")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--q", type=int, default=2)
    s = sub.add_parser("wofa", parents=[common], help="weighted orbit-finite automata")
    s.add_argument("action", choices=["run", "equiv", "rank-growth"])
    s.add_argument("automata", nargs="*", help="automaton files or first-adjacent-all / first-adjacent-second")
    s.add_argument("--word", default="[]", help="JSON list of atoms or atom lists")
    s.add_argument("--k", type=int, default=4)
    s = sub.add_parser("selftest", parents=[common], help="run built-in checks")
    s.add_argument("--suite", choices=["extended-example", "quick"], default="quick")
    return p


DEFAULT_WORLD = {"decompose": "ordered-henson-k3", "member": "order", "solve": "order", "chain": "order",
                 "orbits": "order", "wofa": "ordered-rado"}

COMMANDS = {
    "decompose": cmd_decompose,
    "member": cmd_member,
    "solve": cmd_solve,
    "chain": cmd_chain,
    "orbits": cmd_orbits,
    "approx": cmd_approx,
    "symplectic": cmd_symplectic,
    "wofa": cmd_wofa,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.world is None:
        args.world = DEFAULT_WORLD.get(args.verb, "order")
    if args.world not in PRESETS:
        print(f"error: unknown world {args.world!r}", file=sys.stderr)
        return 2
    out = open(args.out, "w") if args.out else sys.stdout
    emit = lambda rec: print(dumps(rec), file=out)  # noqa: E731
    try:
        code = COMMANDS[args.verb](args, emit) or 0
    except OrbitlinError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (UsageError, OSError, KeyError, ValueError, json.JSONDecodeError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    finally:
        if args.out:
            out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
