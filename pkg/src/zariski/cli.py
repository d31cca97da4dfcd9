"""Command-line front end: ``zariski <command> --job job.json``.

Exit codes: 0 success or true, 1 checked false, 2 usage or parse error,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from contextlib import nullcontext

import jsonschema

from . import certs as certs_mod
from .certs import AnnPowerWitness, BezoutCert, RadicalCert
from .errors import InvariantError, PreconditionError, ResourceError, UsageError
from .lattice import (
    UNKNOWN,
    LatticeElt,
    d_of,
    eq_certificates,
    first_failure,
    is_basic_open,
    lat_join,
    lat_meet,
    leq_certificates,
    normalize,
    support_check,
)
from .localization import LocRing, lemma2_iso, loc_eq_witness, simplify
from .sampling import compatible_family, incompatible_family, random_elem, random_loc_elem
from .sheaf import check_compatible, cover_check, disagreement, pullback_instance_check
from .structure import glue_trace, make_section, restrict_basic, section_eq, top_roundtrip
from .syntax import parse_elem, parse_ring

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

_ELEM = {"type": "string"}
_LIST = {"type": "array", "items": _ELEM}
_FRAC = {
    "type": "object",
    "properties": {"num": _ELEM, "exp": {"type": "integer", "minimum": 0}},
    "required": ["num"],
    "additionalProperties": False,
}
_PRESENTED = {
    "type": "object",
    "properties": {"parts": _LIST, "sections": {"type": "array", "items": _FRAC}},
    "required": ["parts", "sections"],
    "additionalProperties": False,
}
_RING = {
    "oneOf": [
        {"type": "string"},
        {
            "type": "object",
            "properties": {
                "kind": {"enum": ["integers", "modular", "polynomial"]},
                "modulus": {"type": "integer", "minimum": 2},
                "variables": {"type": "array", "items": {"type": "string"}, "minItems": 1},
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
    ]
}
_CERT = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["radical", "bezout", "ann"]},
        "x": _ELEM,
        "f": _ELEM,
        "gens": _LIST,
        "coeffs": _LIST,
        "k": {"type": "integer", "minimum": 0},
    },
    "required": ["kind"],
}

REQUIRED = {
    "normalize": ["a"],
    "lat-eq": ["a", "b"],
    "lat-leq": ["a", "b"],
    "join": ["a", "b"],
    "meet": ["a", "b"],
    "support-check": [],
    "cover-check": ["target", "parts"],
    "is-basic": ["a"],
    "loc-eq": ["den", "a", "b"],
    "restrict": ["f", "g", "section"],
    "glue": ["h", "parts", "sections"],
    "section-eq": ["over", "s", "t"],
    "top-roundtrip": ["parts"],
    "lemma2-test": ["case", "f"],
    "sheaf-test": ["h", "f", "g"],
    "verify-cert": ["cert"],
}

JOB_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "zariski job",
    "type": "object",
    "properties": {
        "ring": _RING,
        "command": {"enum": sorted(REQUIRED)},
        "a": {"anyOf": [_LIST, _FRAC]},
        "b": {"anyOf": [_LIST, _FRAC]},
        "target": _LIST,
        "parts": _LIST,
        "over": _LIST,
        "pairs": {"type": "array", "items": {"type": "array", "items": _ELEM, "minItems": 2, "maxItems": 2}},
        "samples": _LIST,
        "den": _ELEM,
        "h": _ELEM,
        "f": _ELEM,
        "g": _ELEM,
        "section": _FRAC,
        "sections": {"type": "array", "items": _FRAC},
        "s": _PRESENTED,
        "t": _PRESENTED,
        "case": {"enum": ["iterated", "unit", "mutual"]},
        "seed": {"type": "integer"},
        "count": {"type": "integer", "minimum": 0},
        "cert": _CERT,
    },
    "required": ["ring", "command"],
    "additionalProperties": False,
    "allOf": [
        {
            "if": {"properties": {"command": {"const": cmd}}},
            "then": {
                "required": req,
                "properties": {k: (_FRAC if cmd == "loc-eq" else _LIST) for k in ("a", "b") if k in req},
            },
        }
        for cmd, req in sorted(REQUIRED.items())
        if req
    ],
}

_RANDOMIZED = {"support-check", "lemma2-test", "sheaf-test", "top-roundtrip"}


class _Job:
    def __init__(self, data, args):
        self.data = data
        self.args = args
        self.ring = parse_ring(data["ring"])
        self.out = []

    def elem(self, text):
        return parse_elem(text, self.ring)

    def elems(self, key):
        return tuple(self.elem(t) for t in self.data[key])

    def lattice(self, key):
        return LatticeElt(self.ring, self.elems(key))

    def frac(self, loc, obj):
        return loc(self.elem(obj["num"]), obj.get("exp", 0))

    def rng(self):
        seed = self.args.seed if self.args.seed is not None else self.data.get("seed")
        if seed is None:
            raise UsageError(f"command {self.data['command']} needs a seed (job 'seed' or --seed)")
        return random.Random(seed)

    def count(self, default):
        if self.args.samples is not None:
            return self.args.samples
        return self.data.get("count", default)

    def emit(self, line=""):
        self.out.append(line)

    def cert(self, c, always=False, label="cert"):
        if always or self.args.verbose_certs:
            self.emit(label + " " + json.dumps(cert_to_json(c), sort_keys=True))


def cert_to_json(c):
    if isinstance(c, RadicalCert):
        return {"kind": "radical", "x": str(c.x), "gens": [str(g) for g in c.gens], "k": c.k,
                "coeffs": [str(a) for a in c.coeffs]}
    if isinstance(c, BezoutCert):
        return {"kind": "bezout", "gens": [str(g) for g in c.gens], "coeffs": [str(a) for a in c.coeffs]}
    if isinstance(c, AnnPowerWitness):
        return {"kind": "ann", "f": str(c.f), "x": str(c.x), "k": c.k}
    raise TypeError(c)


def cert_from_json(obj, ring):
    def el(t):
        return parse_elem(t, ring)

    kind = obj["kind"]
    try:
        with certs_mod.unaudited():
            if kind == "radical":
                return RadicalCert(el(obj["x"]), tuple(map(el, obj["gens"])), obj["k"], tuple(map(el, obj["coeffs"])))
            if kind == "bezout":
                return BezoutCert(ring, tuple(map(el, obj["gens"])), tuple(map(el, obj["coeffs"])))
            return AnnPowerWitness(el(obj["f"]), el(obj["x"]), obj["k"])
    except KeyError as exc:
        raise UsageError(f"certificate of kind {kind} is missing {exc}") from None


def _radical_text(g, gens):
    return f"{g} ∉ √⟨{', '.join(str(x) for x in gens)}⟩"


def _order_failure(a, b):
    g = first_failure(a, b)
    return _radical_text(g, b.gens) if g is not None else None


# ------------------------------------------------------------- commands


def cmd_normalize(job):
    job.emit(str(normalize(job.lattice("a"))))
    return EXIT_OK


def cmd_lat_eq(job):
    a, b = job.lattice("a"), job.lattice("b")
    res = eq_certificates(a, b)
    if res is None:
        job.emit(f"false: {_order_failure(a, b) or _order_failure(b, a)}")
        return EXIT_FALSE
    job.emit("true")
    for label, side in (("a<=b", res[0]), ("b<=a", res[1])):
        for c in side:
            job.cert(c, always=True, label=label)
    return EXIT_OK


def cmd_lat_leq(job):
    a, b = job.lattice("a"), job.lattice("b")
    res = leq_certificates(a, b)
    if res is None:
        job.emit(f"false: {_order_failure(a, b)}")
        return EXIT_FALSE
    job.emit("true")
    for c in res:
        job.cert(c, always=True)
    return EXIT_OK


def cmd_join(job):
    job.emit(str(lat_join(job.lattice("a"), job.lattice("b"))))
    return EXIT_OK


def cmd_meet(job):
    job.emit(str(lat_meet(job.lattice("a"), job.lattice("b"))))
    return EXIT_OK


def cmd_support_check(job):
    if "pairs" in job.data:
        pairs = [(job.elem(f), job.elem(g)) for f, g in job.data["pairs"]]
    else:
        rng = job.rng()
        pairs = [(random_elem(job.ring, rng), random_elem(job.ring, rng)) for _ in range(job.count(1000))]
    rep = support_check(job.ring, pairs)
    job.out.extend(rep.lines())
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_cover_check(job):
    target, parts = job.lattice("target"), job.elems("parts")
    cover = cover_check(target, parts)
    if cover is None:
        joined = LatticeElt(job.ring, parts)
        job.emit(f"false: {_order_failure(joined, target) or _order_failure(target, joined)}")
        return EXIT_FALSE
    job.emit("true")
    for c in cover.cert_down + cover.cert_up:
        job.cert(c, always=True)
    return EXIT_OK


def cmd_is_basic(job):
    f = is_basic_open(job.lattice("a"))
    if f is UNKNOWN:
        job.emit("unknown")
        return EXIT_FALSE
    job.emit(str(f))
    return EXIT_OK


def cmd_loc_eq(job):
    loc = LocRing(job.elem(job.data["den"]))
    w = loc_eq_witness(job.frac(loc, job.data["a"]), job.frac(loc, job.data["b"]))
    if w is None:
        job.emit("false")
        return EXIT_FALSE
    job.emit(f"true k={w.k}")
    job.cert(w, always=True)
    return EXIT_OK


def cmd_restrict(job):
    f, g = job.elem(job.data["f"]), job.elem(job.data["g"])
    s = job.frac(LocRing(f), job.data["section"])
    try:
        r = restrict_basic(s, g)
    except PreconditionError:
        job.emit(f"false: {_radical_text(g, [f])}")
        return EXIT_FALSE
    job.emit(str(r))
    return EXIT_OK


def _presented(job, obj):
    parts = tuple(job.elem(p) for p in obj["parts"])
    sections = tuple(job.frac(LocRing(p), s) for p, s in zip(parts, obj["sections"]))
    if len(sections) != len(parts):
        raise UsageError("sections and parts differ in length")
    return parts, sections


def cmd_glue(job):
    h = job.elem(job.data["h"])
    parts, sections = _presented(job, job.data)
    cover = cover_check(d_of(h), parts)
    if cover is None:
        job.emit(f"false: {_order_failure(d_of(h), LatticeElt(job.ring, parts)) or 'parts not below D(h)'}")
        return EXIT_FALSE
    bad = disagreement(cover, sections)
    if bad is not None:
        job.emit(f"false: family incompatible at parts {bad}")
        return EXIT_FALSE
    trace = glue_trace(h, parts, sections)
    job.emit(str(simplify(trace.result)))
    if job.args.verbose_certs:
        job.emit(f"trace d={trace.d} N={trace.n} D={trace.big_d} t={trace.t}")
        job.emit("bezout [" + ", ".join(str(e) for e in trace.bezout) + "]")
        for c in cover.cert_down + cover.cert_up:
            job.cert(c)
        for _, w in check_compatible(cover, sections).agreements:
            job.cert(w)
    return EXIT_OK


def cmd_section_eq(job):
    over = job.lattice("over")
    s = make_section(over, *_presented(job, job.data["s"]))
    t = make_section(over, *_presented(job, job.data["t"]))
    same = section_eq(s, t)
    job.emit("true" if same else "false")
    return EXIT_OK if same else EXIT_FALSE


def cmd_top_roundtrip(job):
    parts = job.elems("parts")
    if "samples" in job.data:
        samples = job.elems("samples")
    else:
        rng = job.rng()
        samples = [random_elem(job.ring, rng) for _ in range(job.count(100))]
    rep = top_roundtrip(job.ring, parts, samples)
    job.out.extend(rep.lines())
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_lemma2_test(job):
    rng = job.rng()
    f = job.elem(job.data["f"])
    case = job.data["case"]
    args = (f,) if case == "unit" else (f, job.elem(job.data.get("g", "1")))
    iso = lemma2_iso(case, *args)
    n = job.count(100)
    src = [_random_in(iso.source, rng) for _ in range(n)]
    tgt = [_random_in(iso.target, rng) for _ in range(n)]
    rep = iso.check(src, tgt)
    job.out.extend(rep.lines())
    return EXIT_OK if rep.ok else EXIT_FALSE


def _random_in(loc, rng):
    if isinstance(loc, LocRing):
        return random_loc_elem(loc, rng)
    return loc(random_elem(loc.ring, rng), rng.randint(0, 2), rng.randint(0, 2))


def cmd_sheaf_test(job):
    rng = job.rng()
    h, f, g = (job.elem(job.data[k]) for k in ("h", "f", "g"))
    n = job.count(50)
    pairs = [compatible_family(h, (f, g), rng)[1] + (True,) for _ in range(n)]
    if not LocRing(f * g).is_zero_ring:
        pairs += [incompatible_family(h, (f, g), rng) + (False,) for _ in range(n)]
    rep = pullback_instance_check(f, g, h, pairs)
    job.out.extend(rep.lines())
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_verify_cert(job):
    c = cert_from_json(job.data["cert"], job.ring)
    ok = c.verify()
    job.emit("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FALSE


COMMANDS = {
    "normalize": cmd_normalize,
    "lat-eq": cmd_lat_eq,
    "lat-leq": cmd_lat_leq,
    "join": cmd_join,
    "meet": cmd_meet,
    "support-check": cmd_support_check,
    "cover-check": cmd_cover_check,
    "is-basic": cmd_is_basic,
    "loc-eq": cmd_loc_eq,
    "restrict": cmd_restrict,
    "glue": cmd_glue,
    "section-eq": cmd_section_eq,
    "top-roundtrip": cmd_top_roundtrip,
    "lemma2-test": cmd_lemma2_test,
    "sheaf-test": cmd_sheaf_test,
    "verify-cert": cmd_verify_cert,
}


def run_command(data, args):
    """Validate and execute one job; returns ``(exit_code, output_lines)``."""
    try:
        jsonschema.validate(data, JOB_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<job>"
        return EXIT_USAGE, [f"error: invalid job at {path}: {exc.message}"]
    try:
        job = _Job(data, args)
        watch = certs_mod.audit(keep=False) if args.verify_certs else nullcontext()
        with watch as audit:
            code = COMMANDS[data["command"]](job)
        if audit is not None:
            bad = audit.failures()
            job.emit(f"certificates: {audit.total()} emitted, {audit.total() - len(bad)} verified")
            if bad:
                return EXIT_INTERNAL, job.out
        return code, job.out
    except (InvariantError, ResourceError) as exc:
        return EXIT_INTERNAL, [f"internal error: {exc}"]
    except (UsageError, PreconditionError) as exc:
        return EXIT_USAGE, [f"error: {exc}"]


def build_parser():
    p = argparse.ArgumentParser(prog="zariski", description="Zariski lattices, localizations and gluing.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--job", required=True, help="path to a JSON job file ('-' for stdin)")
    p.add_argument("--seed", type=int, help="seed for randomized suites (overrides the job)")
    p.add_argument("--samples", type=int, help="sample count for randomized suites")
    p.add_argument("--verbose-certs", action="store_true", help="print every certificate")
    p.add_argument("--verify-certs", action="store_true", help="re-check all emitted certificates")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.job == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.job, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read job: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not isinstance(data, dict):
        print("error: job must be a JSON object", file=sys.stderr)
        return EXIT_USAGE
    if data.setdefault("command", args.command) != args.command:
        print(f"error: job is for {data['command']!r}, not {args.command!r}", file=sys.stderr)
        return EXIT_USAGE
    code, lines = run_command(data, args)
    stream = sys.stderr if code in (EXIT_USAGE, EXIT_INTERNAL) and lines and lines[0].startswith(("error", "internal")) else sys.stdout
    for line in lines:
        print(line, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
