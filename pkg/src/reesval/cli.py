"""Command-line front end: session files in, JSON reports out.

Session grammar (line oriented, # comments):

    ring { vars: x1 x2 x3; field: QQ; mod: x1*x2 + x3^3; order: grevlex;
           assert: normal domain }
    ideal m = x1, x2, x3
    cmd: gb m
    cmd: check main-a --p p --q m --nmax 3

Reports are deterministic for a fixed --seed: timing fields are only
emitted under --timings so that repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field

from . import groebner
from .errors import ReesvalError, PreconditionError
from .ideals import Ideal
from .monomial import (
    find_min_briancon_skoda,
    integral_closure_power,
    monomial_multiplicity,
    newton_polyhedron,
)
from .multiplicity import (
    krull_dim,
    length_sampler,
    local_multiplicity_via_gr,
    multiplicity_from_table,
    multiplicity_graded,
)
from .poly import Block, GrevLex, Lex, PolyRing, PrimeField, QQ
from .rings import AffineAlgebra, extended_rees_presentation
from .symbolic import ord_at, symbolic_power
from .verify import (
    UniformConstants,
    check_improved_chevalley,
    check_local_zariski_nagata,
    check_main_theorem_A,
    check_order_ideal_theorem_graded,
    check_uniform_izumi_multiplicity,
)

REPORT_VERSION = "1"


@dataclass
class SessionFile:
    ring: dict
    ideals: list  # (name, [poly strings]) in definition order
    commands: list  # token lists

    def render(self):
        parts = []
        fields = []
        fields.append("vars: " + " ".join(self.ring["vars"]))
        fields.append("field: " + self.ring["field"])
        if self.ring.get("mod"):
            fields.append("mod: " + ", ".join(self.ring["mod"]))
        fields.append("order: " + self.ring.get("order", "grevlex"))
        if self.ring.get("assert"):
            fields.append("assert: " + " ".join(self.ring["assert"]))
        parts.append("ring { " + "; ".join(fields) + " }")
        for name, polys in self.ideals:
            parts.append(f"ideal {name} = " + ", ".join(polys))
        for toks in self.commands:
            parts.append("cmd: " + " ".join(toks))
        return "\n".join(parts) + "\n"


def parse_session(text):
    text = re.sub(r"#[^\n]*", "", text)
    ring = None
    ideals = []
    commands = []
    # the ring block may span lines; normalize it first
    m = re.search(r"ring\s*\{([^}]*)\}", text, re.S)
    if not m:
        raise PreconditionError("session needs exactly one ring block")
    if re.search(r"ring\s*\{", text[m.end() :]):
        raise PreconditionError("more than one ring block")
    ring = {"vars": (), "field": "QQ", "mod": [], "order": "grevlex", "assert": []}
    for piece in m.group(1).split(";"):
        piece = piece.strip()
        if not piece:
            continue
        if ":" not in piece:
            raise PreconditionError(f"bad ring field {piece!r}")
        key, _, value = piece.partition(":")
        key, value = key.strip(), value.strip()
        if key == "vars":
            ring["vars"] = tuple(value.split())
        elif key == "field":
            if value != "QQ" and not re.fullmatch(r"Fp\s+\d+", value):
                raise PreconditionError(f"unknown field {value!r}")
            ring["field"] = re.sub(r"\s+", " ", value)
        elif key == "mod":
            ring["mod"] = [p.strip() for p in value.split(",") if p.strip()]
        elif key == "order":
            if not re.fullmatch(r"lex|grevlex|block\s+\d+", value):
                raise PreconditionError(f"unknown order {value!r}")
            ring["order"] = re.sub(r"\s+", " ", value)
        elif key == "assert":
            ring["assert"] = value.split()
        else:
            raise PreconditionError(f"unknown ring field {key!r}")
    if not ring["vars"]:
        raise PreconditionError("ring block needs vars")
    rest = text[: m.start()] + text[m.end() :]
    defined = set()
    for lineno, line in enumerate(rest.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("ideal"):
            m2 = re.fullmatch(r"ideal\s+([A-Za-z_]\w*)\s*=\s*(.+)", line)
            if not m2:
                raise PreconditionError(f"line {lineno}: bad ideal definition")
            name = m2.group(1)
            if name in defined:
                raise PreconditionError(f"line {lineno}: duplicate ideal {name!r}")
            defined.add(name)
            ideals.append((name, [p.strip() for p in m2.group(2).split(",")]))
        elif line.startswith("cmd:"):
            toks = line[4:].split()
            if not toks:
                raise PreconditionError(f"line {lineno}: empty command")
            commands.append(toks)
        else:
            raise PreconditionError(f"line {lineno}: unrecognized line {line!r}")
    return SessionFile(ring=ring, ideals=ideals, commands=commands)


def _build_algebra(ring_spec):
    if ring_spec["field"] == "QQ":
        fld = QQ
    else:
        fld = PrimeField(int(ring_spec["field"].split()[1]))
    order_spec = ring_spec.get("order", "grevlex")
    if order_spec == "lex":
        order = Lex()
    elif order_spec.startswith("block"):
        order = Block(int(order_spec.split()[1]))
    else:
        order = GrevLex()
    ring = PolyRing(ring_spec["vars"], fld, order)
    modulus = tuple(ring.parse(p) for p in ring_spec.get("mod", []))
    return AffineAlgebra(ring, modulus, asserted=tuple(ring_spec.get("assert", [])))


def _flags(tokens):
    """Split positional arguments from --flag value pairs."""
    pos, flags = [], {}
    i = 0
    while i < len(tokens):
        if tokens[i].startswith("--"):
            if i + 1 >= len(tokens):
                raise PreconditionError(f"flag {tokens[i]} needs a value")
            flags[tokens[i][2:]] = tokens[i + 1]
            i += 2
        else:
            pos.append(tokens[i])
            i += 1
    return pos, flags


class _Session:
    def __init__(self, session, seed):
        self.algebra = _build_algebra(session.ring)
        self.seed = seed
        self.ideals = {}
        for name, polys in session.ideals:
            ring = self.algebra.ring
            self.ideals[name] = Ideal(
                self.algebra, tuple(ring.parse(p) for p in polys)
            )

    def ideal(self, name):
        if name not in self.ideals:
            raise PreconditionError(f"undefined ideal {name!r}")
        return self.ideals[name]

    def poly(self, text):
        return self.algebra.ring.parse(text)

    # -- commands ---------------------------------------------------------

    def cmd_gb(self, pos, flags):
        return {"basis": [str(g) for g in self.ideal(pos[0]).gb()]}

    def cmd_power(self, pos, flags):
        J = self.ideal(pos[0]).power(int(pos[1]))
        return {"generators": [str(g) for g in J.gb()]}

    def cmd_saturate(self, pos, flags):
        J, steps = self.ideal(pos[0]).saturate(self.poly(pos[1]))
        return {"generators": [str(g) for g in J.gb()], "steps": steps}

    def cmd_symbolic_power(self, pos, flags):
        sep = flags.get("separator", "auto")
        J, cert = symbolic_power(
            self.algebra, self.ideal(pos[0]), int(pos[1]), separator=sep,
            seed=self.seed,
        )
        return {"generators": [str(g) for g in J.gb()], "certificate": cert}

    def cmd_ord(self, pos, flags):
        n, confirmed = ord_at(
            self.algebra, self.ideal(pos[0]), self.poly(pos[1]),
            nmax=int(flags.get("nmax", 12)), seed=self.seed,
        )
        return {"ord": n, "confirmed": confirmed}

    def cmd_multiplicity(self, pos, flags):
        f = self.poly(flags["f"]) if "f" in flags else None
        return {"e": local_multiplicity_via_gr(self.algebra, f)}

    def cmd_graded_multiplicity(self, pos, flags):
        return {"e": multiplicity_graded(self.algebra)}

    def cmd_length_table(self, pos, flags):
        f = self.poly(flags["f"]) if "f" in flags else None
        N = int(pos[1])
        table = length_sampler(self.algebra, self.ideal(pos[0]), f=f, N=N)
        dim = krull_dim(Ideal(self.algebra, (f,) if f is not None else ()))
        e, stabilized = multiplicity_from_table(table, dim)
        return {
            "table": [[n, l] for n, l in table],
            "dim": dim,
            "e": e,
            "stabilized": stabilized,
        }

    def cmd_newton(self, pos, flags):
        np_ = newton_polyhedron(self.ideal(pos[0]))
        return {
            "generators": [list(e) for e in np_.generators],
            "facets": [
                {"normal": list(f.normal), "offset": f.offset, "bounded": f.bounded}
                for f in np_.facets
            ],
        }

    def cmd_closure(self, pos, flags):
        J = integral_closure_power(self.ideal(pos[0]), int(pos[1]))
        return {"generators": [str(g) for g in J.gens]}

    def cmd_monomial_multiplicity(self, pos, flags):
        return {"e": monomial_multiplicity(self.ideal(pos[0]))}

    def cmd_briancon_skoda(self, pos, flags):
        B = find_min_briancon_skoda(self.ideal(pos[0]), int(pos[1]))
        return {"B": B if B is not None else f"not found <= {pos[1]}"}

    def cmd_rees(self, pos, flags):
        pres = extended_rees_presentation(self.algebra, self.ideal(pos[0]))
        return {
            "variables": list(pres.algebra.ring.names),
            "relations": [str(g) for g in pres.algebra.modulus],
            "weights": list(pres.weights),
        }

    def cmd_translate_origin(self, pos, flags):
        coords = [c.strip() for c in pos[0].split(",")]
        ring = self.algebra.ring
        if len(coords) != ring.nvars:
            raise PreconditionError("one coordinate per variable")
        images = [
            ring.gen(n) + ring.field.coerce(c) for n, c in zip(ring.names, coords)
        ]
        new_mod = tuple(
            m.substitute(ring, images) for m in self.algebra.modulus
        )
        self.algebra = AffineAlgebra(ring, new_mod, asserted=self.algebra.asserted)
        self.ideals = {
            name: Ideal(
                self.algebra, tuple(g.substitute(ring, images) for g in J.gens)
            )
            for name, J in self.ideals.items()
        }
        return {"modulus": [str(m) for m in new_mod]}

    def cmd_check(self, pos, flags):
        kind = pos[0]
        if kind == "zariski-nagata":
            report = check_local_zariski_nagata(
                self.algebra, self.ideal(flags["p"]), self.ideal(flags["q"]),
                int(flags.get("nmax", 3)), seed=self.seed,
            )
        elif kind == "main-a":
            eS = int(flags["eS"]) if "eS" in flags else None
            report = check_main_theorem_A(
                self.algebra, self.ideal(flags["p"]), self.ideal(flags["q"]),
                int(flags.get("nmax", 2)), eS=eS, seed=self.seed,
            )
        elif kind == "izumi-mult":
            fs = [self.poly(f) for f in flags["fs"].split(";")]
            C = int(flags["C"]) if "C" in flags else None
            report = check_uniform_izumi_multiplicity(
                self.algebra, self.ideal(flags["q"]), fs, C=C, seed=self.seed
            )
        elif kind == "chevalley":
            constants = UniformConstants(
                A=int(flags.get("A", 0)), B=int(flags.get("B", 0)),
                C=int(flags.get("C", 1)), E=int(flags.get("E", 1)),
                e=int(flags.get("e", 1)),
                provenance={"all": "user"},
            )
            report = check_improved_chevalley(
                self.algebra, self.ideal(flags["p"]), self.ideal(flags["q"]),
                constants, int(flags.get("nmax", 2)), seed=self.seed,
            )
        elif kind == "order-ideal-graded":
            report = check_order_ideal_theorem_graded(
                self.algebra, self.poly(flags["F"])
            )
        else:
            raise PreconditionError(f"unknown check {kind!r}")
        return report.to_dict()


_COMMANDS = {
    "gb": "cmd_gb",
    "power": "cmd_power",
    "saturate": "cmd_saturate",
    "symbolic-power": "cmd_symbolic_power",
    "ord": "cmd_ord",
    "multiplicity": "cmd_multiplicity",
    "graded-multiplicity": "cmd_graded_multiplicity",
    "length-table": "cmd_length_table",
    "newton": "cmd_newton",
    "closure": "cmd_closure",
    "monomial-multiplicity": "cmd_monomial_multiplicity",
    "briancon-skoda": "cmd_briancon_skoda",
    "rees": "cmd_rees",
    "translate-origin": "cmd_translate_origin",
    "check": "cmd_check",
}


def run(session, seed=0, budget=None, fail_fast=False, timings=False):
    """Execute a parsed session; returns (report dict, ok flag)."""
    if budget is not None:
        groebner.set_default_budget(budget)
    state = _Session(session, seed)
    results = []
    ok = True
    for toks in session.commands:
        name, args = toks[0], toks[1:]
        entry = {"name": name, "args": args}
        start = time.monotonic()
        try:
            if name not in _COMMANDS:
                raise PreconditionError(f"unknown command {name!r}")
            pos, flags = _flags(args)
            result = getattr(state, _COMMANDS[name])(pos, flags)
            entry["result"] = result
            if name == "check":
                entry["verdict"] = "pass" if result["passed"] else "fail"
                if not result["passed"]:
                    ok = False
        except ReesvalError as exc:
            entry["error"] = str(exc)
            ok = False
            if fail_fast:
                results.append(entry)
                break
        finally:
            if timings:
                entry["timing_ms"] = round(1000 * (time.monotonic() - start), 3)
        results.append(entry)
    report = {
        "version": REPORT_VERSION,
        "ring": {
            "vars": list(session.ring["vars"]),
            "field": session.ring["field"],
            "mod": list(session.ring.get("mod", [])),
            "order": session.ring.get("order", "grevlex"),
            "assert": list(session.ring.get("assert", [])),
        },
        "seed": seed,
        "commands": results,
    }
    return report, ok


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="reesval",
        description="run a commutative-algebra session file and report results",
    )
    parser.add_argument("session", help="path to a session file")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=None,
                        help="Groebner reduction-step cap")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="write the JSON report here")
    parser.add_argument("--fail-fast", action="store_true")
    parser.add_argument("--timings", action="store_true",
                        help="include timing fields (breaks byte-reproducibility)")
    args = parser.parse_args(argv)

    with open(args.session, encoding="utf-8") as fh:
        text = fh.read()
    try:
        session = parse_session(text)
    except ReesvalError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    report, ok = run(
        session, seed=args.seed, budget=args.budget,
        fail_fast=args.fail_fast, timings=args.timings,
    )
    blob = json.dumps(report, indent=2, sort_keys=True)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(blob + "\n")
    print(blob)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
