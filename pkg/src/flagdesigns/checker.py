"""End-to-end verification of a design, its group and an invariant partition.

Each stage records ``pass``, ``fail``, ``absent`` (input missing) or
``not evaluated`` (a prerequisite did not pass), together with the computed
values and a witness. The report never claims an isomorphism: it matches
parameters and verified structure only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .actions import (
    BlockSystem,
    class_stabilizer_restricted,
    induced_action_on_classes,
    is_2_transitive,
    is_primitive,
    is_transitive,
)
from .catalog import match_catalog
from .designfile import DesignFile, read_design
from .designs import (
    AutomorphismError,
    DesignError,
    IncidenceStructure,
    check_automorphisms,
    flag_orbit_size,
    induced_design,
    is_2design,
    is_flag_transitive,
    overlap_number,
    sigma_of_block_profile,
    trace_profile,
)
from .params import type1_params, type2_params
from .perm import Permutation, PermutationGroup

PASS, FAIL, ABSENT, SKIPPED = "pass", "fail", "absent", "not evaluated"

STAGES = (
    "two_design",
    "symmetric",
    "automorphisms",
    "flag_transitive",
    "partition",
    "trace_profile",
    "overlap",
    "gate_k_bound",
    "gate_k0",
    "induced_designs",
    "catalog",
    "class_action_primitive",
    "class_action_flag_transitive",
    "sigma_two_transitive",
    "sigma_profile",
)

HYPOTHESES = ("two_design", "symmetric", "flag_transitive", "partition", "trace_profile",
              "overlap", "gate_k_bound", "gate_k0")

CONCLUSION_CASES = {
    (45, 12, 3): ("case-1", "parameters (45,12,3): the first case of the classification "
                            "(flag-transitive 2-(45,12,3) design)"),
    (96, 20, 4): ("case-2", "parameters (96,20,4): the second case of the classification "
                            "(one of the four flag-transitive 2-(96,20,4) designs)"),
}


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Permutation):
        return obj.to_cycles()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(x) for x in items]
    return obj


@dataclass
class Stage:
    name: str
    status: str
    detail: str = ""
    values: dict = field(default_factory=dict)
    witness: Any = None

    def as_dict(self) -> dict:
        return {"status": self.status, "detail": self.detail,
                "values": _jsonable(self.values), "witness": _jsonable(self.witness)}


@dataclass
class ClassificationReport:
    stages: dict[str, Stage]
    conclusion: str
    conclusion_text: str
    notes: list[str] = field(default_factory=list)

    def status(self, name: str) -> str:
        return self.stages[name].status

    def value(self, name: str, key: str):
        return self.stages[name].values.get(key)

    def hypotheses_hold(self) -> bool:
        return all(self.stages[h].status == PASS for h in HYPOTHESES)

    def as_dict(self) -> dict:
        return {
            "stages": {n: s.as_dict() for n, s in self.stages.items()},
            "hypotheses_hold": self.hypotheses_hold(),
            "conclusion": self.conclusion,
            "conclusion_text": self.conclusion_text,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        for name, st in self.stages.items():
            line = f"{name:<30} {st.status}"
            if st.detail:
                line += f"  {st.detail}"
            lines.append(line)
        lines.append("")
        lines.append(f"conclusion: {self.conclusion} - {self.conclusion_text}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines) + "\n"

    def render(self) -> str:
        """Text report followed by the machine-readable section."""
        return self.to_text() + "\n--- machine-readable ---\n" + self.to_json() + "\n"

    @staticmethod
    def parse_machine_section(text: str) -> dict:
        """Recover the JSON dict from :meth:`render` output."""
        _, _, tail = text.partition("--- machine-readable ---\n")
        return json.loads(tail)


class _Pipeline:
    def __init__(self, design: IncidenceStructure, group: PermutationGroup | None,
                 sigma: BlockSystem | None):
        self.design = design
        self.group = group
        self.sigma = sigma
        self.stages: dict[str, Stage] = {}
        self.notes: list[str] = []

    def ok(self, *names: str) -> bool:
        return all(self.stages[n].status == PASS for n in names)

    def put(self, name, status, detail="", witness=None, **values):
        self.stages[name] = Stage(name, status, detail, values, witness)

    def skip(self, name, reason):
        self.put(name, SKIPPED, reason)

    def run(self) -> ClassificationReport:
        D, G, sigma = self.design, self.group, self.sigma

        try:
            lam = is_2design(D)
            k = D.k
            r = lam * (D.v - 1) // (k - 1)
            self.put("two_design", PASS, f"2-({D.v},{k},{lam}), b={D.b}, r={r}",
                     v=D.v, b=D.b, k=k, r=r, lam=lam)
        except DesignError as exc:
            self.put("two_design", FAIL, str(exc), witness=exc.witness, v=D.v, b=D.b)
            lam = k = r = None

        if self.ok("two_design"):
            sym = D.b == D.v
            self.put("symmetric", PASS if sym else FAIL,
                     f"b={D.b} {'=' if sym else '!='} v={D.v}", witness=None if sym else [D.b, D.v])
        else:
            self.skip("symmetric", "needs two_design")

        if G is None:
            self.put("automorphisms", ABSENT, "no group supplied")
            self.put("flag_transitive", ABSENT, "no group supplied")
        else:
            try:
                check_automorphisms(D, G.generators)
                self.put("automorphisms", PASS, f"{len(G.generators)} generators preserve the blocks",
                         group_order=G.order())
            except AutomorphismError as exc:
                g, blk = exc.witness
                self.put("automorphisms", FAIL, str(exc), witness=[g, blk])
            if self.ok("two_design", "automorphisms"):
                flags = sum(len(b) for b in D.blocks)
                size = flag_orbit_size(D, G)
                self.put("flag_transitive", PASS if size == flags else FAIL,
                         f"flag orbit {size} of {flags} flags", flag_orbit=size, flags=flags)
            else:
                self.skip("flag_transitive", "needs two_design and automorphisms")

        if sigma is None:
            self.put("partition", ABSENT, "no partition supplied")
        elif sigma.degree != D.v:
            self.put("partition", FAIL, f"partition covers {sigma.degree} points, v={D.v}")
        else:
            nontrivial = sigma.is_nontrivial()
            invariant = None
            if G is not None and self.ok("automorphisms"):
                invariant = sigma.is_invariant(G)
            good = nontrivial and invariant is not False
            detail = f"d={sigma.num_classes} classes of size c={sigma.class_size}"
            witness = None
            if invariant is None:
                detail += "; invariance not checked (no usable group)"
            elif not invariant:
                witness = next(g for g in G.generators if not sigma.is_invariant([g]))
                detail += f"; generator {witness.to_cycles()} breaks the partition"
            if not nontrivial:
                detail += "; partition is trivial"
            self.put("partition", PASS if good else FAIL, detail, witness=witness,
                     c=sigma.class_size, d=sigma.num_classes, nontrivial=nontrivial,
                     invariant=invariant)

        profile = None
        if sigma is not None and sigma.degree == D.v and self.ok("two_design"):
            try:
                profile = trace_profile(D, sigma)
                self.put("trace_profile", PASS, f"k0={profile.k0}", k0=profile.k0)
            except DesignError as exc:
                self.put("trace_profile", FAIL, str(exc), witness=exc.witness)
        else:
            self.skip("trace_profile", "needs two_design and a partition")

        theta = None
        if self.ok("trace_profile"):
            try:
                theta = overlap_number(D, sigma).theta
                self.put("overlap", PASS, f"theta={theta}", theta=theta,
                         theta_divides_lambda=lam % theta == 0)
            except DesignError as exc:
                self.put("overlap", FAIL, str(exc), witness=exc.witness)
        else:
            self.skip("overlap", "needs trace_profile")

        if self.ok("two_design"):
            bound = Fraction(lam * (lam - 3), 2)
            self.put("gate_k_bound", PASS if k > bound else FAIL,
                     f"k={k} > lambda(lambda-3)/2={bound}", bound=bound)
        else:
            self.skip("gate_k_bound", "needs two_design")

        if profile is not None:
            k0 = profile.k0
            detail = f"k0={k0} >= 3"
            if lam == 2:
                detail += "; lambda=2 forces k0=2, outside the k0 >= 3 scope"
            self.put("gate_k0", PASS if k0 >= 3 else FAIL, detail, k0=k0)
        else:
            self.skip("gate_k0", "needs trace_profile")

        induced: list[IncidenceStructure] = []
        if self.ok("overlap", "gate_k0"):
            try:
                induced = [induced_design(D, sigma, i, lam) for i in range(sigma.num_classes)]
                c, k0 = sigma.class_size, profile.k0
                self.put("induced_designs", PASS,
                         f"every class carries a 2-({c},{k0},{lam // theta}) design",
                         c=c, k0=k0, lam=lam // theta, blocks=induced[0].b)
            except DesignError as exc:
                self.put("induced_designs", FAIL, str(exc), witness=exc.witness)
        else:
            self.skip("induced_designs", "needs overlap and k0 >= 3")

        if self.ok("induced_designs"):
            matches = match_catalog(sigma.class_size, profile.k0, lam, theta)
            self.put("catalog", PASS if matches else FAIL,
                     ", ".join(m.label for m in matches) or "no catalogued case",
                     matches=[m.label for m in matches])
        else:
            self.skip("catalog", "needs induced_designs")

        group_ready = (G is not None and self.ok("flag_transitive", "partition")
                       and self.stages["partition"].values.get("invariant"))
        if group_ready and self.ok("induced_designs"):
            prim, ft = [], []
            for i in range(sigma.num_classes):
                action = class_stabilizer_restricted(G, sigma, i)
                target = action.target
                prim.append(is_transitive(target) and is_primitive(target))
                ft.append(is_flag_transitive(induced[i], target))
            self.put("class_action_primitive", PASS if all(prim) else FAIL,
                     f"primitive on {sum(prim)} of {len(prim)} classes", per_class=prim)
            self.put("class_action_flag_transitive", PASS if all(ft) else FAIL,
                     f"flag-transitive on {sum(ft)} of {len(ft)} induced designs", per_class=ft)
        else:
            reason = "needs a flag-transitive group, an invariant partition and induced designs"
            self.skip("class_action_primitive", reason)
            self.skip("class_action_flag_transitive", reason)

        if group_ready:
            act = induced_action_on_classes(G, sigma)
            two = sigma.num_classes >= 2 and is_2_transitive(act.target)
            self.put("sigma_two_transitive", PASS if two else FAIL,
                     f"action on {sigma.num_classes} classes has order {act.target.order()}, "
                     f"kernel order {act.kernel_order}",
                     order=act.target.order(), kernel_order=act.kernel_order)
        else:
            self.skip("sigma_two_transitive", "needs a flag-transitive group and an invariant partition")

        if self.ok("trace_profile"):
            hist = sigma_of_block_profile(D, sigma)
            detail = "blocks meet " + ", ".join(f"{m} classes: {n}" for m, n in sorted(hist.items()))
            self.put("sigma_profile", PASS, detail, histogram=dict(sorted(hist.items())))
        else:
            self.skip("sigma_profile", "needs trace_profile")

        conclusion, text = self._conclusion(lam, k)
        return ClassificationReport(self.stages, conclusion, text, self.notes)

    def _conclusion(self, lam, k):
        missing = [h for h in HYPOTHESES if self.stages[h].status != PASS]
        if missing:
            absent = [h for h in missing if self.stages[h].status == ABSENT]
            if absent:
                self.notes.append("group/partition absent: " + ", ".join(absent)
                                  + " and dependent stages not evaluated")
            return "outside-hypotheses", "hypotheses not all verified: " + ", ".join(missing)
        v = self.design.v
        self.notes.append("parameters and verified structure only; no isomorphism test is made")
        if (v, k, lam) in CONCLUSION_CASES:
            return CONCLUSION_CASES[(v, k, lam)]
        family = []
        for fn in (type1_params, type2_params):
            try:
                p = fn(lam)
            except ValueError:
                continue
            if (p.v, p.k) == (v, k):
                family.append(p.family)
        return ("contradiction",
                f"parameters ({v},{k},{lam}) "
                + ("are admissible for family " + "/".join(family) if family
                   else "fit neither symmetric family")
                + " but are excluded by the classification; the input contradicts it, re-verify input")


def full_report(source, group: PermutationGroup | None = None,
                partition: BlockSystem | None = None) -> ClassificationReport:
    """Run every stage on a design file path, a :class:`DesignFile`, or a design."""
    if isinstance(source, DesignFile):
        df = source
    elif isinstance(source, IncidenceStructure):
        df = DesignFile(source, None, None)
    else:
        df = read_design(source)
    G = group if group is not None else df.group()
    sigma = partition if partition is not None else df.partition
    return _Pipeline(df.design, G, sigma).run()
