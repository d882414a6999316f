"""Session-file driven command line interface.

A session is a JSON document with keys "variables", "representation",
"subgroups", "invariants", "options".  All numbers are exact: matrix entries
and coefficients are integers or "p/q" strings, and reports never contain a
float.  Commands: invariants, strata, fixed-locus, monodromy, rationalize,
slice, verify.  Exit codes: 0 success, 1 input error, 2 mathematical
no-solution outcomes (no expression within bounds, non-invariant polynomial,
not an isotropy class).

The environment variable TOOL_CAP_GROUP_ORDER overrides the group closure cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exact import ExactMatrix, format_scalar, parse_scalar, rank
from .groups import (
    GroupNotFiniteWithinCap,
    NonInvertibleGenerator,
    SubgroupHandle,
    subgroup_from_matrices,
)
from .invariants import (
    invariant_basis,
    minimal_generators,
    molien_dims,
    verify_invariant,
)
from .poly import MultiPoly, parse_polynomial
from .rationality import (
    NoSolutionWithinBound,
    TargetNotMonodromyInvariant,
    rationalize,
    restrict_invariants,
)
from .reps import (
    ClosedSubgroupSpec,
    NoLieAction,
    RepresentationSpec,
    fixed_locus,
    harmonic_rep,
    lie_stabilizer_algebra,
    matrix_rep,
    orbit_tangent,
    orthogonal_slice,
    permutation_rep,
)
from .strata import (
    EquationCapExceeded,
    NotAnIsotropyClassError,
    closed_stratum_equations,
    isotropy_classes,
    monodromy_rep,
    principal_isotropy,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NO_SOLUTION = 2

_NAME_RULE = r"[A-Za-z_][A-Za-z0-9_]*"


class SessionError(Exception):
    """Input validation failure, addressed by JSON path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise SessionError(path, message)


def _scalar(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SessionError(path, f"expected an exact rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ValueError as exc:
            raise SessionError(path, str(exc)) from None
    raise SessionError(path, f"expected an exact rational, got {value!r}")


def _matrix(value: Any, path: str) -> ExactMatrix:
    _expect(isinstance(value, list) and value, path, "expected a nonexpty matrix (list of rows)")
    rows = []
    for i, row in enumerate(value):
        _expect(isinstance(row, list), f"{path}[{i}]", "expected a list of entries")
        rows.append([_scalar(v, f"{path}[{i}][{j}]") for j, v in enumerate(row)])
    try:
        return ExactMatrix(rows)
    except ValueError as exc:
        raise SessionError(path, str(exc)) from None


@dataclass
class Session:
    representation: RepresentationSpec
    subgroups: dict[str, SubgroupHandle | ClosedSubgroupSpec] = field(default_factory=dict)
    invariants: list[tuple[str, MultiPoly]] = field(default_factory=list)
    options: dict[str, int] = field(default_factory=dict)

    def option(self, key: str, default: int) -> int:
        return self.options.get(key, default)


_OPTION_KEYS = {
    "group_order_cap",
    "max_degree",
    "generator_degree_cap",
    "stratum_equation_cap",
    "rationalize_degree_cap",
}


def _closure_cap(options: dict[str, int]) -> int:
    env = os.environ.get("TOOL_CAP_GROUP_ORDER")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SessionError("TOOL_CAP_GROUP_ORDER", f"not an integer: {env!r}") from None
    return options.get("group_order_cap", 10000)


def _build_representation(
    doc: Any, variables: list[str] | None, cap: int
) -> RepresentationSpec:
    path = "representation"
    _expect(isinstance(doc, dict), path, "expected an object")
    kind = doc.get("kind")
    _expect(
        kind in {"permutation", "matrix", "harmonic"},
        f"{path}.kind",
        f"expected one of permutation|matrix|harmonic, got {kind!r}",
    )
    known = {
        "permutation": {"kind", "n", "generators"},
        "matrix": {"kind", "generators", "inner_product"},
        "harmonic": {"kind", "degree", "generators", "so3_lie"},
    }[kind]
    for key in doc:
        _expect(key in known, f"{path}.{key}", "unknown representation key")
    try:
        if kind == "permutation":
            n = doc.get("n")
            _expect(isinstance(n, int) and n > 0, f"{path}.n", "expected a positive integer")
            gens = doc.get("generators")
            _expect(isinstance(gens, list) and gens, f"{path}.generators", "expected a list")
            for i, p in enumerate(gens):
                _expect(
                    isinstance(p, list) and all(isinstance(v, int) for v in p),
                    f"{path}.generators[{i}]",
                    "expected a one-line permutation (list of integers)",
                )
            return permutation_rep(gens, n, variables, cap=cap)
        if kind == "harmonic":
            d = doc.get("degree")
            _expect(isinstance(d, int) and d >= 0, f"{path}.degree", "expected a nonnegative integer")
            gens = doc.get("generators")
            _expect(isinstance(gens, list) and gens, f"{path}.generators", "expected a list")
            mats = [_matrix(g, f"{path}.generators[{i}]") for i, g in enumerate(gens)]
            lie = doc.get("so3_lie", False)
            _expect(isinstance(lie, bool), f"{path}.so3_lie", "expected a boolean")
            return harmonic_rep(d, mats, include_so3_lie=lie, coordinates=variables, cap=cap)
        gens = doc.get("generators")
        _expect(isinstance(gens, list) and gens, f"{path}.generators", "expected a list")
        mats = [_matrix(g, f"{path}.generators[{i}]") for i, g in enumerate(gens)]
        inner = doc.get("inner_product")
        gram = _matrix(inner, f"{path}.inner_product") if inner is not None else None
        return matrix_rep(mats, variables, inner_product=gram, cap=cap)
    except SessionError:
        raise
    except (GroupNotFiniteWithinCap, NonInvertibleGenerator, ValueError) as exc:
        raise SessionError(path, str(exc)) from None


def _build_subgroup(
    rep: RepresentationSpec, doc: Any, path: str
) -> tuple[str, SubgroupHandle | ClosedSubgroupSpec]:
    _expect(isinstance(doc, dict), path, "expected an object")
    for key in doc:
        _expect(
            key in {"label", "finite_generators", "lie_generators"},
            f"{path}.{key}",
            "unknown subgroup key",
        )
    label = doc.get("label")
    _expect(isinstance(label, str) and label, f"{path}.label", "expected a nonempty string")
    finite_docs = doc.get("finite_generators", [])
    lie_docs = doc.get("lie_generators", [])
    _expect(isinstance(finite_docs, list), f"{path}.finite_generators", "expected a list")
    _expect(isinstance(lie_docs, list), f"{path}.lie_generators", "expected a list")
    finite = [
        _matrix(m, f"{path}.finite_generators[{i}]") for i, m in enumerate(finite_docs)
    ]
    lie: list[str | tuple[Fraction, ...]] = []
    for i, entry in enumerate(lie_docs):
        entry_path = f"{path}.lie_generators[{i}]"
        if isinstance(entry, str):
            _expect(entry in rep.lie_names, entry_path, f"unknown Lie generator name {entry!r}")
            lie.append(entry)
        elif isinstance(entry, list):
            lie.append(tuple(_scalar(v, f"{entry_path}[{j}]") for j, v in enumerate(entry)))
        else:
            raise SessionError(entry_path, "expected a Lie generator name or coefficient list")
    _expect(bool(finite) or bool(lie), path, "subgroup needs at least one generator")
    if not lie and all(rep.group.contains_matrix(m) for m in finite):
        return label, subgroup_from_matrices(rep.group, finite)
    try:
        spec = ClosedSubgroupSpec(label, tuple(finite), tuple(lie))
        # eager validation: the generators must act on this representation
        for m in spec.finite_generators:
            rep.action_of_matrix(m)
        for entry in spec.lie_generators:
            rep.lie_matrix(entry)
    except (ValueError, NoLieAction) as exc:
        raise SessionError(path, str(exc)) from None
    return label, spec


def parse_session(text: str) -> Session:
    """Parse and eagerly validate a session document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SessionError("$", f"invalid JSON: {exc}") from None
    _expect(isinstance(doc, dict), "$", "expected a JSON object")
    for key in doc:
        _expect(
            key in {"variables", "representation", "subgroups", "invariants", "options"},
            key,
            "unknown top-level key",
        )
    _expect("representation" in doc, "representation", "missing required key")
    options_doc = doc.get("options", {})
    _expect(isinstance(options_doc, dict), "options", "expected an object")
    options: dict[str, int] = {}
    for key, value in options_doc.items():
        _expect(key in _OPTION_KEYS, f"options.{key}", "unknown option")
        _expect(
            isinstance(value, int) and not isinstance(value, bool) and value > 0,
            f"options.{key}",
            "expected a positive integer",
        )
        options[key] = value
    variables = doc.get("variables")
    if variables is not None:
        _expect(
            isinstance(variables, list) and all(isinstance(v, str) for v in variables),
            "variables",
            "expected a list of names",
        )
        import re

        for i, v in enumerate(variables):
            _expect(
                re.fullmatch(_NAME_RULE, v) is not None,
                f"variables[{i}]",
                f"invalid name {v!r}",
            )
        _expect(len(set(variables)) == len(variables), "variables", "duplicate names")
    rep = _build_representation(doc["representation"], variables, _closure_cap(options))
    if variables is not None:
        _expect(
            len(variables) == rep.dim,
            "variables",
            f"expected {rep.dim} names for this representation, got {len(variables)}",
        )
    session = Session(rep, options=options)
    subgroup_docs = doc.get("subgroups", [])
    _expect(isinstance(subgroup_docs, list), "subgroups", "expected a list")
    for i, sub_doc in enumerate(subgroup_docs):
        label, built = _build_subgroup(rep, sub_doc, f"subgroups[{i}]")
        _expect(label not in session.subgroups, f"subgroups[{i}].label", "duplicate label")
        session.subgroups[label] = built
    invariant_docs = doc.get("invariants", {})
    _expect(isinstance(invariant_docs, dict), "invariants", "expected an object")
    import re

    for name, text_value in invariant_docs.items():
        path = f"invariants.{name}"
        _expect(re.fullmatch(_NAME_RULE, name) is not None, path, f"invalid name {name!r}")
        _expect(isinstance(text_value, str), path, "expected a polynomial string")
        try:
            p = parse_polynomial(text_value, rep.coordinates)
        except ValueError as exc:
            raise SessionError(path, str(exc)) from None
        session.invariants.append((name, p))
    return session


def load_session(path: str) -> Session:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_session(fh.read())


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class Report:
    payload: dict[str, Any]
    text_lines: tuple[str, ...]


def emit_report(report: Report, fmt: str = "text") -> str:
    """Render a report; JSON output is schema-stable and byte-deterministic."""
    if fmt == "json":
        return json.dumps(report.payload, indent=2, sort_keys=True)
    if fmt == "text":
        return "\n".join(report.text_lines)
    raise ValueError(f"unknown format {fmt!r}")


def _vec(v: Sequence[Fraction]) -> list[str]:
    return [format_scalar(x) for x in v]


def _mat(m: ExactMatrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m.rows]


def _resolve_subgroup(session: Session, name: str | None) -> tuple[str, SubgroupHandle | ClosedSubgroupSpec]:
    if not session.subgroups:
        raise SessionError("subgroups", "session defines no subgroups")
    if name is None:
        if len(session.subgroups) == 1:
            return next(iter(session.subgroups.items()))
        raise SessionError(
            "subgroups", f"--subgroup needed; session defines {sorted(session.subgroups)}"
        )
    if name not in session.subgroups:
        raise SessionError("subgroups", f"unknown subgroup {name!r}; have {sorted(session.subgroups)}")
    return name, session.subgroups[name]


def _cmd_strata(session: Session, args: argparse.Namespace) -> Report:
    rep = session.representation
    records = isotropy_classes(rep)
    principal = principal_isotropy(rep)
    classes = []
    lines = [f"isotropy classes: {len(records)} (principal: {principal})"]
    lines.append("id  |H|  dim V^H  witness                     covers")
    for r in records:
        classes.append(
            {
                "id": r.class_id,
                "order": r.order,
                "fixed_dim": r.fixed_dim,
                "witness": _vec(r.witness),
                "covers": list(r.covers),
            }
        )
        witness = "(" + ", ".join(_vec(r.witness)) + ")"
        lines.append(
            f"{r.class_id:<3} {r.order:<4} {r.fixed_dim:<8} {witness:<27} {list(r.covers)}"
        )
    payload: dict[str, Any] = {
        "command": "strata",
        "classes": classes,
        "principal": principal,
    }
    if args.equations:
        cap = session.option("stratum_equation_cap", 2000)
        eq_payload = {}
        for r in records:
            eqs = closed_stratum_equations(rep, r.subgroup, cap=cap)
            eq_payload[str(r.class_id)] = [str(e) for e in eqs]
            lines.append(f"class {r.class_id} closed-stratum equations:")
            for e in eqs:
                lines.append(f"  {e}")
        payload["equations"] = eq_payload
    return Report(payload, tuple(lines))


def _cmd_fixed_locus(session: Session, args: argparse.Namespace) -> Report:
    rep = session.representation
    name, sub = _resolve_subgroup(session, args.subgroup)
    locus = fixed_locus(rep, sub, label=name)
    payload = {
        "command": "fixed-locus",
        "subgroup": name,
        "dim": locus.dim,
        "basis": [_vec(b) for b in locus.basis],
        "coordinates": list(rep.coordinates),
    }
    lines = [f"fixed locus of {name}: dimension {locus.dim}"]
    for i, b in enumerate(locus.basis):
        lines.append(f"  b{i + 1} = (" + ", ".join(_vec(b)) + ")")
    return Report(payload, tuple(lines))


def _cmd_monodromy(session: Session, args: argparse.Namespace) -> Report:
    rep = session.representation
    name, sub = _resolve_subgroup(session, args.subgroup)
    if not isinstance(sub, SubgroupHandle):
        raise SessionError(
            "subgroups", f"{name!r} has Lie generators; monodromy needs a finite subgroup"
        )
    mono = monodromy_rep(rep, sub)
    payload = {
        "command": "monodromy",
        "subgroup": name,
        "normalizer_order": mono.gamma.numerator.order,
        "order": mono.order,
        "abelian": mono.gamma.is_abelian(),
        "fixed_dim": mono.subspace.dim,
        "matrices": [_mat(m) for m in mono.matrices],
    }
    lines = [
        f"monodromy of {name}: |N(H)| = {mono.gamma.numerator.order}, "
        f"|N(H)/H| = {mono.order}, abelian = {mono.gamma.is_abelian()}"
    ]
    for i, m in enumerate(mono.matrices):
        lines.append(f"  gamma_{i}: " + "; ".join(" ".join(row) for row in _mat(m)))
    return Report(payload, tuple(lines))


def _cmd_invariants(session: Session, args: argparse.Namespace) -> Report:
    rep = session.representation
    up_to = args.max_degree or session.option("max_degree", 6)
    dims = molien_dims(rep, up_to)
    per_degree = []
    lines = [f"invariant ring of group order {rep.group.order} on dimension {rep.dim}"]
    lines.append("degree  molien  basis dim")
    for d in range(up_to + 1):
        basis_dim = invariant_basis(rep, d).dim
        per_degree.append({"degree": d, "molien": dims[d], "basis_dim": basis_dim})
        lines.append(f"{d:<7} {dims[d]:<7} {basis_dim}")
    agree = all(row["molien"] == row["basis_dim"] for row in per_degree)
    gens = minimal_generators(rep, degree_cap=session.option("generator_degree_cap", 12))
    lines.append(f"molien agrees with kernel dimensions: {agree}")
    lines.append(
        f"minimal generators (bound {gens.bound_used}, complete: {gens.complete}):"
    )
    gen_payload = []
    for p, d in zip(gens.polynomials, gens.degrees):
        gen_payload.append({"degree": d, "polynomial": str(p)})
        lines.append(f"  degree {d}: {p}")
    payload = {
        "command": "invariants",
        "degrees": per_degree,
        "agree": agree,
        "generators": gen_payload,
        "generator_bound": gens.bound_used,
        "generator_bound_complete": gens.complete,
    }
    return Report(payload, tuple(lines))


def _cmd_verify(session: Session, args: argparse.Namespace) -> tuple[Report, int]:
    rep = session.representation
    targets = list(session.invariants)
    if args.target:
        try:
            targets.append(("target", parse_polynomial(args.target, rep.coordinates)))
        except ValueError as exc:
            raise SessionError("target", str(exc)) from None
    if not targets:
        raise SessionError("invariants", "nothing to verify: session defines no invariants")
    results = []
    lines = []
    all_ok = True
    for name, p in targets:
        outcome = verify_invariant(rep, p)
        entry: dict[str, Any] = {"name": name, "invariant": outcome.invariant}
        if not outcome.invariant:
            all_ok = False
            if outcome.witness_kind == "group":
                entry["witness"] = {
                    "kind": "group",
                    "element_index": outcome.witness_index,
                    "matrix": _mat(rep.group.elements[outcome.witness_index]),
                }
                lines.append(
                    f"{name}: NOT invariant (group element {outcome.witness_index})"
                )
            else:
                entry["witness"] = {"kind": "lie", "name": outcome.witness_name}
                lines.append(f"{name}: NOT invariant (Lie generator {outcome.witness_name})")
        else:
            lines.append(f"{name}: invariant")
        results.append(entry)
    payload = {"command": "verify", "results": results, "all_invariant": all_ok}
    return Report(payload, tuple(lines)), EXIT_OK if all_ok else EXIT_NO_SOLUTION


def _cmd_rationalize(session: Session, args: argparse.Namespace) -> Report:
    rep = session.representation
    if not session.invariants:
        raise SessionError("invariants", "rationalize needs named invariants in the session")
    if not args.target:
        raise SessionError("target", "rationalize needs --target")
    name, sub = _resolve_subgroup(session, args.subgroup)
    try:
        target_ambient = parse_polynomial(args.target, rep.coordinates)
    except ValueError as exc:
        raise SessionError("target", str(exc)) from None
    locus = fixed_locus(rep, sub, label=name)
    jset = restrict_invariants(session.invariants, locus)
    from .poly import restrict_to_subspace

    target = restrict_to_subspace(target_ambient, locus)
    monodromy: tuple[ExactMatrix, ...] = ()
    monodromy_checked = False
    if isinstance(sub, SubgroupHandle):
        mono = monodromy_rep(rep, sub)
        monodromy = mono.matrices
        monodromy_checked = True
    bound_cap = args.max_degree or session.option("rationalize_degree_cap", 16)
    expr = rationalize(target, jset, monodromy, bound_cap=bound_cap)
    payload = {
        "command": "rationalize",
        "subgroup": name,
        "target": str(target_ambient),
        "target_restricted": str(target),
        "coordinates": [f"s{i + 1}" for i in range(locus.dim)],
        "subspace_basis": [_vec(b) for b in locus.basis],
        "restricted_invariants": {
            n: str(p) for n, p in zip(jset.names, jset.polynomials)
        },
        "numerator": str(expr.numerator),
        "denominator": str(expr.denominator),
        "identity": f"({target}) * ({expr.denominator} o j) = ({expr.numerator} o j)",
        "identity_verified": True,
        "witness_point": _vec(expr.witness_point),
        "bound_used": expr.bound_used,
        "monodromy_checked": monodromy_checked,
    }
    lines = [
        f"target {target_ambient} on the fixed locus of {name} "
        f"(coordinates s1..s{locus.dim}; restriction {target}):",
        f"  expression: ({expr.numerator}) / ({expr.denominator})",
        f"  identity verified exactly; denominator nonzero at witness "
        f"({', '.join(_vec(expr.witness_point))})",
        f"  weighted-degree bound used: {expr.bound_used}",
        f"  monodromy invariance checked: {monodromy_checked}",
    ]
    for n, p in zip(jset.names, jset.polynomials):
        lines.append(f"  {n}|locus = {p}")
    return Report(payload, tuple(lines))


def _cmd_slice(session: Session, args: argparse.Namespace) -> Report:
    rep = session.representation
    if not args.point:
        raise SessionError("point", "slice needs --point with comma-separated rationals")
    parts = [p.strip() for p in args.point.split(",")]
    if len(parts) != rep.dim:
        raise SessionError("point", f"expected {rep.dim} coordinates, got {len(parts)}")
    try:
        v = tuple(parse_scalar(p) for p in parts)
    except ValueError as exc:
        raise SessionError("point", str(exc)) from None
    tangent = [t for t in orbit_tangent(rep, v) if any(x != 0 for x in t)]
    slc = orthogonal_slice(rep, v)
    tangent_dim = rank(ExactMatrix(tangent)) if tangent else 0
    payload: dict[str, Any] = {
        "command": "slice",
        "point": _vec(v),
        "tangent_dim": tangent_dim,
        "slice_dim": slc.dim,
        "basis": [_vec(b) for b in slc.basis],
        "contains_point": slc.contains(v),
    }
    lines = [
        f"slice at ({', '.join(_vec(v))}): dimension {slc.dim}, "
        f"tangent dimension {payload['tangent_dim']}, contains point: {slc.contains(v)}"
    ]
    if rep.lie_matrices:
        stab = lie_stabilizer_algebra(rep, v)
        payload["lie_stabilizer_dim"] = stab.dim
        lines.append(f"Lie stabilizer dimension: {stab.dim}")
    for i, b in enumerate(slc.basis):
        lines.append(f"  b{i + 1} = (" + ", ".join(_vec(b)) + ")")
    return Report(payload, tuple(lines))


COMMANDS = {
    "invariants": _cmd_invariants,
    "strata": _cmd_strata,
    "fixed-locus": _cmd_fixed_locus,
    "monodromy": _cmd_monodromy,
    "rationalize": _cmd_rationalize,
    "slice": _cmd_slice,
    "verify": _cmd_verify,
}


def run_command(session: Session, command: str, args: argparse.Namespace) -> tuple[Report, int]:
    """Dispatch a command; returns (report, exit code)."""
    handler = COMMANDS[command]
    try:
        result = handler(session, args)
    except (NoSolutionWithinBound, TargetNotMonodromyInvariant, NotAnIsotropyClassError) as exc:
        report = Report(
            {"command": command, "error": type(exc).__name__, "message": str(exc)},
            (f"{type(exc).__name__}: {exc}",),
        )
        return report, EXIT_NO_SOLUTION
    if isinstance(result, tuple):
        return result
    return result, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isostrat",
        description="Exact isotropy stratification and invariant-ring toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--session", required=True, help="path to the session JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--subgroup", default=None, help="subgroup label from the session")
        p.add_argument("--target", default=None, help="polynomial in the session variables")
        p.add_argument("--point", default=None, help="comma-separated rational coordinates")
        p.add_argument("--max-degree", type=int, default=None, dest="max_degree")
        p.add_argument(
            "--equations", action="store_true", help="include closed-stratum equations"
        )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        session = load_session(args.session)
        report, code = run_command(session, args.command, args)
    except SessionError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (GroupNotFiniteWithinCap, NonInvertibleGenerator, EquationCapExceeded, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(emit_report(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
