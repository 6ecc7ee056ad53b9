"""Command-line front end. Every command prints one JSON envelope."""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import __version__
from .abelian_group import FiniteAbelianGroup, GroupHom, cyclic_quotients, identity_hom, two_gen_group, two_gen_type
from .catalog import (
    SigmaTuple,
    d_q,
    delta_ray,
    omega_set,
    pardini_ray,
    q_hat,
    qbar_invariants,
    sigma_dual,
    sigma_enumerate,
    sigma_modulo_duality,
    theta2,
)
from .errors import GclError, InvalidInput
from .graded_algebra import (
    TorsorTwist,
    from_ray,
    h_data,
    is_generated_in,
    is_torsor,
    qbar_of,
    random_twist,
    universal_table,
    universal_two_gen_algebra,
    verify,
)
from .presentation import is_polynomial_presentation, reducibility_witness, rm_presentation
from .rays import (
    default_max_order,
    e_invariant,
    enumerate_extremal_rays,
    h_of_ray,
    is_codim1_regular,
    is_extremal,
    is_normalized,
    is_smooth_extremal,
)
from .rings import QQ, ring_from_spec
from .s3 import (
    SurfaceNumbers,
    TripleCoverData,
    component_membership,
    discriminant,
    from_triple_cover,
    is_torsor_s3,
    quotient_by_sigma,
    surface_invariants,
    u_alpha_chart,
    u_beta_chart,
    verify_s3,
)
from .serialize import (
    algebra_from_json,
    algebra_to_json,
    hom_to_json,
    ray_from_json,
    ray_to_json,
    s3_from_json,
    sigma_to_json,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit code 2 with a short message
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc.msg}") from exc


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from exc
    if count is not None and len(vals) != count:
        raise InvalidInput(f"expected {count} integers, got {text!r}")
    return vals


def _group(args) -> FiniteAbelianGroup:
    return FiniteAbelianGroup.parse(args.group)


def _max_order(args) -> int:
    return args.max_order if args.max_order is not None else default_max_order()


# group ---------------------------------------------------------------


def cmd_group_info(args):
    g = _group(args)
    return {
        "group": g.serialize(),
        "order": g.order,
        "cyclic_orders": list(g.cyclic_orders),
        "exponent": g.exponent,
        "elements": [x.serialize() for x in g.elements],
        "cyclic_quotients": len(cyclic_quotients(g)),
    }


# rays ----------------------------------------------------------------


def cmd_rays_enumerate(args):
    rays = enumerate_extremal_rays(_group(args), max_order=_max_order(args))
    return {"count": len(rays), "rays": [ray_to_json(r) for r in rays]}


def cmd_rays_check(args):
    ray = ray_from_json(_load_json(args.ray))
    out = {"valid": True, "normalized": is_normalized(ray), "extremal": is_extremal(ray)}
    if args.all_predicates:
        out.update(
            smooth_extremal=is_smooth_extremal(ray),
            codim1_regular=is_codim1_regular(ray),
            h=h_of_ray(ray).h,
            e=e_invariant(ray),
        )
    return out


def cmd_rays_h(args):
    hd = h_of_ray(ray_from_json(_load_json(args.ray)))
    return {
        "H": sorted(x.serialize() for x in hd.H),
        "h_m": {m.serialize(): v for m, v in sorted(hd.h_m.items(), key=lambda kv: kv[0].index)},
        "h": hd.h,
    }


def cmd_rays_e(args):
    ray = ray_from_json(_load_json(args.ray))
    return {
        "e": e_invariant(ray),
        "e_values": {m.serialize(): _frac(ray.e_value(m)) for m in ray.group.elements},
    }


def _frac(x) -> str:
    return QQ.format(Fraction(x))


# catalog -------------------------------------------------------------


def _hom_from_args(group: FiniteAbelianGroup, target: FiniteAbelianGroup, images: str) -> GroupHom:
    parts = [p for p in images.split(";") if p] if ";" in images else [p for p in images.split(",") if p]
    return GroupHom(group, target, tuple(target.parse_element(p) for p in parts))


def cmd_catalog_pardini(args):
    g = _group(args)
    if args.target is not None:
        tgt = FiniteAbelianGroup.parse(str(args.target))
        phi = _hom_from_args(g, tgt, args.phi or "")
        return {"phi": hom_to_json(phi), "ray": ray_to_json(pardini_ray(phi))}
    entries = [{"phi": hom_to_json(phi), "ray": ray_to_json(pardini_ray(phi))} for phi in cyclic_quotients(g)]
    return {"count": len(entries), "rays": entries}


def cmd_catalog_omega(args):
    beta, N = args.beta, args.n
    om = omega_set(beta, N)
    return {
        "beta": beta,
        "N": N,
        "omega": om,
        "d": {str(q): d_q(beta, N, q) for q in range(1, N + 1)},
        "qhat": {str(q): q_hat(beta, N, q) for q in om},
    }


def _sigma_entry(chi: SigmaTuple) -> dict:
    return {"tuple": sigma_to_json(chi), "delta_ray": ray_to_json(delta_ray(chi))}


def cmd_catalog_sigma(args):
    g = _group(args)
    mo = _max_order(args)
    if args.modulo_duality:
        chis = sigma_modulo_duality(g, max_order=mo)
    else:
        chis = sigma_enumerate(g, bar=args.bar, max_order=mo)
    return {"count": len(chis), "tuples": [sigma_to_json(c) for c in chis]}


def cmd_catalog_theta2(args):
    entries = theta2(_group(args), max_order=_max_order(args))
    return {"count": len(entries), "entries": [{"label": e.label, "rays": [ray_to_json(r) for r in e.rays]} for e in entries]}


def cmd_catalog_delta_ray(args):
    r, alpha, N, qbar = _ints(args.tuple, 4)
    M = two_gen_group(r, alpha, N).group
    if args.group is not None:
        g = _group(args)
        phi = _hom_from_args(g, M, args.phi or "")
    else:
        phi = identity_hom(M)
    chi = SigmaTuple(r, alpha, N, qbar, phi)
    out = _sigma_entry(chi)
    out["dual"] = sigma_to_json(sigma_dual(chi)) if args.dual else None
    return out


# algebra -------------------------------------------------------------


def _twist(args, group, ring):
    if args.twist:
        vals = [ring.one] + [ring(v) for v in args.twist.split(",")]
        if len(vals) != group.order:
            raise InvalidInput(f"--twist needs {group.order - 1} values (one per nonzero element)")
        return TorsorTwist(group, ring, tuple(vals))
    if args.seed is not None:
        return random_twist(group, ring, random.Random(args.seed))
    return None


def cmd_algebra_from_ray(args):
    ray = ray_from_json(_load_json(args.ray))
    ring = ring_from_spec(args.ring)
    return algebra_to_json(from_ray(ray.group, ring, ray, _twist(args, ray.group, ring)))


def cmd_algebra_verify(args):
    alg = algebra_from_json(_load_json(args.algebra))
    bad = verify(alg)
    return {"ok": not bad, "violations": [[v.m.serialize(), v.n.serialize(), v.t.serialize()] for v in bad]}


def cmd_algebra_h(args):
    hd = h_data(algebra_from_json(_load_json(args.algebra)))
    return {
        "H": sorted(x.serialize() for x in hd.H),
        "h_m": {m.serialize(): v for m, v in sorted(hd.h_m.items(), key=lambda kv: kv[0].index)},
        "h": hd.h,
    }


def cmd_algebra_torsor(args):
    return {"torsor": is_torsor(algebra_from_json(_load_json(args.algebra)))}


def cmd_algebra_generated(args):
    alg = algebra_from_json(_load_json(args.algebra))
    degs = [alg.group.parse_element(x) for x in args.degrees.split(";") if x]
    return {"generated": is_generated_in(alg, degs)}


def cmd_algebra_universal(args):
    r, alpha, N, qbar = _ints(args.tuple, 4)
    ring = ring_from_spec(args.ring)
    alg = universal_two_gen_algebra(r, alpha, N, qbar, ring.parse(args.a), ring.parse(args.b), ring, fuel=args.fuel)
    tab = universal_table(r, alpha, N, qbar, fuel=args.fuel)
    inv = qbar_invariants(r, alpha, N, qbar)
    tg = two_gen_group(r, alpha, N)
    return {
        "algebra": algebra_to_json(alg),
        "m": tg.e1.serialize(),
        "n": tg.e2.serialize(),
        "basis": {tab.group.elements[i].serialize(): list(ab) for i, ab in sorted(tab.basis.items())},
        "invariants": {k: getattr(inv, k) for k in ("z", "y", "x", "w", "qhat", "qprime")},
    }


def cmd_algebra_qbar(args):
    alg = algebra_from_json(_load_json(args.algebra))
    m, n = alg.group.parse_element(args.m), alg.group.parse_element(args.n)
    res = qbar_of(alg, m, n)
    pres = two_gen_type(alg.group, m, n)
    return {"z": res.z, "qbar": res.qbar, "lambda": alg.ring.format(res.lam), "type": list(pres.as_tuple())}


# presentation --------------------------------------------------------


def cmd_presentation_relations(args):
    pres = rm_presentation(_group(args))
    return {"variables": pres.variable_names(), "count": len(pres.relations), "relations": pres.relation_json()}


def cmd_presentation_witness(args):
    g = _group(args)
    w = reducibility_witness(g)
    return {"witness": None if w is None else w.to_json(rm_presentation(g))}


def cmd_presentation_is_polynomial(args):
    return {"polynomial": is_polynomial_presentation(_group(args))}


# s3 ------------------------------------------------------------------


def _s3(args):
    return s3_from_json(_load_json(args.data))


def cmd_s3_verify(args):
    bad = verify_s3(_s3(args))
    return {"ok": not bad, "violations": bad}


def cmd_s3_chart(args):
    ring = ring_from_spec(args.ring)
    vals = [ring.parse(x) for x in args.params.split(",")] if args.params else []
    if args.kind == "ualpha":
        if len(vals) != 3:
            raise InvalidInput("ualpha takes m,a,b")
        data = u_alpha_chart(ring, *vals)
    elif args.kind == "ubeta":
        if len(vals) != 3:
            raise InvalidInput("ubeta takes omega,A,C")
        data = u_beta_chart(ring, *vals)
    else:
        if len(vals) != 4:
            raise InvalidInput("uomega takes a,b,c,e")
        data = from_triple_cover(TripleCoverData(ring, *vals))
    return data.to_json()


def cmd_s3_torsor(args):
    data = _s3(args)
    return {"torsor": is_torsor_s3(data), "discriminant": data.ring.format(discriminant(data))}


def cmd_s3_components(args):
    return component_membership(_s3(args))


def cmd_s3_quotient(args):
    return quotient_by_sigma(_s3(args)).to_json()


def cmd_s3_invariants(args):
    raw: dict[str, Any] = {}
    if args.inputs:
        loaded = _load_json(args.inputs)
        if isinstance(loaded, dict) and "command" in loaded and "inputs" in loaded:
            loaded = loaded["inputs"].get("numbers", {})
        if not isinstance(loaded, dict):
            raise InvalidInput("surface numbers must be a JSON object")
        raw.update({k: str(v) for k, v in loaded.items()})
    for item in args.set or []:
        if "=" not in item:
            raise InvalidInput(f"--set expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        raw[k.strip()] = v.strip()
    nums = SurfaceNumbers.from_mapping(raw)
    args._numbers = {k: _frac(getattr(nums, k)) for k in nums.__dataclass_fields__}
    return surface_invariants(nums).to_json()


# parser --------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-order", type=int, default=None, help="bound on |M| for enumeration")
    p.add_argument("--fuel", type=int, default=None, help="step bound for monomial rewriting")
    p.add_argument("--format", choices=("json", "table"), default="json")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    top = _Parser(prog="gcl", description="Covers by diagonalizable groups and S3-covers: exact computations.")
    top.add_argument("--version", action="version", version=f"gcl {__version__}")
    areas = top.add_subparsers(dest="area", required=True, parser_class=_Parser)

    def leaf(area_parsers, name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = area_parsers.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def area(name: str, help_text: str):
        return areas.add_parser(name, help=help_text).add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = area("group", "finite abelian groups")
    leaf(g, "info", cmd_group_info, "basic data of a group").add_argument("--group", required=True)

    r = area("rays", "rays of the dual monoid")
    leaf(r, "enumerate", cmd_rays_enumerate, "all extremal rays").add_argument("--group", required=True)
    p = leaf(r, "check", cmd_rays_check, "validate a ray and report predicates")
    p.add_argument("--ray", required=True)
    p.add_argument("--all-predicates", action="store_true")
    leaf(r, "h", cmd_rays_h, "H, h_m and h of a ray").add_argument("--ray", required=True)
    leaf(r, "e", cmd_rays_e, "e-invariant and e-values").add_argument("--ray", required=True)

    c = area("catalog", "explicit ray families")
    p = leaf(c, "pardini", cmd_catalog_pardini, "carry rays of cyclic quotients")
    p.add_argument("--group", required=True)
    p.add_argument("--target", default=None, help="cyclic order of a single target")
    p.add_argument("--phi", default=None, help="images of the generators, ';'-separated")
    p = leaf(c, "omega", cmd_catalog_omega, "the record set Omega_{beta,N}")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = leaf(c, "sigma", cmd_catalog_sigma, "the parameter set Sigma_M")
    p.add_argument("--group", required=True)
    p.add_argument("--modulo-duality", action="store_true")
    p.add_argument("--bar", action="store_true", help="use the relaxed set")
    leaf(c, "theta2", cmd_catalog_theta2, "smooth sequences of the h <= 2 stratum").add_argument("--group", required=True)
    p = leaf(c, "delta-ray", cmd_catalog_delta_ray, "the h = 2 ray of a tuple")
    p.add_argument("--tuple", required=True, help="r,alpha,N,qbar")
    p.add_argument("--group", default=None)
    p.add_argument("--phi", default=None)
    p.add_argument("--dual", action="store_true")

    a = area("algebra", "graded algebras")
    p = leaf(a, "from-ray", cmd_algebra_from_ray, "monomial algebra of a ray")
    p.add_argument("--ray", required=True)
    p.add_argument("--ring", default="q")
    p.add_argument("--twist", default=None, help="values on nonzero elements, comma-separated")
    p.add_argument("--seed", type=int, default=None, help="random unit twist")
    for name, func, text in (
        ("verify", cmd_algebra_verify, "associativity check"),
        ("h", cmd_algebra_h, "H, h_m and h"),
        ("torsor", cmd_algebra_torsor, "torsor test"),
    ):
        leaf(a, name, func, text).add_argument("--algebra", required=True)
    p = leaf(a, "generated", cmd_algebra_generated, "generation in given degrees")
    p.add_argument("--algebra", required=True)
    p.add_argument("--degrees", required=True, help="';'-separated elements")
    p = leaf(a, "universal", cmd_algebra_universal, "universal two-degree algebra")
    p.add_argument("--tuple", required=True, help="r,alpha,N,qbar")
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="0")
    p.add_argument("--ring", default="q")
    p = leaf(a, "qbar", cmd_algebra_qbar, "recover (z, qbar, lambda)")
    p.add_argument("--algebra", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--n", required=True)

    pr = area("presentation", "binomial presentation")
    leaf(pr, "relations", cmd_presentation_relations, "variables and relations").add_argument("--group", required=True)
    leaf(pr, "witness", cmd_presentation_witness, "reducibility witness").add_argument("--group", required=True)
    leaf(pr, "is-polynomial", cmd_presentation_is_polynomial, "no relations?").add_argument("--group", required=True)

    s = area("s3", "S3-cover local data")
    for name, func, text in (
        ("verify", cmd_s3_verify, "check the equation system"),
        ("torsor", cmd_s3_torsor, "torsor test and discriminant"),
        ("components", cmd_s3_components, "component membership"),
        ("quotient", cmd_s3_quotient, "triple cover of invariants"),
    ):
        leaf(s, name, func, text).add_argument("--data", required=True)
    p = leaf(s, "chart", cmd_s3_chart, "chart constructors")
    p.add_argument("--kind", choices=("ualpha", "ubeta", "uomega"), required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--ring", default="q")
    p = leaf(s, "invariants", cmd_s3_invariants, "surface invariants of a cover")
    p.add_argument("--inputs", default=None)
    p.add_argument("--set", action="append", metavar="KEY=VALUE")
    return top


_SKIP = {"func", "area", "cmd", "format", "_numbers"}


def _echo_inputs(args) -> dict:
    out = {k: v for k, v in sorted(vars(args).items()) if k not in _SKIP and v is not None and v is not False}
    if hasattr(args, "_numbers"):
        out["numbers"] = args._numbers
    return out


def run(argv: Sequence[str]) -> tuple[int, dict]:
    """Parse and execute; returns (exit code, JSON document)."""
    args = build_parser().parse_args(list(argv))
    command = f"{args.area} {args.cmd}"
    try:
        output = args.func(args)
    except GclError as exc:
        return 1, {"error": {"name": type(exc).__name__, "message": str(exc)}, "command": command}
    except ZeroDivisionError as exc:
        return 1, {"error": {"name": "InvalidInput", "message": str(exc)}, "command": command}
    doc = {"command": command, "inputs": _echo_inputs(args), "output": output, "version": __version__}
    doc["_format"] = args.format
    return 0, doc


def _table(value: Any, indent: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.extend(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
        return lines
    if isinstance(value, list):
        lines = []
        for i, v in enumerate(value):
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}[{i}]")
                lines.extend(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}- {json.dumps(v)}")
        return lines
    return [f"{indent}{json.dumps(value)}"]


def main(argv: Sequence[str] | None = None) -> int:
    code, doc = run(sys.argv[1:] if argv is None else argv)
    fmt = doc.pop("_format", "json")
    if fmt == "table" and code == 0:
        print(f"# {doc['command']}  (gcl {doc['version']})")
        print("\n".join(_table(doc["output"])))
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
