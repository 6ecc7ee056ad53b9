"""JSON encoders and decoders shared by the CLI."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .abelian_group import Element, FiniteAbelianGroup, GroupHom
from .catalog import SigmaTuple
from .errors import InvalidInput
from .graded_algebra import MGradedAlgebra, algebra_from_table
from .rays import Ray, ray_from_pair_values
from .rings import CoefficientRing, ring_from_json
from .s3 import PARAMS, S3CoverData, TripleCoverData


def unwrap(data: Any) -> Any:
    """Accept either a bare object or a CLI result envelope."""
    if isinstance(data, dict) and "output" in data and "command" in data:
        return data["output"]
    return data


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pair_key(m: Element, n: Element) -> str:
    return f"{m.serialize()},{n.serialize()}"


def group_json(group: FiniteAbelianGroup) -> str:
    return group.serialize()


def ray_to_json(ray: Ray) -> dict:
    return {
        "group": ray.group.serialize(),
        "values": {pair_key(m, n): v for (m, n), v in ray.reduced_values().items()},
    }


def ray_from_json(data: Any) -> Ray:
    data = unwrap(data)
    if not isinstance(data, dict) or "group" not in data or "values" not in data:
        raise InvalidInput("ray JSON needs 'group' and 'values'")
    group = FiniteAbelianGroup.parse(str(data["group"]))
    vals = data["values"]
    if not isinstance(vals, dict):
        raise InvalidInput("ray 'values' must be an object")
    try:
        ints = {k: int(v) for k, v in vals.items()}
    except (TypeError, ValueError) as exc:
        raise InvalidInput("ray values must be integers") from exc
    return ray_from_pair_values(group, ints)


def hom_to_json(phi: GroupHom) -> dict:
    return {"source": phi.source.serialize(), "target": phi.target.serialize(), "images": phi.serialize()}


def hom_from_json(data: dict) -> GroupHom:
    src = FiniteAbelianGroup.parse(str(data["source"]))
    tgt = FiniteAbelianGroup.parse(str(data["target"]))
    return GroupHom(src, tgt, tuple(tgt.parse_element(str(x)) for x in data["images"]))


def sigma_to_json(chi: SigmaTuple) -> dict:
    return {"r": chi.r, "alpha": chi.alpha, "N": chi.N, "qbar": chi.qbar, "phi": hom_to_json(chi.phi)}


def sigma_from_json(data: Any) -> SigmaTuple:
    data = unwrap(data)
    try:
        return SigmaTuple(int(data["r"]), int(data["alpha"]), int(data["N"]), int(data["qbar"]), hom_from_json(data["phi"]))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"bad sigma tuple JSON: {exc}") from exc


def algebra_to_json(alg: MGradedAlgebra) -> dict:
    ring = alg.ring
    return {
        "group": alg.group.serialize(),
        "ring": ring.to_json(),
        "psi": {pair_key(m, n): ring.format(v) for (m, n), v in alg.table().items()},
    }


def algebra_from_json(data: Any) -> MGradedAlgebra:
    data = unwrap(data)
    if not isinstance(data, dict) or not {"group", "ring", "psi"} <= set(data):
        raise InvalidInput("algebra JSON needs 'group', 'ring' and 'psi'")
    group = FiniteAbelianGroup.parse(str(data["group"]))
    ring = ring_from_json(data["ring"])
    return algebra_from_table(group, ring, {k: ring(str(v)) for k, v in data["psi"].items()})


def s3_from_json(data: Any) -> S3CoverData:
    data = unwrap(data)
    ring, params = _ring_params(data)
    return S3CoverData.make(ring, **{k: ring(str(v)) for k, v in params.items()})


def triple_from_json(data: Any) -> TripleCoverData:
    data = unwrap(data)
    ring, params = _ring_params(data)
    bad = set(params) - {"a", "b", "c", "e"}
    if bad:
        raise InvalidInput(f"unknown triple-cover parameters {sorted(bad)}")
    return TripleCoverData.make(ring, **{k: ring(str(v)) for k, v in params.items()})


def _ring_params(data: Any) -> tuple[CoefficientRing, dict]:
    if not isinstance(data, dict) or "ring" not in data or "params" not in data:
        raise InvalidInput("data JSON needs 'ring' and 'params'")
    return ring_from_json(data["ring"]), dict(data["params"])


__all__ = [
    "PARAMS",
    "algebra_from_json",
    "algebra_to_json",
    "fraction_str",
    "hom_from_json",
    "hom_to_json",
    "pair_key",
    "ray_from_json",
    "ray_to_json",
    "s3_from_json",
    "sigma_from_json",
    "sigma_to_json",
    "triple_from_json",
    "unwrap",
]
