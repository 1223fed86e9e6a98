"""Concrete models: GF(q) vector spaces, relations, and lower-set lattices."""
from .base import DomainTooLarge, ModelError, ModelInstance
from .boolalg import boolalg
from .finvect import finvect
from .rel import rel

BUILDERS = {"finvect": finvect, "rel": rel, "boolalg": boolalg}
SIZE_PARAM = {"finvect": "max_dim", "rel": "max_size", "boolalg": "max_poset"}


def instance_build(name: str, params=None) -> ModelInstance:
    if name not in BUILDERS:
        raise ValueError(f"unknown model {name!r}; expected one of {', '.join(BUILDERS)}")
    params = dict(params or {})
    if "max_size" in params and name != "rel":
        params[SIZE_PARAM[name]] = params.pop("max_size")
    try:
        return BUILDERS[name](**params)
    except TypeError as e:
        raise ValueError(f"bad parameters for {name}: {e}") from None


__all__ = ["DomainTooLarge", "ModelError", "ModelInstance", "instance_build", "finvect", "rel", "boolalg"]
