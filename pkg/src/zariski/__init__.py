"""Exact computations with Zariski lattices, localizations and the structure sheaf."""
from .certs import AnnPowerWitness, BezoutCert, RadicalCert, audit
from .errors import InvariantError, ParseError, PreconditionError, ResourceError, UsageError
from .groebner import buchberger, mv_ideal_membership, mv_radical_membership
from .lattice import (
    UNKNOWN,
    LatticeElt,
    bottom,
    d_of,
    is_basic_open,
    lat_eq,
    lat_join,
    lat_leq,
    lat_meet,
    normalize,
    support_check,
    top,
)
from .localization import LocElem, LocHom, LocRing, loc_eq, loc_is_unit, restriction_hom
from .rings import (
    IntegerRing,
    ModularRing,
    MultiPolyRing,
    UniPolyRing,
    ann_power,
    bezout,
    ideal_membership,
    is_unit,
    radical_membership,
)
from .sheaf import check_compatible, cover_check, shape_category
from .structure import glue, glue_trace, restrict_basic, section_eq, spread, top_roundtrip
from .syntax import parse_elem, parse_ring

__version__ = "0.1.0"

__all__ = [
    "ann_power",
    "AnnPowerWitness",
    "audit",
    "bezout",
    "BezoutCert",
    "bottom",
    "buchberger",
    "check_compatible",
    "cover_check",
    "d_of",
    "glue",
    "glue_trace",
    "ideal_membership",
    "IntegerRing",
    "InvariantError",
    "is_basic_open",
    "is_unit",
    "lat_eq",
    "lat_join",
    "lat_leq",
    "lat_meet",
    "LatticeElt",
    "loc_eq",
    "loc_is_unit",
    "LocElem",
    "LocHom",
    "LocRing",
    "ModularRing",
    "MultiPolyRing",
    "mv_ideal_membership",
    "mv_radical_membership",
    "normalize",
    "parse_elem",
    "parse_ring",
    "ParseError",
    "PreconditionError",
    "radical_membership",
    "RadicalCert",
    "ResourceError",
    "restrict_basic",
    "restriction_hom",
    "section_eq",
    "shape_category",
    "spread",
    "support_check",
    "top",
    "top_roundtrip",
    "UniPolyRing",
    "UNKNOWN",
    "UsageError",
]
