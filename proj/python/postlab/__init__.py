"""Boolean circuits over restricted bases: clones, complexity labels, decisions, enumeration, gadgets."""

from ._postlab import (
    ArityError,
    Circuit,
    GadgetInstance,
    InvalidArgument,
    LimitExceeded,
    NotInClone,
    ParseError,
    WrongClone,
    all_clones,
    audit,
    audit_gadget,
    classify,
    clone_of,
    eliminate_constant,
    enumerate,
    eq_to_frozen,
    equivalent,
    exists_frozen,
    frozen,
    gadget_names,
    iso_restricted,
    isomorphic,
    lattice_dot,
    parse_circuit,
    sat,
    sat_star,
    satp_gadget,
    satstar_chain,
    satstar_to_efv,
    selfdual_eq_gadget,
    selfdual_iso_gadget,
    taut_to_eq,
    unique_sat,
    unsat_to_frozen,
    usat_const_elim,
)

__all__ = [name for name in dir() if not name.startswith("_")]
