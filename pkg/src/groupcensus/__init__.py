"""Cyclic-subgroup censuses and exhaustive verification for small finite groups."""

from .census import (
    CyclicCensus,
    CyclicSubgroup,
    aut_order_cyclic,
    census,
    check_star_identity,
    check_totient_identity,
    cyclic_subgroups,
    euler_phi,
    totient_preimage,
)
from .classify import (
    TRIVIAL,
    ClassificationVerdict,
    deficiency_spectrum,
    is_elementary_abelian_2,
    is_p_group,
    satisfies_star,
    theorem1_holds,
    theorem2_verdict,
)
from .enumeration import (
    DEFAULT_CAP,
    EXTENDED_CAP,
    IsoClassRecord,
    count_groups,
    enumerate_groups,
    enumerate_groups_uncached,
    naive_count_groups,
    search_group_tables,
    universe,
)
from .errors import (
    BadEntry,
    BadParameters,
    CapExceeded,
    GroupError,
    NoIdentity,
    NonAssociative,
    NotAPermutation,
    NotLatin,
    OrderOverflow,
    StarWithoutIdentity,
)
from .families import (
    FamilySpec,
    build,
    cyclic,
    dihedral,
    elementary_abelian_2,
    from_permutations,
    generalized_quaternion,
    parse_family_spec,
    parse_permutations,
    recognize,
    symmetric,
)
from .tables import (
    MAX_GROUP_ORDER,
    ElementSet,
    GroupTable,
    center,
    centralizer,
    direct_product,
    element_order,
    element_orders,
    exponent,
    find_isomorphism,
    fingerprint,
    generated_subgroup,
    is_abelian,
    is_isomorphic,
    parse_cayley_table,
    validate_table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
