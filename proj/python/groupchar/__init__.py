"""Character spaces and derivations of finite-group action 2-groupoids."""

from ._core import (
    ActionGroupoid,
    DerivationTheory,
    Group,
    PresentedGroupoid,
    SizeLimitError,
    ValidationError,
    group_from_cayley,
    group_from_permutations,
    inner_derivation_sign,
    named_group,
    presentation,
)

__all__ = [
    "ActionGroupoid",
    "DerivationTheory",
    "Group",
    "PresentedGroupoid",
    "SizeLimitError",
    "ValidationError",
    "group_from_cayley",
    "group_from_permutations",
    "inner_derivation_sign",
    "named_group",
    "presentation",
]

__version__ = "1.0.0"
