from tenj.category.data import Fusion2CatData, LabelSymmetry, same_data, validate_category
from tenj.category.dimensions import check_dimension_identities
from tenj.category.gauge import (
    BasisRescaling,
    constant_rescaling,
    gauge_transformed,
    identity_rescaling,
    random_rescaling,
)
from tenj.category.generators import (
    from_parameters,
    gen_pointed_braided,
    gen_twisted_dw,
    gen_yetter_2group,
    pointed_preset,
    trivial_category,
)
from tenj.category.io import load_category, save_category
from tenj.category.pachner import (
    check_pachner,
    check_pachner_15,
    check_pachner_24,
    check_pachner_33,
    check_pachner_all,
    check_section_identity,
)

__all__ = [
    "BasisRescaling",
    "Fusion2CatData",
    "LabelSymmetry",
    "check_dimension_identities",
    "check_pachner",
    "check_pachner_15",
    "check_pachner_24",
    "check_pachner_33",
    "check_pachner_all",
    "check_section_identity",
    "constant_rescaling",
    "from_parameters",
    "gauge_transformed",
    "gen_pointed_braided",
    "gen_twisted_dw",
    "gen_yetter_2group",
    "identity_rescaling",
    "load_category",
    "pointed_preset",
    "random_rescaling",
    "same_data",
    "save_category",
    "trivial_category",
    "validate_category",
]
