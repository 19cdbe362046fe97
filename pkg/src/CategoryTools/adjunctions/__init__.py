from CategoryTools.adjunctions.adjunction import (
    AdjunctionUnitCounit, AdjunctionHomBijection, identity_adjunction,
    check_triangles, hom_bijection_from_unit_counit,
    unit_counit_from_hom_bijection, check_roundtrip, check_hom_naturality,
    check_adjunction)
from CategoryTools.adjunctions.currying import (currying_adjunction,
                                                right_adjoint_uniqueness)
