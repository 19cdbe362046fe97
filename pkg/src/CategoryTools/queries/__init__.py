from CategoryTools.queries.classify import (MorphismClassification, find_inverse,
                                            is_iso, mono_witness, epi_witness,
                                            classify, classify_all)
from CategoryTools.queries.universal import (
    Cone, UniversalWitness, ConeCategory, find_universal, find_binary,
    check_canonical_isos, check_universal_transport, check_opposite_duality,
    check_product_with_terminal, ChosenProducts, choose_products,
    product_of_morphisms, swap_iso)
