"""Constructive Krull and valuative dimension: certificates, lattices and provers."""
from .fields import GF, QQ, FieldSpec
from .polys import ParseError, Poly, parse_poly, poly_arith
from .orders import OrderSpec, compare, grlex, lex, lex_desc, matrix_order, trailing_term
from .groebner import (GroebnerBasis, Ideal, buchberger, ideal_member, ideal_quotient, ideal_quotient_ideal,
                       intersection, normal_form, radical_member, saturation)
from .rings import FracElement, IndicatorPoly, RingElement, RingPresentation, evaluate
from .lattices import (ComplementaryChain, EntailmentTable, LatticeTerm, Status, Verdict, brute_force_models,
                       check_complementary, kdim_leq_on_tuples, leq, table_oracle, term_ops)
from .zariski import ZariskiAtom, ZariskiOracle, joyal_relations_check, zariski_entails
from .dimcerts import (DimCertificate, NestedCollapse, ComponentWitness, dimv_leq_sampled, expand_nested,
                       glue_components, lift_from_reduced, order_independence, search_dim_cert,
                       vdim_leq_sampled, verify_dim_cert)
from .ppring import (ComponentSplit, annihilator, machinery_no1_dimcert, regular_split_check, split_at,
                     split_sequence)
from .valuative import (VAtom, ValCert, ComplementaryChainV, V, build_chain, check_chain, decompose_witness,
                        search_val_cert, subring_presentation, val_oracle, vdim_to_Vdim, verify_val_cert)
from .dynval import DivAtom, ProofTree, div, dyn_entails, replay_proof

__version__ = "0.1.0"
