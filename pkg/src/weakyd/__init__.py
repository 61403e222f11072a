"""Exact matrix models of weak braided Hopf algebras and their Yetter-Drinfeld modules."""

from .errors import (ClosedFormMismatch, NotIdempotent, ObjectMismatch, ParseError,
                     ProjectionInvalid, SingularAntipode, SingularMatrix, ValidationError,
                     WeakYdError, WybAxiomViolation, YdViolation)
from .fields import GF, QQ, Field, PrimeField, RationalField, parse_field
from .tensor_core import (K, Morphism, SpaceObject, SplitIdempotent, flip, identity,
                          split_idempotent, zero)
from .report import CheckRow, Identity, Report, Verdict, Witness, run_checks
from .algebra_structures import (AlgebraStructure, CoalgebraStructure, ComoduleStructure,
                                 ModuleStructure)
from .wyb_operators import WeakYangBaxter, check_wyb, flip_wyb
from .wbha import Wbha, check_antipode, check_wbb, derived_identity_suite
from .groupoid_factory import (GroupoidSpec, cyclic_group, full_groupoid, group_algebra,
                               groupoid_algebra, matrix_frobenius, frobenius_weak_hopf,
                               product_groupoid)
from .weak_operators import WeakOperatorQuad, check_wo, derived_wo_suite, flip_quad, regular_quad
from .yetter_drinfeld import (YdModule, YdMorphism, base_object, check_yd, verify_coherence,
                              yd_full_report, yd_product)
from .projections_entwining import (EntwiningStructure, Projection, build_projected_module,
                                    check_entwining, check_projection, trivial_projection)
from .adjoint_actions import adjoint_yd_modules, build_adjoint

__version__ = "0.1.0"
