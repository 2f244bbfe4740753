"""Exact linear algebra for bialgebras in the category of left-right
Yetter-Drinfeld-type objects, smash biproducts and double biproducts."""

from .linfield import GF, K, Q, BasedSpace, Field, LinMap
from .report import Check, CheckReport, Witness
from .hopf import BialgebraData, bialgebra, check_bialgebra, solve_antipode
from .lr import LRObject, LRMorphism, YdObject, check_lr_object, braiding, verify_prebraided
from .biproduct import (CONDITIONS, LRAdmissibleCandidate, NotAdmissible, UnverifiedInput,
                        build_biproduct, check_admissible, radford_biproduct, zhang_check)
from .double import DoubleBiproductInput, PairingError, build_double_biproduct, verify_phi
from .fileformat import ParseError, StructureFile, load, parse_structure_file, serialize

__version__ = "0.1.0"
