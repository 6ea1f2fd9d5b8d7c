"""
Twisted-cycle intersection numbers on the genus-zero moduli space.

The package computes the pairing matrix whose inverse is the
trigonometric (string-corrected) KLT kernel: circular orders name the
cycles, associahedron charts glue along twists, and the pairing expands
over admissible trees with Catalan and cotangent weights.  Brute-force
face-lattice oracles and an exactly verified binomial identity back every
fast path.
"""
from .circular import (cyclic_normalize, dihedral_equal, format_order, parse_order,
                       standard_representatives, winding_number)
from .faces import (Face, LabeledTree, enumerate_faces, face_count, face_to_tree,
                    is_admissible, make_face, subfaces, vertex_blocks)
from .gluing import (AmbiguousIntersectionError, TwistOrbit, intersection_face,
                     intersection_face_oracle, twist, twist_orbit)
from .kinematics import (GenericityError, Kinematics, from_json, genericity_check,
                         load, s_subset, sample, to_json)
from .pairing import (PairMatrix, PairValue, diagonal, ft_inverse_kernel, m_value,
                      matrix, oracle_diagonal, oracle_pair, pair)
from .wz import (catalan, certificate_check, cf_face_sum, recurrence_check,
                 wz_lhs, wz_rhs)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousIntersectionError", "Face", "GenericityError", "Kinematics",
    "LabeledTree", "PairMatrix", "PairValue", "TwistOrbit", "catalan",
    "certificate_check", "cf_face_sum", "cyclic_normalize", "diagonal",
    "dihedral_equal", "enumerate_faces", "face_count", "face_to_tree",
    "format_order", "from_json", "ft_inverse_kernel", "genericity_check",
    "intersection_face", "intersection_face_oracle", "is_admissible", "load",
    "m_value", "make_face", "matrix", "oracle_diagonal", "oracle_pair", "pair",
    "parse_order", "recurrence_check", "s_subset", "sample",
    "standard_representatives", "subfaces", "to_json", "twist", "twist_orbit",
    "vertex_blocks", "winding_number", "wz_lhs", "wz_rhs",
]
