# -*- coding: utf-8 -*-
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

__version__ = '0.1.0'

from .field import FieldSpec, Scalar, find_root_of_unity
from .poly import Poly, RingCtx
from .groebner import GroebnerBasis, buchberger, ideal_member, normal_form, subalgebra_member
from .group import FiniteMatrixGroup, SquareMatrix, classify_element, classify_group, closure
from .invariants import GroupAction, verify_relation
from .cohomology import CechClass, HsopData, LocalCohomology, PresentedAlgebra, direct_strand_rank
from .problem import ProblemSpec

__all__ = [
    'FieldSpec', 'Scalar', 'find_root_of_unity',
    'Poly', 'RingCtx',
    'GroebnerBasis', 'buchberger', 'ideal_member', 'normal_form', 'subalgebra_member',
    'FiniteMatrixGroup', 'SquareMatrix', 'classify_element', 'classify_group', 'closure',
    'GroupAction', 'verify_relation',
    'CechClass', 'HsopData', 'LocalCohomology', 'PresentedAlgebra', 'direct_strand_rank',
    'ProblemSpec',
]
