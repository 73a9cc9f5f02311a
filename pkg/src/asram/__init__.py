"""Exact ramification tests for Artin-Schreier extensions of F_q(t)."""

from .asred import MValResult, m_value, p_degree_totally_ramified, reduce_once
from .criterion import (RamificationReport, b_delta_witness, build_paper_example,
                        classify_ramification, gamma_representatives, inertia_subgroup,
                        minimal_subextension_generators)
from .gf import (GF, FieldSpec, FqElem, hilbert90, modulus_select, norm_to_prime, pth_root,
                 trace_kernel_basis, trace_operator_apply, trace_to_prime)
from .oracle import SearchBound, brute_force_m, coset_valuation_scan, series_root
from .parsing import parse_element, parse_expression, parse_place
from .poly import Poly
from .ratfunc import (Place, RatFunc, infinity_substitute, leading_digit, local_expand,
                      place_validate, valuation)

__version__ = '0.1.0'

__all__ = [
    'MValResult',
    'm_value',
    'p_degree_totally_ramified',
    'reduce_once',
    'RamificationReport',
    'b_delta_witness',
    'build_paper_example',
    'classify_ramification',
    'gamma_representatives',
    'inertia_subgroup',
    'minimal_subextension_generators',
    'GF',
    'FieldSpec',
    'FqElem',
    'hilbert90',
    'modulus_select',
    'norm_to_prime',
    'pth_root',
    'trace_kernel_basis',
    'trace_operator_apply',
    'trace_to_prime',
    'SearchBound',
    'brute_force_m',
    'coset_valuation_scan',
    'series_root',
    'parse_element',
    'parse_expression',
    'parse_place',
    'Poly',
    'Place',
    'RatFunc',
    'infinity_substitute',
    'leading_digit',
    'local_expand',
    'place_validate',
    'valuation',
]
